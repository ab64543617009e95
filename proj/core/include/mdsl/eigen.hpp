#pragma once

#include "mdsl/fundamental.hpp"
#include "mdsl/hilbert.hpp"
#include "mdsl/problem.hpp"

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mdsl {

enum class SequenceTag { none, prime, double_prime, triple_prime, unmatched };

[[nodiscard]] const char* to_string(SequenceTag tag) noexcept;

struct Eigenpair {
    std::size_t index = 0;
    double lambda = 0.0;
    /// sqrt(|lambda|); for lambda < 0 the root is i * s.
    double s = 0.0;
    bool s_imaginary = false;
    /// phi at lambda scaled to unit H-norm; empty when not requested.
    std::optional<PiecewiseSolution> eigenfunction;
    double h_norm = 0.0;
    double omega_residual = 0.0;
    SequenceTag sequence_tag = SequenceTag::none;
    std::optional<double> s_pred;
};

struct ClusterWarning {
    double lambda_first = 0.0;
    double lambda_second = 0.0;
};

struct EigenOptions {
    double lambda_max = 100.0;
    /// Base spacing of the omega scan; defaults to (pi / (b - a))^2 / 8.
    std::optional<double> scan_step;
    /// Bracket width at which refinement stops, relative to max(1, |lambda|).
    double refine_tol = 1e-12;
    /// Scan start; found by find_lower_bound when absent.
    std::optional<double> lambda_lo;
    bool build_eigenfunctions = true;
    IntegratorOptions integrator;
};

struct EigenResult {
    std::vector<Eigenpair> pairs;
    std::vector<ClusterWarning> warnings;
    double lambda_lo = 0.0;
    std::size_t omega_evaluations = 0;
};

[[nodiscard]] double default_scan_step(const ValidatedProblem& problem);

/// A lambda_lo below which omega keeps one sign. Probes downward with doubling
/// width until three consecutive probe windows show constant sign and
/// monotone |omega|; returns the top of that window.
/// Throws BoundSearchExhausted after max_probes windows.
[[nodiscard]] double find_lower_bound(const ValidatedProblem& problem,
                                      const IntegratorOptions& options = {},
                                      int max_probes = 48);

/// Real zeros of omega in [lambda_lo, lambda_max], sorted.
[[nodiscard]] EigenResult find_eigenvalues(const ValidatedProblem& problem,
                                           const EigenOptions& options);

/// Residuals of the differential equation, the left condition, the
/// lambda-dependent right condition and the transmission conditions.
[[nodiscard]] ResidualReport solution_residuals(const ValidatedProblem& problem, double lambda,
                                                const PiecewiseSolution& u);
[[nodiscard]] ResidualReport eigenfunction_residuals(const Eigenpair& pair,
                                                     const ValidatedProblem& problem);

/// Winding number of omega along the boundary of the rectangle centred at
/// `center`. Throws ZeroOnContour if omega vanishes on (or too close to) it.
[[nodiscard]] int count_zeros_contour(const ValidatedProblem& problem,
                                      std::complex<double> center, double half_width,
                                      double half_height, std::size_t n_samples = 64,
                                      const IntegratorOptions& options = {});

struct SweepRow {
    double epsilon = 0.0;
    std::vector<std::optional<double>> lambdas;  // padded with nullopt
    std::string error;                           // empty on success
};

struct SweepTable {
    std::vector<SweepRow> rows;
    std::size_t columns = 0;
};

/// lambda_n(epsilon) for each epsilon; failures are recorded per row.
[[nodiscard]] SweepTable sweep_epsilon(const ProblemSpec& base, const std::vector<double>& eps,
                                       const EigenOptions& options);

}  // namespace mdsl
