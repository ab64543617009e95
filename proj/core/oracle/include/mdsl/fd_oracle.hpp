#pragma once

#include "mdsl/hilbert.hpp"
#include "mdsl/problem.hpp"

#include <Eigen/Sparse>

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mdsl::oracle {

/// Second-order finite-difference pencil (M, N) of the operator: each piece
/// carries m + 1 nodes, endpoints included, for 3m + 3 unknowns. Rows at piece
/// ends are constraint rows (zero in N) except the last one, which holds the
/// lambda-dependent condition: -R(f) in M and R'(f) in N.
struct PencilSystem {
    Eigen::SparseMatrix<double> M;
    Eigen::SparseMatrix<double> N;
    int m = 0;
    int pieces = 3;
    std::array<Interval, 3> spans{};

    [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(M.rows()); }
    [[nodiscard]] std::size_t index(int piece, int j) const {
        return static_cast<std::size_t>(piece * (m + 1) + j);
    }
    [[nodiscard]] double h(int piece) const {
        return spans[static_cast<std::size_t>(piece)].length() / m;
    }
    [[nodiscard]] double x(int piece, int j) const {
        const Interval& s = spans[static_cast<std::size_t>(piece)];
        return j == m ? s.hi : s.lo + j * h(piece);
    }
    std::array<double, 4> right_bc{};  // alpha1', alpha2', alpha1, alpha2
};

/// Throws GridTooCoarse for m < 16.
[[nodiscard]] PencilSystem build_pencil(const ValidatedProblem& problem, int m);

/// Same assembly without admissibility checks; used to probe inadmissible specs.
[[nodiscard]] PencilSystem build_pencil_unchecked(const ProblemSpec& spec, int m);

/// One uniform grid on [a, b] with 3m intervals and the potential of piece 0
/// throughout; the interfaces are ignored.
[[nodiscard]] PencilSystem build_single_interval_pencil(const ValidatedProblem& problem, int m);

/// Lowest `count` finite generalized eigenvalues, complex, sorted by real part.
[[nodiscard]] std::vector<std::complex<double>> oracle_spectrum(const PencilSystem& pencil,
                                                                std::size_t count);

/// Real parts of oracle_spectrum; throws EigensolverFailure if any imaginary
/// part exceeds 1e-8.
[[nodiscard]] std::vector<double> oracle_eigenvalues(const PencilSystem& pencil,
                                                     std::size_t count);

/// Solves (lambda N - M) u = (f, f1). Throws SingularSystem.
[[nodiscard]] HVector oracle_resolve(const PencilSystem& pencil, double lambda,
                                     const PieceFunctions& f, double f1);
/// Right-hand side given directly at the nodes (constraint rows are ignored).
[[nodiscard]] HVector oracle_resolve(const PencilSystem& pencil, double lambda,
                                     std::span<const double> node_values, double f1);

/// Elementwise (4 fine - coarse) / 3.
[[nodiscard]] std::vector<double> richardson(std::span<const double> fine,
                                             std::span<const double> coarse);
/// The same on the coarse grid; fine has 2m + 1 samples per piece where
/// coarse has m + 1.
[[nodiscard]] HVector richardson(const HVector& fine, const HVector& coarse);

}  // namespace mdsl::oracle
