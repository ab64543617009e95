#pragma once

#include "mdsl/fundamental.hpp"
#include "mdsl/problem.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace mdsl {

inline constexpr std::size_t kDefaultPointsPerPiece = 801;

/// Uniform samples of one piece, endpoints included (one-sided values).
struct SampledPiece {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> values;

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    [[nodiscard]] double h() const { return (hi - lo) / static_cast<double>(values.size() - 1); }
    [[nodiscard]] double x(std::size_t j) const {
        return j + 1 == values.size() ? hi : lo + static_cast<double>(j) * h();
    }
};

/// Element (f, f1) of L2(a, b) + C, sampled piecewise.
struct HVector {
    std::array<SampledPiece, 3> pieces;
    double f1 = 0.0;
};

using PieceFunctions = std::array<std::function<double(double)>, 3>;

[[nodiscard]] HVector sample(const ValidatedProblem& problem, const PieceFunctions& f, double f1,
                             std::size_t points_per_piece = kDefaultPointsPerPiece);
/// The same function on all three pieces.
[[nodiscard]] HVector sample(const ValidatedProblem& problem, const std::function<double(double)>& f,
                             double f1, std::size_t points_per_piece = kDefaultPointsPerPiece);
/// Values of a solution, one-sided at the interfaces.
[[nodiscard]] HVector sample(const ValidatedProblem& problem, const PiecewiseSolution& u, double f1,
                             std::size_t points_per_piece = kDefaultPointsPerPiece);

struct RValues {
    double r = 0.0;        // alpha1 f(b) - alpha2 f'(b)
    double r_prime = 0.0;  // alpha1' f(b) - alpha2' f'(b)
};

[[nodiscard]] RValues r_functionals(StateVector at_b, const RightBC& bc);
/// f'(b) from a one-sided 5-point stencil on the last piece.
[[nodiscard]] RValues r_functionals(const HVector& f, const RightBC& bc);

/// Weighted inner product of H. Grids of differing sizes are first
/// interpolated onto the finer of the two.
[[nodiscard]] double inner_product(const HVector& f, const HVector& g,
                                   const ValidatedProblem& problem);
[[nodiscard]] double h_norm(const HVector& f, const ValidatedProblem& problem);

/// Closed-form piece with its first two derivatives.
struct SmoothPiece {
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::function<double(double)> d2f;
};

/// Candidate element of D(A): smooth pieces plus the scalar component.
struct DomainElement {
    std::array<SmoothPiece, 3> pieces;
    double f1 = 0.0;
};

[[nodiscard]] HVector sample(const ValidatedProblem& problem, const DomainElement& f,
                             std::size_t points_per_piece = kDefaultPointsPerPiece);

/// Random element of D(A): a short trigonometric polynomial on each piece plus
/// a linear term chosen so that the left condition and both transmission
/// conditions hold exactly. Deterministic in `seed`.
[[nodiscard]] DomainElement make_domain_element(const ValidatedProblem& problem,
                                                std::uint64_t seed, int harmonics = 3);

/// (tau f, -R(f)) with tau f = -f'' + q f. Throws NotInDomain naming the
/// first violated condition (B_a, T-eps, T'-eps, T+eps, T'+eps, f1 = R'(f)).
[[nodiscard]] HVector apply_A(const DomainElement& f, const ValidatedProblem& problem,
                              std::size_t points_per_piece = kDefaultPointsPerPiece,
                              double tol = 1e-8);

/// phi, chi and omega at one non-eigenvalue lambda.
class ResolventContext {
public:
    /// Throws LambdaIsEigenvalue if omega vanishes or changes sign within
    /// 1e-6 max(1, |lambda|) of lambda.
    ResolventContext(const ValidatedProblem& problem, double lambda,
                     const IntegratorOptions& options = {});

    [[nodiscard]] const ValidatedProblem& problem() const noexcept { return problem_; }
    [[nodiscard]] double lambda() const noexcept { return lambda_; }
    [[nodiscard]] double omega() const noexcept { return omega_; }
    [[nodiscard]] const PiecewiseSolution& phi() const noexcept { return phi_; }
    [[nodiscard]] const PiecewiseSolution& chi() const noexcept { return chi_; }

    /// phi(min(x, y)) chi(max(x, y)) / omega.
    [[nodiscard]] double green(double x, double y) const;

private:
    ValidatedProblem problem_;
    double lambda_;
    PiecewiseSolution phi_;
    PiecewiseSolution chi_;
    double omega_ = 0.0;
};

struct GreenEvaluation {
    double x = 0.0;
    double y = 0.0;
    double value = 0.0;
    double lambda = 0.0;
};

/// Throws LambdaIsEigenvalue or PointOnInterface.
[[nodiscard]] GreenEvaluation green(const ValidatedProblem& problem, double lambda, double x,
                                    double y, const IntegratorOptions& options = {});

struct ResolventResult {
    HVector u;                                   // u.f1 = R'(u)
    std::array<std::vector<double>, 3> du;       // u' on the same grids
};

/// U = (lambda I - A)^{-1} F on the grids of f.
[[nodiscard]] ResolventResult resolve(const ResolventContext& ctx, const HVector& f);
[[nodiscard]] ResolventResult resolve(const ValidatedProblem& problem, double lambda,
                                      const HVector& f, const IntegratorOptions& options = {});

struct ResidualReport {
    double ode = 0.0;
    double left_bc = 0.0;
    double right_bc = 0.0;
    /// Value/derivative conditions at x- and at x+.
    std::array<double, 4> transmission{};

    [[nodiscard]] double max() const;
};

/// Residuals of lambda u - tau u = f, the left condition, lambda R'(u) + R(u) = f1
/// and the four transmission conditions, from the sampled resolvent.
[[nodiscard]] ResidualReport resolvent_residuals(const ValidatedProblem& problem, double lambda,
                                                 const HVector& f, const ResolventResult& r);

}  // namespace mdsl
