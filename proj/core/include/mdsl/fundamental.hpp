#pragma once

#include "mdsl/ivp.hpp"
#include "mdsl/problem.hpp"

#include <array>
#include <complex>
#include <optional>

namespace mdsl {

enum class SolutionKind { phi, chi, custom };

/// Which one-sided limit to take at an interface.
enum class Side { left, right };

/// A solution of the transmission problem on I1, I2 and I3 at one lambda.
class PiecewiseSolution {
public:
    [[nodiscard]] SolutionKind kind() const noexcept { return kind_; }
    [[nodiscard]] double lambda() const noexcept { return lambda_; }
    [[nodiscard]] const SolutionPath& piece(int i) const { return pieces_.at(i); }
    [[nodiscard]] double x_minus() const noexcept { return x_minus_; }
    [[nodiscard]] double x_plus() const noexcept { return x_plus_; }
    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }

    /// State at x; throws PointOnInterface at x- and x+.
    [[nodiscard]] StateVector at(double x) const;
    /// State at x with an explicit one-sided limit at the interfaces.
    [[nodiscard]] StateVector at(double x, Side side) const;

    [[nodiscard]] StateVector left_end() const;
    [[nodiscard]] StateVector right_end() const;

    [[nodiscard]] PiecewiseSolution scaled(double c) const;

private:
    friend PiecewiseSolution shoot_from_left(const ValidatedProblem&, double, StateVector,
                                             const IntegratorOptions&);
    friend PiecewiseSolution shoot_from_right(const ValidatedProblem&, double, StateVector,
                                              const IntegratorOptions&);
    friend PiecewiseSolution phi(const ValidatedProblem&, double, const IntegratorOptions&);
    friend PiecewiseSolution chi(const ValidatedProblem&, double, const IntegratorOptions&);

    [[nodiscard]] StateVector piece_state(int piece, double x) const;

    std::array<SolutionPath, 3> pieces_;
    SolutionKind kind_ = SolutionKind::custom;
    double lambda_ = 0.0;
    double a_ = 0.0;
    double b_ = 0.0;
    double x_minus_ = 0.0;
    double x_plus_ = 0.0;
};

/// Forward shot from a with the given initial state, through t_left and t_right.
[[nodiscard]] PiecewiseSolution shoot_from_left(const ValidatedProblem& problem, double lambda,
                                                StateVector at_a,
                                                const IntegratorOptions& options = {});

/// Backward shot from b through the inverse transmission maps.
[[nodiscard]] PiecewiseSolution shoot_from_right(const ValidatedProblem& problem, double lambda,
                                                 StateVector at_b,
                                                 const IntegratorOptions& options = {});

/// Left solution: (u, u')(a) = (beta2, -beta1).
[[nodiscard]] PiecewiseSolution phi(const ValidatedProblem& problem, double lambda,
                                    const IntegratorOptions& options = {});

/// Right solution: (u, u')(b) = (alpha2' lambda + alpha2, alpha1' lambda + alpha1).
[[nodiscard]] PiecewiseSolution chi(const ValidatedProblem& problem, double lambda,
                                    const IntegratorOptions& options = {});

struct CharacteristicValue {
    double omega1 = 0.0;
    double omega2 = 0.0;
    double omega3 = 0.0;
    double omega = 0.0;
};

/// Piece Wronskians of (phi, chi) at the piece midpoints, plus omega from the
/// end evaluation of phi at b.
[[nodiscard]] CharacteristicValue characteristic(const ValidatedProblem& problem, double lambda,
                                                 const IntegratorOptions& options = {});

/// End-evaluation omega only; integrates phi without storing a path.
[[nodiscard]] double omega(const ValidatedProblem& problem, double lambda,
                           const IntegratorOptions& options = {});
[[nodiscard]] std::complex<double> omega(const ValidatedProblem& problem,
                                         std::complex<double> lambda,
                                         const IntegratorOptions& options = {});

/// phi(b) state via propagation only.
[[nodiscard]] StateVector phi_at_b(const ValidatedProblem& problem, double lambda,
                                   const IntegratorOptions& options = {});

/// omega from an end state of phi: ((lambda a1' + a1) u - (lambda a2' + a2) u') / (D1 D2).
[[nodiscard]] double omega_from_end(const ValidatedProblem& problem, double lambda,
                                    StateVector phi_b);

/// W(f, g; x) = f g' - f' g. At an interface a side must be given.
/// Throws MismatchedLambda if the solutions were built at different lambda.
[[nodiscard]] double wronskian(const PiecewiseSolution& f, const PiecewiseSolution& g, double x,
                               std::optional<Side> side = std::nullopt);

[[nodiscard]] inline double wronskian(StateVector f, StateVector g) {
    return f.u * g.up - f.up * g.u;
}

}  // namespace mdsl
