#pragma once

#include "mdsl/problem.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mdsl {

/// Complex state used when the spectral parameter leaves the real axis.
struct ComplexState {
    std::complex<double> u;
    std::complex<double> up;
};

struct IntegratorOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    std::size_t max_steps = 2'000'000;

    /// rtol = tol, atol = tol / 100.
    [[nodiscard]] static IntegratorOptions from_tol(double tol) { return {tol, tol * 1e-2}; }
};

/// Accepted steps of one integration of -u'' + q u = lambda u over a single
/// subinterval. Nodes are strictly monotone in the integration direction.
///
/// Evaluation between nodes takes one Dormand-Prince 8(5,3) step from the
/// preceding node, so interpolated states carry the same local accuracy as the
/// stored ones.
class SolutionPath {
public:
    SolutionPath() = default;

    [[nodiscard]] double lambda() const noexcept { return lambda_; }
    [[nodiscard]] double x_from() const noexcept { return xs_.front(); }
    [[nodiscard]] double x_to() const noexcept { return xs_.back(); }
    [[nodiscard]] bool forward() const noexcept { return xs_.back() > xs_.front(); }
    [[nodiscard]] bool empty() const noexcept { return xs_.empty(); }

    [[nodiscard]] std::span<const double> nodes() const noexcept { return xs_; }
    [[nodiscard]] std::span<const StateVector> states() const noexcept { return ys_; }
    [[nodiscard]] StateVector front() const { return ys_.front(); }
    [[nodiscard]] StateVector back() const { return ys_.back(); }

    /// State at any x in the closed span of the path.
    [[nodiscard]] StateVector at(double x) const;

    /// The path of c times this solution (exact by linearity).
    [[nodiscard]] SolutionPath scaled(double c) const;

private:
    friend SolutionPath integrate(const Potential&, double, double, double, StateVector,
                                  const IntegratorOptions&);

    Potential q_;
    double lambda_ = 0.0;
    std::vector<double> xs_;
    std::vector<StateVector> ys_;
};

/// Integrates -u'' + q(x) u = lambda u from x_from to x_to (either direction)
/// starting at `init`, recording every accepted step.
///
/// Throws Error(StepSizeUnderflow) if the step size collapses and
/// Error(NonFinitePotential) if q returns a non-finite value.
[[nodiscard]] SolutionPath integrate(const Potential& q, double lambda, double x_from, double x_to,
                                     StateVector init, const IntegratorOptions& options = {});

/// Same ODE, returning only the end state (no path storage).
[[nodiscard]] StateVector propagate(const Potential& q, double lambda, double x_from, double x_to,
                                    StateVector init, const IntegratorOptions& options = {});

/// Complex spectral parameter; the state is carried as four real components.
[[nodiscard]] ComplexState propagate(const Potential& q, std::complex<double> lambda, double x_from,
                                     double x_to, ComplexState init,
                                     const IntegratorOptions& options = {});

}  // namespace mdsl
