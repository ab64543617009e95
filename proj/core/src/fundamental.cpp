#include "mdsl/fundamental.hpp"

#include "mdsl/error.hpp"

#include <cmath>
#include <string>

namespace mdsl {

namespace {

ComplexState apply(const TransmissionMatrix& t, ComplexState s) {
    return {t.m11 * s.u + t.m12 * s.up, t.m21 * s.u + t.m22 * s.up};
}

}  // namespace

StateVector PiecewiseSolution::piece_state(int piece, double x) const {
    return pieces_[static_cast<std::size_t>(piece)].at(x);
}

StateVector PiecewiseSolution::at(double x) const {
    if (x == x_minus_ || x == x_plus_) {
        throw Error(Errc::PointOnInterface,
                    "x = " + std::to_string(x) + " is an interface; request a one-sided limit");
    }
    return at(x, Side::left);
}

StateVector PiecewiseSolution::at(double x, Side side) const {
    if (!(x >= a_ && x <= b_)) {
        throw Error(Errc::InvalidArgument, "x = " + std::to_string(x) + " lies outside [a, b]");
    }
    if (x == x_minus_) return piece_state(side == Side::left ? 0 : 1, x);
    if (x == x_plus_) return piece_state(side == Side::left ? 1 : 2, x);
    if (x < x_minus_) return piece_state(0, x);
    if (x < x_plus_) return piece_state(1, x);
    return piece_state(2, x);
}

StateVector PiecewiseSolution::left_end() const { return piece_state(0, a_); }

StateVector PiecewiseSolution::right_end() const { return piece_state(2, b_); }

PiecewiseSolution PiecewiseSolution::scaled(double c) const {
    PiecewiseSolution out = *this;
    for (SolutionPath& p : out.pieces_) p = p.scaled(c);
    return out;
}

PiecewiseSolution shoot_from_left(const ValidatedProblem& problem, double lambda, StateVector at_a,
                                  const IntegratorOptions& options) {
    PiecewiseSolution s;
    s.lambda_ = lambda;
    s.a_ = problem.a();
    s.b_ = problem.b();
    s.x_minus_ = problem.x_minus();
    s.x_plus_ = problem.x_plus();
    s.pieces_[0] = integrate(problem.q(0), lambda, s.a_, s.x_minus_, at_a, options);
    s.pieces_[1] = integrate(problem.q(1), lambda, s.x_minus_, s.x_plus_,
                             problem.t_left().apply(s.pieces_[0].back()), options);
    s.pieces_[2] = integrate(problem.q(2), lambda, s.x_plus_, s.b_,
                             problem.t_right().apply(s.pieces_[1].back()), options);
    return s;
}

PiecewiseSolution shoot_from_right(const ValidatedProblem& problem, double lambda,
                                   StateVector at_b, const IntegratorOptions& options) {
    PiecewiseSolution s;
    s.lambda_ = lambda;
    s.a_ = problem.a();
    s.b_ = problem.b();
    s.x_minus_ = problem.x_minus();
    s.x_plus_ = problem.x_plus();
    s.pieces_[2] = integrate(problem.q(2), lambda, s.b_, s.x_plus_, at_b, options);
    s.pieces_[1] = integrate(problem.q(1), lambda, s.x_plus_, s.x_minus_,
                             problem.t_right().apply_inverse(s.pieces_[2].back()), options);
    s.pieces_[0] = integrate(problem.q(0), lambda, s.x_minus_, s.a_,
                             problem.t_left().apply_inverse(s.pieces_[1].back()), options);
    return s;
}

PiecewiseSolution phi(const ValidatedProblem& problem, double lambda,
                      const IntegratorOptions& options) {
    const LeftBC& l = problem.left_bc();
    PiecewiseSolution s = shoot_from_left(problem, lambda, {l.beta2, -l.beta1}, options);
    s.kind_ = SolutionKind::phi;
    return s;
}

PiecewiseSolution chi(const ValidatedProblem& problem, double lambda,
                      const IntegratorOptions& options) {
    const RightBC& r = problem.right_bc();
    PiecewiseSolution s = shoot_from_right(
        problem, lambda, {r.alpha2p * lambda + r.alpha2, r.alpha1p * lambda + r.alpha1}, options);
    s.kind_ = SolutionKind::chi;
    return s;
}

StateVector phi_at_b(const ValidatedProblem& problem, double lambda,
                     const IntegratorOptions& options) {
    const LeftBC& l = problem.left_bc();
    StateVector y{l.beta2, -l.beta1};
    y = propagate(problem.q(0), lambda, problem.a(), problem.x_minus(), y, options);
    y = propagate(problem.q(1), lambda, problem.x_minus(), problem.x_plus(),
                  problem.t_left().apply(y), options);
    return propagate(problem.q(2), lambda, problem.x_plus(), problem.b(),
                     problem.t_right().apply(y), options);
}

double omega_from_end(const ValidatedProblem& problem, double lambda, StateVector phi_b) {
    const RightBC& r = problem.right_bc();
    return ((lambda * r.alpha1p + r.alpha1) * phi_b.u - (lambda * r.alpha2p + r.alpha2) * phi_b.up) /
           (problem.d1() * problem.d2());
}

double omega(const ValidatedProblem& problem, double lambda, const IntegratorOptions& options) {
    return omega_from_end(problem, lambda, phi_at_b(problem, lambda, options));
}

std::complex<double> omega(const ValidatedProblem& problem, std::complex<double> lambda,
                           const IntegratorOptions& options) {
    const LeftBC& l = problem.left_bc();
    ComplexState y{l.beta2, -l.beta1};
    y = propagate(problem.q(0), lambda, problem.a(), problem.x_minus(), y, options);
    y = propagate(problem.q(1), lambda, problem.x_minus(), problem.x_plus(),
                  apply(problem.t_left(), y), options);
    y = propagate(problem.q(2), lambda, problem.x_plus(), problem.b(),
                  apply(problem.t_right(), y), options);
    const RightBC& r = problem.right_bc();
    return ((lambda * r.alpha1p + r.alpha1) * y.u - (lambda * r.alpha2p + r.alpha2) * y.up) /
           (problem.d1() * problem.d2());
}

CharacteristicValue characteristic(const ValidatedProblem& problem, double lambda,
                                   const IntegratorOptions& options) {
    const PiecewiseSolution f = phi(problem, lambda, options);
    const PiecewiseSolution g = chi(problem, lambda, options);
    CharacteristicValue cv;
    cv.omega1 = wronskian(f, g, problem.piece(0).mid());
    cv.omega2 = wronskian(f, g, problem.piece(1).mid());
    cv.omega3 = wronskian(f, g, problem.piece(2).mid());
    cv.omega = omega_from_end(problem, lambda, f.right_end());
    return cv;
}

double wronskian(const PiecewiseSolution& f, const PiecewiseSolution& g, double x,
                 std::optional<Side> side) {
    if (f.lambda() != g.lambda()) {
        throw Error(Errc::MismatchedLambda, "Wronskian of solutions built at different lambda");
    }
    if (side) return wronskian(f.at(x, *side), g.at(x, *side));
    return wronskian(f.at(x), g.at(x));
}

}  // namespace mdsl
