#include "mdsl/problem.hpp"

#include "mdsl/error.hpp"

#include <cmath>
#include <sstream>

namespace mdsl {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void check_potential_piece(const Potential& q, Interval span, int piece) {
    if (!q) {
        throw Error(Errc::PotentialNonFinite,
                    "potential piece " + std::to_string(piece + 1) + " is empty");
    }
    constexpr int kProbes = 17;
    for (int k = 0; k < kProbes; ++k) {
        const double x = span.lo + span.length() * k / (kProbes - 1);
        const double v = q(x);
        if (!std::isfinite(v)) {
            throw Error(Errc::PotentialNonFinite, "potential piece " + std::to_string(piece + 1) +
                                                      " is not finite at x = " + fmt(x));
        }
    }
}

}  // namespace

PiecewisePotential PiecewisePotential::zero() { return constant(0.0); }

PiecewisePotential PiecewisePotential::constant(double c) {
    return uniform([c](double) { return c; });
}

PiecewisePotential PiecewisePotential::uniform(Potential q) { return {{q, q, q}}; }

ValidatedProblem::ValidatedProblem(ProblemSpec spec) : spec_(std::move(spec)) {
    theta_ = 0.5 * (spec_.a + spec_.b);
    x_minus_ = theta_ - spec_.epsilon;
    x_plus_ = theta_ + spec_.epsilon;
    d1_ = spec_.t_left.det();
    d2_ = spec_.t_right.det();
    rho_ = spec_.right_bc.rho();
}

Interval ValidatedProblem::piece(int piece) const {
    switch (piece) {
        case 0: return {spec_.a, x_minus_};
        case 1: return {x_minus_, x_plus_};
        case 2: return {x_plus_, spec_.b};
        default: throw Error(Errc::InvalidArgument, "piece index must be 0, 1 or 2");
    }
}

int ValidatedProblem::piece_of(double x) const noexcept {
    if (x >= spec_.a && x < x_minus_) return 0;
    if (x > x_minus_ && x < x_plus_) return 1;
    if (x > x_plus_ && x <= spec_.b) return 2;
    return -1;
}

double ValidatedProblem::weight(int piece) const {
    switch (piece) {
        case 0: return 1.0;
        case 1: return 1.0 / d1_;
        case 2: return 1.0 / (d1_ * d2_);
        default: throw Error(Errc::InvalidArgument, "piece index must be 0, 1 or 2");
    }
}

ValidatedProblem validate(const ProblemSpec& spec) {
    const auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(spec.a) || !finite(spec.b) || !(spec.a < spec.b)) {
        throw Error(Errc::EpsilonOutOfRange,
                    "interval endpoints must be finite with a < b (a = " + fmt(spec.a) +
                        ", b = " + fmt(spec.b) + ")");
    }
    const double half = 0.5 * (spec.b - spec.a);
    if (!finite(spec.epsilon) || !(spec.epsilon > 0.0) || !(spec.epsilon < half)) {
        throw Error(Errc::EpsilonOutOfRange, "epsilon must satisfy 0 < epsilon < (b - a)/2 = " +
                                                 fmt(half) + " (got " + fmt(spec.epsilon) + ")");
    }
    const LeftBC& l = spec.left_bc;
    if (!finite(l.beta1) || !finite(l.beta2) || (l.beta1 == 0.0 && l.beta2 == 0.0)) {
        throw Error(Errc::DegenerateLeftBC, "left boundary condition needs |beta1| + |beta2| != 0");
    }
    const RightBC& r = spec.right_bc;
    const double rho = r.rho();
    if (!finite(rho) || !(rho > 0.0)) {
        throw Error(Errc::RhoNotPositive,
                    "rho = alpha1'*alpha2 - alpha2'*alpha1 must be > 0 (got " + fmt(rho) + ")");
    }
    const double d1 = spec.t_left.det();
    if (!finite(d1) || !(d1 > 0.0)) {
        throw Error(Errc::DeterminantNotPositive,
                    "D1 = mu1*mu2' - mu2*mu1' must be > 0 (got " + fmt(d1) + ")");
    }
    const double d2 = spec.t_right.det();
    if (!finite(d2) || !(d2 > 0.0)) {
        throw Error(Errc::DeterminantNotPositive,
                    "D2 = eta1*eta2' - eta2*eta1' must be > 0 (got " + fmt(d2) + ")");
    }

    ValidatedProblem out(spec);
    for (int i = 0; i < 3; ++i) check_potential_piece(spec.potential.pieces[i], out.piece(i), i);
    return out;
}

ValidatedProblem validate(const ValidatedProblem& problem) { return validate(problem.spec()); }

std::pair<double, double> discontinuity_points(const ValidatedProblem& problem) {
    return {problem.x_minus(), problem.x_plus()};
}

}  // namespace mdsl
