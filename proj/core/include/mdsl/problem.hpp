#pragma once

#include <array>
#include <functional>
#include <utility>

namespace mdsl {

/// Value and first derivative of a solution at one point.
struct StateVector {
    double u = 0.0;
    double up = 0.0;
};

/// Real potential restricted to one subinterval; receives the global x.
using Potential = std::function<double(double)>;

/// 2x2 coupling matrix of a transmission condition, acting on (u, u') from
/// the left side of an interface to give (u, u') on the right side.
///
/// For the left interface the entries are (mu1, mu2, mu1', mu2'); for the
/// right interface (eta1, eta2, eta1', eta2').
struct TransmissionMatrix {
    double m11 = 1.0;
    double m12 = 0.0;
    double m21 = 0.0;
    double m22 = 1.0;

    [[nodiscard]] static constexpr TransmissionMatrix identity() { return {}; }

    [[nodiscard]] constexpr double det() const { return m11 * m22 - m12 * m21; }

    [[nodiscard]] constexpr StateVector apply(StateVector s) const {
        return {m11 * s.u + m12 * s.up, m21 * s.u + m22 * s.up};
    }

    /// Exact inverse map; requires det() != 0.
    [[nodiscard]] constexpr StateVector apply_inverse(StateVector s) const {
        const double d = det();
        return {(m22 * s.u - m12 * s.up) / d, (-m21 * s.u + m11 * s.up) / d};
    }
};

/// beta1 u(a) + beta2 u'(a) = 0.
struct LeftBC {
    double beta1 = 1.0;
    double beta2 = 0.0;
};

/// lambda (alpha1' u(b) - alpha2' u'(b)) + (alpha1 u(b) - alpha2 u'(b)) = 0.
struct RightBC {
    double alpha1p = 1.0;
    double alpha2p = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 1.0;

    [[nodiscard]] constexpr double rho() const { return alpha1p * alpha2 - alpha2p * alpha1; }
};

/// Three independent potential pieces on [a, x-], [x-, x+] and [x+, b]. Each
/// piece is evaluated on its closed subinterval, so the one-sided limits at the
/// interfaces are the endpoint values of the neighbouring pieces.
struct PiecewisePotential {
    std::array<Potential, 3> pieces;

    [[nodiscard]] static PiecewisePotential zero();
    [[nodiscard]] static PiecewisePotential constant(double c);
    [[nodiscard]] static PiecewisePotential uniform(Potential q);
};

struct ProblemSpec {
    double a = 0.0;
    double b = 1.0;
    double epsilon = 0.25;
    LeftBC left_bc;
    RightBC right_bc;
    TransmissionMatrix t_left;
    TransmissionMatrix t_right;
    PiecewisePotential potential = PiecewisePotential::zero();
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] constexpr double length() const { return hi - lo; }
    [[nodiscard]] constexpr double mid() const { return 0.5 * (lo + hi); }
};

/// A problem whose admissibility conditions have been checked, together with
/// its derived geometry and determinants. Immutable; cheap to copy apart from
/// the three potential callables.
class ValidatedProblem {
public:
    [[nodiscard]] const ProblemSpec& spec() const noexcept { return spec_; }

    [[nodiscard]] double a() const noexcept { return spec_.a; }
    [[nodiscard]] double b() const noexcept { return spec_.b; }
    [[nodiscard]] double epsilon() const noexcept { return spec_.epsilon; }
    [[nodiscard]] double theta() const noexcept { return theta_; }
    [[nodiscard]] double x_minus() const noexcept { return x_minus_; }
    [[nodiscard]] double x_plus() const noexcept { return x_plus_; }
    [[nodiscard]] double d1() const noexcept { return d1_; }
    [[nodiscard]] double d2() const noexcept { return d2_; }
    [[nodiscard]] double rho() const noexcept { return rho_; }

    [[nodiscard]] const LeftBC& left_bc() const noexcept { return spec_.left_bc; }
    [[nodiscard]] const RightBC& right_bc() const noexcept { return spec_.right_bc; }
    [[nodiscard]] const TransmissionMatrix& t_left() const noexcept { return spec_.t_left; }
    [[nodiscard]] const TransmissionMatrix& t_right() const noexcept { return spec_.t_right; }

    /// Subinterval I_{piece+1} for piece in {0, 1, 2}.
    [[nodiscard]] Interval piece(int piece) const;
    [[nodiscard]] const Potential& q(int piece) const { return spec_.potential.pieces.at(piece); }

    /// Piece index whose open interior or outer endpoint contains x; the
    /// interfaces themselves belong to no piece and yield -1.
    [[nodiscard]] int piece_of(double x) const noexcept;

    /// Weight of piece i in the inner product: 1, 1/D1, 1/(D1 D2).
    [[nodiscard]] double weight(int piece) const;

    friend ValidatedProblem validate(const ProblemSpec& spec);

private:
    explicit ValidatedProblem(ProblemSpec spec);

    ProblemSpec spec_;
    double theta_ = 0.0;
    double x_minus_ = 0.0;
    double x_plus_ = 0.0;
    double d1_ = 1.0;
    double d2_ = 1.0;
    double rho_ = 1.0;
};

/// Checks the admissibility conditions and derives the geometry. Throws
/// mdsl::Error with RhoNotPositive, DeterminantNotPositive, DegenerateLeftBC,
/// EpsilonOutOfRange or PotentialNonFinite.
[[nodiscard]] ValidatedProblem validate(const ProblemSpec& spec);

/// Re-validation is the identity on derived values.
[[nodiscard]] ValidatedProblem validate(const ValidatedProblem& problem);

/// (theta - epsilon, theta + epsilon) with theta = (a + b) / 2.
[[nodiscard]] std::pair<double, double> discontinuity_points(const ValidatedProblem& problem);

}  // namespace mdsl
