#include "mdsl/hilbert.hpp"

#include "mdsl/error.hpp"
#include "mdsl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace mdsl {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

SampledPiece sample_piece(Interval span, std::size_t n, const std::function<double(double)>& f) {
    if (n < 5) throw Error(Errc::InvalidArgument, "need at least 5 samples per piece");
    SampledPiece p{span.lo, span.hi, std::vector<double>(n)};
    for (std::size_t j = 0; j < n; ++j) p.values[j] = f(p.x(j));
    return p;
}

/// Local cubic Lagrange interpolation onto n uniform points.
SampledPiece resample(const SampledPiece& p, std::size_t n) {
    if (p.size() == n) return p;
    const std::size_t m = p.size();
    const double h = p.h();
    SampledPiece out{p.lo, p.hi, std::vector<double>(n)};
    for (std::size_t j = 0; j < n; ++j) {
        const double x = out.x(j);
        const double t = (x - p.lo) / h;
        auto k0 = static_cast<std::ptrdiff_t>(std::floor(t)) - 1;
        k0 = std::clamp<std::ptrdiff_t>(k0, 0, static_cast<std::ptrdiff_t>(m) - 4);
        double v = 0.0;
        for (std::ptrdiff_t i = 0; i < 4; ++i) {
            double w = 1.0;
            for (std::ptrdiff_t l = 0; l < 4; ++l) {
                if (l != i) w *= (t - static_cast<double>(k0 + l)) / static_cast<double>(i - l);
            }
            v += w * p.values[static_cast<std::size_t>(k0 + i)];
        }
        out.values[j] = v;
    }
    return out;
}

double rel(double residual, double scale) { return std::abs(residual) / std::max(1.0, scale); }

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

HVector sample(const ValidatedProblem& problem, const PieceFunctions& f, double f1,
               std::size_t points_per_piece) {
    HVector out;
    for (int i = 0; i < 3; ++i) {
        out.pieces[static_cast<std::size_t>(i)] =
            sample_piece(problem.piece(i), points_per_piece, f[static_cast<std::size_t>(i)]);
    }
    out.f1 = f1;
    return out;
}

HVector sample(const ValidatedProblem& problem, const std::function<double(double)>& f, double f1,
               std::size_t points_per_piece) {
    return sample(problem, PieceFunctions{f, f, f}, f1, points_per_piece);
}

HVector sample(const ValidatedProblem& problem, const PiecewiseSolution& u, double f1,
               std::size_t points_per_piece) {
    PieceFunctions f;
    for (int i = 0; i < 3; ++i) {
        f[static_cast<std::size_t>(i)] = [&u, i](double x) { return u.piece(i).at(x).u; };
    }
    return sample(problem, f, f1, points_per_piece);
}

HVector sample(const ValidatedProblem& problem, const DomainElement& f,
               std::size_t points_per_piece) {
    return sample(problem, PieceFunctions{f.pieces[0].f, f.pieces[1].f, f.pieces[2].f}, f.f1,
                  points_per_piece);
}

RValues r_functionals(StateVector at_b, const RightBC& bc) {
    return {bc.alpha1 * at_b.u - bc.alpha2 * at_b.up, bc.alpha1p * at_b.u - bc.alpha2p * at_b.up};
}

RValues r_functionals(const HVector& f, const RightBC& bc) {
    const SampledPiece& p = f.pieces[2];
    return r_functionals(StateVector{p.values.back(), end_derivative(p.values, p.h(), true)}, bc);
}

double inner_product(const HVector& f, const HVector& g, const ValidatedProblem& problem) {
    double total = 0.0;
    for (int i = 0; i < 3; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const std::size_t n = std::max(f.pieces[k].size(), g.pieces[k].size());
        const SampledPiece fp = resample(f.pieces[k], n);
        const SampledPiece gp = resample(g.pieces[k], n);
        std::vector<double> prod(n);
        for (std::size_t j = 0; j < n; ++j) prod[j] = fp.values[j] * gp.values[j];
        total += problem.weight(i) * simpson(prod, fp.h());
    }
    return total + f.f1 * g.f1 / (problem.rho() * problem.d1() * problem.d2());
}

double h_norm(const HVector& f, const ValidatedProblem& problem) {
    return std::sqrt(std::max(0.0, inner_product(f, f, problem)));
}

DomainElement make_domain_element(const ValidatedProblem& problem, std::uint64_t seed,
                                  int harmonics) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);

    DomainElement out;
    StateVector incoming{};
    for (int i = 0; i < 3; ++i) {
        const Interval span = problem.piece(i);
        const double w = std::numbers::pi / span.length();
        std::vector<double> sn(static_cast<std::size_t>(harmonics));
        std::vector<double> cs(sn.size());
        for (int k = 0; k < harmonics; ++k) {
            sn[static_cast<std::size_t>(k)] = coef(rng) / (k + 1);
            cs[static_cast<std::size_t>(k)] = coef(rng) / (k + 1);
        }
        const double lo = span.lo;
        const auto trig = [=](double x, int d) {
            double v = 0.0;
            for (int k = 0; k < harmonics; ++k) {
                const double kw = (k + 1) * w;
                const double t = kw * (x - lo);
                const double s = sn[static_cast<std::size_t>(k)];
                const double c = cs[static_cast<std::size_t>(k)];
                switch (d) {
                case 0: v += s * std::sin(t) + c * std::cos(t); break;
                case 1: v += kw * (s * std::cos(t) - c * std::sin(t)); break;
                default: v -= kw * kw * (s * std::sin(t) + c * std::cos(t)); break;
                }
            }
            return v;
        };
        // linear correction c0 + c1 (x - lo) fixes the state at lo
        double c0 = 0.0;
        double c1 = 0.0;
        const StateVector at_lo{trig(lo, 0), trig(lo, 1)};
        if (i == 0) {
            const LeftBC& l = problem.left_bc();
            if (l.beta1 != 0.0) {
                c1 = coef(rng);
                c0 = -(l.beta2 * (at_lo.up + c1)) / l.beta1 - at_lo.u;
            } else {
                c0 = coef(rng);
                c1 = -at_lo.up;
            }
        } else {
            const StateVector target =
                i == 1 ? problem.t_left().apply(incoming) : problem.t_right().apply(incoming);
            c0 = target.u - at_lo.u;
            c1 = target.up - at_lo.up;
        }
        SmoothPiece& p = out.pieces[static_cast<std::size_t>(i)];
        p.f = [=](double x) { return trig(x, 0) + c0 + c1 * (x - lo); };
        p.df = [=](double x) { return trig(x, 1) + c1; };
        p.d2f = [=](double x) { return trig(x, 2); };
        incoming = {p.f(span.hi), p.df(span.hi)};
    }
    const Interval last = problem.piece(2);
    const SmoothPiece& p3 = out.pieces[2];
    out.f1 = r_functionals(StateVector{p3.f(last.hi), p3.df(last.hi)}, problem.right_bc()).r_prime;
    return out;
}

HVector apply_A(const DomainElement& f, const ValidatedProblem& problem,
                std::size_t points_per_piece, double tol) {
    const auto state = [&](int piece, double x) {
        const SmoothPiece& p = f.pieces[static_cast<std::size_t>(piece)];
        return StateVector{p.f(x), p.df(x)};
    };
    const auto check = [tol](double residual, double scale, const char* name) {
        if (!(rel(residual, scale) <= tol)) {
            throw Error(Errc::NotInDomain, std::string("condition ") + name +
                                               " violated (residual " + fmt(residual) + ")");
        }
    };
    const StateVector sa = state(0, problem.a());
    const LeftBC& l = problem.left_bc();
    check(l.beta1 * sa.u + l.beta2 * sa.up, std::abs(sa.u) + std::abs(sa.up), "B_a");

    const StateVector ml = state(0, problem.x_minus());
    const StateVector mr = state(1, problem.x_minus());
    const StateVector mt = problem.t_left().apply(ml);
    check(mr.u - mt.u, std::abs(mr.u) + std::abs(mt.u), "T-eps");
    check(mr.up - mt.up, std::abs(mr.up) + std::abs(mt.up), "T'-eps");

    const StateVector pl = state(1, problem.x_plus());
    const StateVector pr = state(2, problem.x_plus());
    const StateVector pt = problem.t_right().apply(pl);
    check(pr.u - pt.u, std::abs(pr.u) + std::abs(pt.u), "T+eps");
    check(pr.up - pt.up, std::abs(pr.up) + std::abs(pt.up), "T'+eps");

    const RValues rv = r_functionals(state(2, problem.b()), problem.right_bc());
    check(f.f1 - rv.r_prime, std::abs(f.f1) + std::abs(rv.r_prime), "f1 = R'(f)");

    PieceFunctions tau;
    for (int i = 0; i < 3; ++i) {
        const SmoothPiece& p = f.pieces[static_cast<std::size_t>(i)];
        const Potential& q = problem.q(i);
        tau[static_cast<std::size_t>(i)] = [&p, &q](double x) { return -p.d2f(x) + q(x) * p.f(x); };
    }
    return sample(problem, tau, -rv.r, points_per_piece);
}

ResolventContext::ResolventContext(const ValidatedProblem& problem, double lambda,
                                   const IntegratorOptions& options)
    : problem_(problem),
      lambda_(lambda),
      phi_(mdsl::phi(problem, lambda, options)),
      chi_(mdsl::chi(problem, lambda, options)) {
    omega_ = omega_from_end(problem_, lambda_, phi_.right_end());
    const double delta = 1e-6 * std::max(1.0, std::abs(lambda));
    const double lo = mdsl::omega(problem_, lambda - delta, options);
    const double hi = mdsl::omega(problem_, lambda + delta, options);
    if (omega_ == 0.0 || (lo > 0.0) != (hi > 0.0) || lo == 0.0 || hi == 0.0) {
        throw Error(Errc::LambdaIsEigenvalue,
                    "lambda = " + fmt(lambda) + " is within " + fmt(delta) + " of an eigenvalue");
    }
}

double ResolventContext::green(double x, double y) const {
    const double lo = std::min(x, y);
    const double hi = std::max(x, y);
    return phi_.at(lo).u * chi_.at(hi).u / omega_;
}

GreenEvaluation green(const ValidatedProblem& problem, double lambda, double x, double y,
                      const IntegratorOptions& options) {
    for (double p : {x, y}) {
        if (p == problem.x_minus() || p == problem.x_plus()) {
            throw Error(Errc::PointOnInterface, "Green's function is not evaluated on an interface");
        }
        if (!(p >= problem.a() && p <= problem.b())) {
            throw Error(Errc::InvalidArgument, "Green's function argument outside [a, b]");
        }
    }
    const ResolventContext ctx(problem, lambda, options);
    return {x, y, ctx.green(x, y), lambda};
}

ResolventResult resolve(const ResolventContext& ctx, const HVector& f) {
    const ValidatedProblem& pr = ctx.problem();
    const double w = ctx.omega();
    const double d12 = pr.d1() * pr.d2();

    std::array<std::vector<StateVector>, 3> ph, ch;
    std::array<std::vector<double>, 3> left_int;  // int_a^x w phi f
    std::array<std::vector<double>, 3> right_int;  // int_x^b w chi f
    double carry = 0.0;
    for (int i = 0; i < 3; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const SampledPiece& fp = f.pieces[k];
        const std::size_t n = fp.size();
        ph[k].resize(n);
        ch[k].resize(n);
        std::vector<double> a(n), b(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double x = fp.x(j);
            ph[k][j] = ctx.phi().piece(i).at(x);
            ch[k][j] = ctx.chi().piece(i).at(x);
            a[j] = pr.weight(i) * ph[k][j].u * fp.values[j];
            b[j] = pr.weight(i) * ch[k][j].u * fp.values[j];
        }
        left_int[k] = cumulative_simpson(a, fp.h());
        for (double& v : left_int[k]) v += carry;
        carry = left_int[k].back();
        right_int[k] = cumulative_simpson(b, fp.h());
    }
    // Convert the per-piece running integrals of chi f into tails to b.
    double tail = 0.0;
    for (int i = 2; i >= 0; --i) {
        auto& r = right_int[static_cast<std::size_t>(i)];
        const double piece_total = r.back();
        for (double& v : r) v = tail + piece_total - v;
        tail += piece_total;
    }

    ResolventResult out;
    for (int i = 0; i < 3; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const SampledPiece& fp = f.pieces[k];
        const std::size_t n = fp.size();
        SampledPiece up{fp.lo, fp.hi, std::vector<double>(n)};
        out.du[k].resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double A = left_int[k][j];
            const double B = right_int[k][j];
            up.values[j] = (ch[k][j].u * A + ph[k][j].u * B + f.f1 * ph[k][j].u / d12) / w;
            out.du[k][j] = (ch[k][j].up * A + ph[k][j].up * B + f.f1 * ph[k][j].up / d12) / w;
        }
        out.u.pieces[k] = std::move(up);
    }
    out.u.f1 = r_functionals(StateVector{out.u.pieces[2].values.back(), out.du[2].back()}, pr.right_bc()).r_prime;
    return out;
}

ResolventResult resolve(const ValidatedProblem& problem, double lambda, const HVector& f,
                        const IntegratorOptions& options) {
    return resolve(ResolventContext(problem, lambda, options), f);
}

double ResidualReport::max() const {
    double m = std::max({ode, left_bc, right_bc});
    for (double t : transmission) m = std::max(m, t);
    return m;
}

ResidualReport resolvent_residuals(const ValidatedProblem& problem, double lambda,
                                   const HVector& f, const ResolventResult& r) {
    ResidualReport rep;
    double f_scale = 0.0;
    for (const SampledPiece& p : f.pieces) f_scale = std::max(f_scale, max_abs(p.values));
    for (int i = 0; i < 3; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const SampledPiece& u = r.u.pieces[k];
        const SampledPiece& fp = f.pieces[k];
        const std::size_t n = u.size();
        const double h = u.h();
        const std::size_t stride = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::lround((problem.b() - problem.a()) / 200.0 / h)));
        const double H = h * static_cast<double>(stride);
        for (std::size_t j = 2 * stride; j + 2 * stride < n; ++j) {
            const double d2 = (-u.values[j - 2 * stride] + 16.0 * u.values[j - stride] -
                               30.0 * u.values[j] + 16.0 * u.values[j + stride] -
                               u.values[j + 2 * stride]) /
                              (12.0 * H * H);
            const double res =
                lambda * u.values[j] + d2 - problem.q(i)(u.x(j)) * u.values[j] - fp.values[j];
            rep.ode = std::max(rep.ode, rel(res, f_scale));
        }
    }
    const auto st = [&](int piece, bool at_end) {
        const auto k = static_cast<std::size_t>(piece);
        const std::size_t j = at_end ? r.u.pieces[k].size() - 1 : 0;
        return StateVector{r.u.pieces[k].values[j], r.du[k][j]};
    };
    const StateVector sa = st(0, false);
    const LeftBC& l = problem.left_bc();
    rep.left_bc = rel(l.beta1 * sa.u + l.beta2 * sa.up, std::abs(sa.u) + std::abs(sa.up));

    const RValues rv = r_functionals(st(2, true), problem.right_bc());
    rep.right_bc = rel(lambda * rv.r_prime + rv.r - f.f1, std::abs(f.f1) + std::abs(rv.r));

    const auto jump = [](StateVector lhs, StateVector mapped, bool derivative) {
        const double a = derivative ? lhs.up : lhs.u;
        const double b = derivative ? mapped.up : mapped.u;
        return rel(a - b, std::abs(a) + std::abs(b));
    };
    const StateVector m = problem.t_left().apply(st(0, true));
    const StateVector p = problem.t_right().apply(st(1, true));
    rep.transmission = {jump(st(1, false), m, false), jump(st(1, false), m, true),
                        jump(st(2, false), p, false), jump(st(2, false), p, true)};
    return rep;
}

}  // namespace mdsl
