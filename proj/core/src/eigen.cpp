#include "mdsl/eigen.hpp"

#include "mdsl/error.hpp"
#include "mdsl/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mdsl {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

double rel(double residual, double scale) { return std::abs(residual) / std::max(1.0, scale); }

bool opposite(double u, double v) { return (u < 0.0 && v > 0.0) || (u > 0.0 && v < 0.0); }

struct Sample {
    double lambda;
    double omega;
};

class Scanner {
public:
    Scanner(const ValidatedProblem& problem, const EigenOptions& options)
        : problem_(problem), options_(options) {}

    double eval(double lambda) {
        ++evaluations_;
        const double w = omega(problem_, lambda, options_.integrator);
        if (!std::isfinite(w)) {
            throw Error(Errc::StepSizeUnderflow, "omega is not finite at lambda = " + fmt(lambda));
        }
        return w;
    }

    [[nodiscard]] std::size_t evaluations() const noexcept { return evaluations_; }

    /// Sign-change brackets inside [l, r], found on `pieces` equal sub-cells.
    void subsample(Sample l, Sample r, int pieces, std::vector<std::pair<Sample, Sample>>& out,
                   std::vector<double>& exact) {
        Sample prev = l;
        for (int k = 1; k <= pieces; ++k) {
            Sample cur = k == pieces ? r
                                     : Sample{l.lambda + (r.lambda - l.lambda) * k / pieces, 0.0};
            if (k != pieces) cur.omega = eval(cur.lambda);
            if (cur.omega == 0.0 && k != pieces) exact.push_back(cur.lambda);
            if (opposite(prev.omega, cur.omega)) out.emplace_back(prev, cur);
            prev = cur;
        }
    }

    /// Looks for a hidden pair of roots around a local minimum of |omega|.
    void probe_minimum(Sample l, Sample r, int depth, std::vector<std::pair<Sample, Sample>>& out,
                       std::vector<double>& exact) {
        constexpr int kPieces = 16;
        std::vector<Sample> s(kPieces + 1);
        s[0] = l;
        s[kPieces] = r;
        for (int k = 1; k < kPieces; ++k) {
            s[k].lambda = l.lambda + (r.lambda - l.lambda) * k / kPieces;
            s[k].omega = eval(s[k].lambda);
            if (s[k].omega == 0.0) exact.push_back(s[k].lambda);
        }
        bool found = false;
        for (int k = 0; k < kPieces; ++k) {
            if (opposite(s[k].omega, s[k + 1].omega)) {
                out.emplace_back(s[k], s[k + 1]);
                found = true;
            }
        }
        if (found || depth <= 0) return;
        int best = 1;
        for (int k = 2; k < kPieces; ++k) {
            if (std::abs(s[k].omega) < std::abs(s[best].omega)) best = k;
        }
        if (std::abs(s[best].omega) < std::abs(s[best - 1].omega) &&
            std::abs(s[best].omega) < std::abs(s[best + 1].omega)) {
            probe_minimum(s[best - 1], s[best + 1], depth - 1, out, exact);
        }
    }

private:
    const ValidatedProblem& problem_;
    const EigenOptions& options_;
    std::size_t evaluations_ = 0;
};

std::size_t norm_points(const ValidatedProblem& problem, double lambda) {
    double longest = 0.0;
    for (int i = 0; i < 3; ++i) longest = std::max(longest, problem.piece(i).length());
    const double s = std::sqrt(std::max(0.0, lambda));
    auto n = static_cast<std::size_t>(std::ceil(16.0 * s * longest));
    n = std::max(n, kDefaultPointsPerPiece);
    return n % 2 == 1 ? n : n + 1;
}

Eigenpair make_pair(const ValidatedProblem& problem, double lambda, double omega_value,
                    const EigenOptions& options) {
    Eigenpair p;
    p.lambda = lambda;
    p.s = std::sqrt(std::abs(lambda));
    p.s_imaginary = lambda < 0.0;
    p.omega_residual = std::abs(omega_value);
    if (!options.build_eigenfunctions) return p;

    const PiecewiseSolution u = phi(problem, lambda, options.integrator);
    const double f1 = r_functionals(u.right_end(), problem.right_bc()).r_prime;
    const HVector h = sample(problem, u, f1, norm_points(problem, lambda));
    const double norm = h_norm(h, problem);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw Error(Errc::SingularSystem, "eigenfunction at lambda = " + fmt(lambda) +
                                              " has zero or non-finite H-norm");
    }
    double sign = 1.0;
    for (const SampledPiece& piece : h.pieces) {
        const auto it = std::find_if(piece.values.begin(), piece.values.end(),
                                     [&](double v) { return std::abs(v) > 1e-8 * norm; });
        if (it != piece.values.end()) {
            sign = *it > 0.0 ? 1.0 : -1.0;
            break;
        }
    }
    p.eigenfunction = u.scaled(sign / norm);
    p.h_norm = std::abs(sign / norm) * norm;
    return p;
}

}  // namespace

const char* to_string(SequenceTag tag) noexcept {
    switch (tag) {
        case SequenceTag::none: return "";
        case SequenceTag::prime: return "prime";
        case SequenceTag::double_prime: return "double_prime";
        case SequenceTag::triple_prime: return "triple_prime";
        case SequenceTag::unmatched: return "unmatched";
    }
    return "";
}

double default_scan_step(const ValidatedProblem& problem) {
    const double k = std::numbers::pi / (problem.b() - problem.a());
    return k * k / 8.0;
}

double find_lower_bound(const ValidatedProblem& problem, const IntegratorOptions& options,
                        int max_probes) {
    double qmin = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Interval span = problem.piece(i);
        for (int k = 0; k <= 16; ++k) qmin = std::min(qmin, problem.q(i)(span.lo + span.length() * k / 16));
    }
    const double top = qmin;
    const double k = std::numbers::pi / (problem.b() - problem.a());
    double width = std::max(1.0, k * k);

    constexpr int kSamples = 16;
    std::vector<double> tops;  // top of each probe window
    double hi = top;
    double w_hi = omega(problem, hi, options);
    int good = 0;
    for (int probe = 0; probe < max_probes; ++probe) {
        const double lo = hi - width;
        bool ok = std::isfinite(w_hi) && w_hi != 0.0;
        double prev = w_hi;
        for (int j = 1; j <= kSamples && ok; ++j) {
            const double lam = hi - width * j / kSamples;
            const double w = omega(problem, lam, options);
            if (!std::isfinite(w)) {
                throw Error(Errc::BoundSearchExhausted,
                            "omega overflowed at lambda = " + fmt(lam) + " before a bound was found");
            }
            // Sign-constant and |omega| non-decreasing as lambda decreases.
            ok = w != 0.0 && !opposite(w, prev) && std::abs(w) >= std::abs(prev);
            prev = w;
        }
        tops.push_back(hi);
        good = ok ? good + 1 : 0;
        if (good == 3) return tops[tops.size() - 3];
        if (!ok) prev = omega(problem, lo, options);
        hi = lo;
        w_hi = prev;
        width *= 2.0;
    }
    throw Error(Errc::BoundSearchExhausted,
                "no sign-constant window of omega found within " + std::to_string(max_probes) +
                    " probes");
}

EigenResult find_eigenvalues(const ValidatedProblem& problem, const EigenOptions& options) {
    EigenResult result;
    result.lambda_lo = options.lambda_lo ? *options.lambda_lo
                                         : find_lower_bound(problem, options.integrator);
    const double lo = result.lambda_lo;
    const double hi = options.lambda_max;
    if (!(hi > lo)) {
        throw Error(Errc::InvalidArgument, "lambda_max = " + fmt(hi) +
                                               " must exceed the lower bound " + fmt(lo));
    }
    const double base = options.scan_step.value_or(default_scan_step(problem));
    if (!(base > 0.0)) throw Error(Errc::InvalidArgument, "scan_step must be positive");
    const double k = std::numbers::pi / (problem.b() - problem.a());
    const double knee = 64.0 * k * k;

    Scanner scan(problem, options);
    std::vector<Sample> grid;
    for (double lam = lo;;) {
        grid.push_back({lam, scan.eval(lam)});
        if (lam >= hi) break;
        const double step = base * std::max(1.0, std::sqrt(std::max(0.0, lam) / knee));
        lam = std::min(hi, lam + step);
    }

    std::vector<std::pair<Sample, Sample>> brackets;
    std::vector<double> roots;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i].omega == 0.0) roots.push_back(grid[i].lambda);
        if (i + 1 < grid.size() && opposite(grid[i].omega, grid[i + 1].omega)) {
            scan.subsample(grid[i], grid[i + 1], 8, brackets, roots);
        }
        if (i > 0 && i + 1 < grid.size() && !opposite(grid[i - 1].omega, grid[i].omega) &&
            !opposite(grid[i].omega, grid[i + 1].omega) &&
            std::abs(grid[i].omega) < std::abs(grid[i - 1].omega) &&
            std::abs(grid[i].omega) < std::abs(grid[i + 1].omega)) {
            scan.probe_minimum(grid[i - 1], grid[i + 1], 3, brackets, roots);
        }
    }

    const auto f = [&scan](double lam) { return scan.eval(lam); };
    for (const auto& [l, r] : brackets) {
        const double xtol = options.refine_tol * std::max(1.0, std::abs(0.5 * (l.lambda + r.lambda)));
        roots.push_back(brent(f, l.lambda, r.lambda, l.omega, r.omega, xtol).x);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double x, double y) {
                                return std::abs(x - y) <= 1e-10 * std::max(1.0, std::abs(x));
                            }),
                roots.end());

    for (std::size_t n = 0; n < roots.size(); ++n) {
        Eigenpair p = make_pair(problem, roots[n], scan.eval(roots[n]), options);
        p.index = n;
        result.pairs.push_back(std::move(p));
        if (n > 0 && roots[n] - roots[n - 1] < 10.0 * base) {
            result.warnings.push_back({roots[n - 1], roots[n]});
        }
    }
    result.omega_evaluations = scan.evaluations();
    return result;
}

ResidualReport solution_residuals(const ValidatedProblem& problem, double lambda,
                                  const PiecewiseSolution& u) {
    ResidualReport rep;
    constexpr int kProbes = 50;
    double u_max = 0.0;
    double q_max = 1.0;
    double end_u = 0.0;   // max |u|, |u'| on the last piece
    double end_up = 0.0;
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Interval span = problem.piece(i);
        const Potential& q = problem.q(i);
        // local wavenumber from lambda - q at the ends and the middle
        double k2 = 1.0;
        for (double x : {span.lo, span.mid(), span.hi}) k2 = std::max(k2, std::abs(lambda - q(x)));
        q_max = std::max(q_max, k2);
        const double h = std::min(0.01 / std::sqrt(k2), span.length() / 8.0);
        const SolutionPath& path = u.piece(i);
        for (int k = 0; k < kProbes; ++k) {
            const double x = span.lo + 2.0 * h + (span.length() - 4.0 * h) * k / (kProbes - 1);
            // u'' from a fourth-order central difference of the dense u'.
            const double d2 = (path.at(x - 2.0 * h).up - 8.0 * path.at(x - h).up +
                               8.0 * path.at(x + h).up - path.at(x + 2.0 * h).up) /
                              (12.0 * h);
            const StateVector sx = path.at(x);
            const double ux = sx.u;
            u_max = std::max(u_max, std::abs(ux));
            if (i == 2) {
                end_u = std::max(end_u, std::abs(ux));
                end_up = std::max(end_up, std::abs(sx.up));
            }
            worst = std::max(worst, std::abs(-d2 + (q(x) - lambda) * ux));
        }
    }
    rep.ode = worst / (std::max({1.0, std::abs(lambda), q_max}) * std::max(u_max, 1e-300));

    const StateVector sa = u.left_end();
    const LeftBC& l = problem.left_bc();
    rep.left_bc = rel(l.beta1 * sa.u + l.beta2 * sa.up,
                      std::abs(l.beta1 * sa.u) + std::abs(l.beta2 * sa.up));
    const RValues rv = r_functionals(u.right_end(), problem.right_bc());
    // Scaled by the size of u near b: u(b) and u'(b) can both be small, or
    // cancel inside R', at an eigenvalue.
    const RightBC& bc = problem.right_bc();
    const double al = std::abs(lambda);
    rep.right_bc = rel(lambda * rv.r_prime + rv.r,
                       (al * std::abs(bc.alpha1p) + std::abs(bc.alpha1)) * end_u +
                           (al * std::abs(bc.alpha2p) + std::abs(bc.alpha2)) * end_up);

    const auto jump = [](double a, double b) { return rel(a - b, std::abs(a) + std::abs(b)); };
    const StateVector ml = u.at(problem.x_minus(), Side::left);
    const StateVector mr = u.at(problem.x_minus(), Side::right);
    const StateVector pl = u.at(problem.x_plus(), Side::left);
    const StateVector pr = u.at(problem.x_plus(), Side::right);
    const StateVector mt = problem.t_left().apply(ml);
    const StateVector pt = problem.t_right().apply(pl);
    rep.transmission = {jump(mr.u, mt.u), jump(mr.up, mt.up), jump(pr.u, pt.u),
                        jump(pr.up, pt.up)};
    return rep;
}

ResidualReport eigenfunction_residuals(const Eigenpair& pair, const ValidatedProblem& problem) {
    if (!pair.eigenfunction) {
        return solution_residuals(problem, pair.lambda, phi(problem, pair.lambda));
    }
    return solution_residuals(problem, pair.lambda, *pair.eigenfunction);
}

int count_zeros_contour(const ValidatedProblem& problem, std::complex<double> center,
                        double half_width, double half_height, std::size_t n_samples,
                        const IntegratorOptions& options) {
    if (!(half_width > 0.0) || !(half_height > 0.0) || n_samples < 1) {
        throw Error(Errc::InvalidArgument, "contour needs positive half sizes and samples");
    }
    using C = std::complex<double>;
    const std::array<C, 5> corners = {center + C(-half_width, -half_height),
                                      center + C(half_width, -half_height),
                                      center + C(half_width, half_height),
                                      center + C(-half_width, half_height),
                                      center + C(-half_width, -half_height)};
    // omega this small relative to the corners means the contour runs through a zero
    double scale = 0.0;
    for (std::size_t e = 0; e < 4; ++e) scale = std::max(scale, std::abs(omega(problem, corners[e], options)));
    const auto eval = [&](C z) {
        const C w = omega(problem, z, options);
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || std::abs(w) <= 1e-10 * scale) {
            throw Error(Errc::ZeroOnContour, "omega vanishes or overflows at lambda = " +
                                                 fmt(z.real()) + " + " + fmt(z.imag()) + "i");
        }
        return w;
    };
    double total = 0.0;
    const std::function<void(C, C, C, C, int)> walk = [&](C z0, C w0, C z1, C w1, int depth) {
        const double d = std::arg(w1 / w0);
        if (std::abs(d) < std::numbers::pi / 2.0) {
            total += d;
            return;
        }
        if (depth >= 40) {
            throw Error(Errc::ZeroOnContour, "argument of omega does not resolve near lambda = " +
                                                 fmt(z0.real()) + " + " + fmt(z0.imag()) + "i");
        }
        const C zm = 0.5 * (z0 + z1);
        const C wm = eval(zm);
        walk(z0, w0, zm, wm, depth + 1);
        walk(zm, wm, z1, w1, depth + 1);
    };
    C z_prev = corners[0];
    C w_prev = eval(z_prev);
    for (std::size_t e = 0; e < 4; ++e) {
        for (std::size_t k = 1; k <= n_samples; ++k) {
            const double t = static_cast<double>(k) / static_cast<double>(n_samples);
            const C z = corners[e] + t * (corners[e + 1] - corners[e]);
            const C w = eval(z);
            walk(z_prev, w_prev, z, w, 0);
            z_prev = z;
            w_prev = w;
        }
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

SweepTable sweep_epsilon(const ProblemSpec& base, const std::vector<double>& eps,
                         const EigenOptions& options) {
    SweepTable table;
    EigenOptions opt = options;
    opt.build_eigenfunctions = false;
    for (double e : eps) {
        SweepRow row;
        row.epsilon = e;
        try {
            ProblemSpec spec = base;
            spec.epsilon = e;
            const ValidatedProblem problem = validate(spec);
            for (const Eigenpair& p : find_eigenvalues(problem, opt).pairs) {
                row.lambdas.emplace_back(p.lambda);
            }
        } catch (const Error& err) {
            row.error = err.what();
            row.lambdas.clear();
        }
        table.columns = std::max(table.columns, row.lambdas.size());
        table.rows.push_back(std::move(row));
    }
    for (SweepRow& row : table.rows) row.lambdas.resize(table.columns);
    return table;
}

}  // namespace mdsl
