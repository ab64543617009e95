#include "mdsl/fd_oracle.hpp"

#include "mdsl/error.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace mdsl::oracle {

namespace {

using Triplets = std::vector<Eigen::Triplet<double>>;
using Lu = Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>>;

struct Layout {
    std::vector<Interval> spans;
    std::vector<Potential> q;
    std::vector<TransmissionMatrix> t;  // between consecutive spans
    LeftBC left;
    RightBC right;
};

class Assembler {
public:
    Assembler(const Layout& layout, int m) : layout_(layout), m_(m) {}

    PencilSystem run() {
        const int pieces = static_cast<int>(layout_.spans.size());
        const int n = pieces * (m_ + 1);
        for (int p = 0; p < pieces; ++p) {
            const double h = layout_.spans[p].length() / m_;
            const Potential& q = layout_.q[p];
            for (int j = 1; j < m_; ++j) {
                const int row = idx(p, j);
                const double x = layout_.spans[p].lo + j * h;
                const double qx = q(x);
                if (!std::isfinite(qx)) {
                    throw Error(Errc::NonFinitePotential, "potential not finite at x = " + std::to_string(x));
                }
                m_add(row, idx(p, j - 1), -1.0 / (h * h));
                m_add(row, row, 2.0 / (h * h) + qx);
                m_add(row, idx(p, j + 1), -1.0 / (h * h));
                n_add(row, row, 1.0);
            }
            if (p == 0) {
                // beta1 u(a) + beta2 u'(a) = 0
                const int row = idx(0, 0);
                m_add(row, row, layout_.left.beta1);
                forward_derivative(row, 0, layout_.left.beta2);
            } else {
                // u'(x+) = t21 u(x-) + t22 u'(x-)
                const TransmissionMatrix& t = layout_.t[p - 1];
                const int row = idx(p, 0);
                forward_derivative(row, p, 1.0);
                m_add(row, idx(p - 1, m_), -t.m21);
                backward_derivative(row, p - 1, -t.m22);
            }
            if (p + 1 < pieces) {
                // u(x+) = t11 u(x-) + t12 u'(x-)
                const TransmissionMatrix& t = layout_.t[p];
                const int row = idx(p, m_);
                m_add(row, idx(p + 1, 0), 1.0);
                m_add(row, idx(p, m_), -t.m11);
                backward_derivative(row, p, -t.m12);
            } else {
                // lambda R'(u) + R(u) = 0 split as M u = -R(u), N u = R'(u).
                const RightBC& r = layout_.right;
                const int row = idx(p, m_);
                m_add(row, row, -r.alpha1);
                backward_derivative(row, p, r.alpha2);
                n_add(row, row, r.alpha1p);
                backward_derivative_n(row, p, -r.alpha2p);
            }
        }
        PencilSystem out;
        out.m = m_;
        out.pieces = pieces;
        for (int p = 0; p < pieces; ++p) out.spans[static_cast<std::size_t>(p)] = layout_.spans[p];
        out.M.resize(n, n);
        out.N.resize(n, n);
        out.M.setFromTriplets(mt_.begin(), mt_.end());
        out.N.setFromTriplets(nt_.begin(), nt_.end());
        out.M.makeCompressed();
        out.N.makeCompressed();
        const RightBC& r = layout_.right;
        out.right_bc = {r.alpha1p, r.alpha2p, r.alpha1, r.alpha2};
        return out;
    }

private:
    int idx(int p, int j) const { return p * (m_ + 1) + j; }
    double h(int p) const { return layout_.spans[p].length() / m_; }
    void m_add(int r, int c, double v) { mt_.emplace_back(r, c, v); }
    void n_add(int r, int c, double v) { nt_.emplace_back(r, c, v); }

    void forward_derivative(int row, int p, double scale) {
        const double k = scale / (2.0 * h(p));
        m_add(row, idx(p, 0), -3.0 * k);
        m_add(row, idx(p, 1), 4.0 * k);
        m_add(row, idx(p, 2), -1.0 * k);
    }
    void backward_derivative(int row, int p, double scale) {
        const double k = scale / (2.0 * h(p));
        m_add(row, idx(p, m_), 3.0 * k);
        m_add(row, idx(p, m_ - 1), -4.0 * k);
        m_add(row, idx(p, m_ - 2), 1.0 * k);
    }
    void backward_derivative_n(int row, int p, double scale) {
        const double k = scale / (2.0 * h(p));
        n_add(row, idx(p, m_), 3.0 * k);
        n_add(row, idx(p, m_ - 1), -4.0 * k);
        n_add(row, idx(p, m_ - 2), 1.0 * k);
    }

    const Layout& layout_;
    int m_;
    Triplets mt_;
    Triplets nt_;
};

void check_grid(int m) {
    if (m < 16) {
        throw Error(Errc::GridTooCoarse, "pencil needs at least 16 intervals per piece (got " +
                                             std::to_string(m) + ")");
    }
}

Layout layout_of(const ProblemSpec& spec) {
    const double theta = 0.5 * (spec.a + spec.b);
    const double xm = theta - spec.epsilon;
    const double xp = theta + spec.epsilon;
    Layout l;
    l.spans = {{spec.a, xm}, {xm, xp}, {xp, spec.b}};
    l.q = {spec.potential.pieces[0], spec.potential.pieces[1], spec.potential.pieces[2]};
    l.t = {spec.t_left, spec.t_right};
    l.left = spec.left_bc;
    l.right = spec.right_bc;
    return l;
}

void factorize(Lu& lu, const Eigen::SparseMatrix<double>& a, const char* what) {
    lu.analyzePattern(a);
    lu.factorize(a);
    if (lu.info() != Eigen::Success) {
        throw Error(Errc::SingularSystem, std::string(what) + ": sparse LU factorization failed");
    }
}

struct Ritz {
    std::vector<std::complex<double>> lambda;
    bool converged = false;
};

/// Shift-invert Arnoldi on (M - sigma N)^{-1} N with full reorthogonalization.
Ritz arnoldi(const PencilSystem& pencil, const Lu& lu, double sigma, std::size_t count,
             Eigen::Index dim) {
    const Eigen::Index n = pencil.M.rows();
    dim = std::min(dim, n - 1);
    const auto op = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return lu.solve(pencil.N * x);
    };
    Eigen::MatrixXd V = Eigen::MatrixXd::Zero(n, dim + 1);
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim + 1, dim);

    std::mt19937_64 rng(20240521);
    std::normal_distribution<double> normal;
    Eigen::VectorXd v0(n);
    for (Eigen::Index i = 0; i < n; ++i) v0[i] = normal(rng);
    v0 = op(v0);  // removes components along the infinite eigenvalues
    V.col(0) = v0.normalized();

    Eigen::Index k = dim;
    for (Eigen::Index j = 0; j < dim; ++j) {
        Eigen::VectorXd w = op(V.col(j));
        for (int pass = 0; pass < 2; ++pass) {
            const Eigen::VectorXd c = V.leftCols(j + 1).transpose() * w;
            w -= V.leftCols(j + 1) * c;
            H.col(j).head(j + 1) += c;
        }
        const double beta = w.norm();
        H(j + 1, j) = beta;
        if (beta < 1e-14 * H.col(j).head(j + 1).norm()) {
            k = j + 1;
            break;
        }
        V.col(j + 1) = w / beta;
    }

    Eigen::EigenSolver<Eigen::MatrixXd> es(H.topLeftCorner(k, k));
    if (es.info() != Eigen::Success) {
        throw Error(Errc::EigensolverFailure, "Hessenberg eigenvalue iteration failed");
    }
    const double tail = k < dim ? 0.0 : H(k, k - 1);
    struct Item {
        std::complex<double> nu;
        double residual;
    };
    std::vector<Item> items;
    for (Eigen::Index i = 0; i < k; ++i) {
        const std::complex<double> nu = es.eigenvalues()[i];
        const auto y = es.eigenvectors().col(i);
        items.push_back({nu, std::abs(tail) * std::abs(y[k - 1]) / y.norm()});
    }
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return std::abs(a.nu) > std::abs(b.nu); });
    Ritz out;
    out.converged = true;
    for (const Item& it : items) {
        if (out.lambda.size() == count) break;
        if (std::abs(it.nu) < 1e-12) break;  // |lambda| beyond 1e12
        const std::complex<double> lam = sigma + 1.0 / it.nu;
        if (std::abs(lam) > 1e12) continue;
        if (it.residual > 1e-11 * std::abs(it.nu)) out.converged = false;
        out.lambda.push_back(lam);
    }
    if (out.lambda.size() < count && k == dim) out.converged = false;
    return out;
}

/// Inverse iteration at a fixed shift next to a real Ritz value. The Ritz
/// values themselves carry errors well above the discretisation error once
/// the pencil is large and non-normal.
double refine(const PencilSystem& pencil, double lambda) {
    const double shift = lambda + 1e-9 * std::max(1.0, std::abs(lambda));
    Lu lu;
    factorize(lu, pencil.M - shift * pencil.N, "refinement shift");
    std::mt19937_64 rng(7);
    std::normal_distribution<double> normal;
    Eigen::VectorXd x(pencil.M.rows());
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = normal(rng);
    x = lu.solve(pencil.N * x).normalized();
    double nu = 0.0;
    for (int it = 0; it < 4; ++it) {
        const Eigen::VectorXd y = lu.solve(pencil.N * x);
        nu = x.dot(y);
        x = y.normalized();
    }
    if (!(std::abs(nu) > 0.0) || !std::isfinite(nu)) return lambda;
    return shift + 1.0 / nu;
}

}  // namespace

PencilSystem build_pencil(const ValidatedProblem& problem, int m) {
    check_grid(m);
    return Assembler(layout_of(problem.spec()), m).run();
}

PencilSystem build_pencil_unchecked(const ProblemSpec& spec, int m) {
    check_grid(m);
    return Assembler(layout_of(spec), m).run();
}

PencilSystem build_single_interval_pencil(const ValidatedProblem& problem, int m) {
    check_grid(m);
    Layout l;
    l.spans = {{problem.a(), problem.b()}};
    l.q = {problem.q(0)};
    l.left = problem.left_bc();
    l.right = problem.right_bc();
    return Assembler(l, 3 * m).run();
}

std::vector<std::complex<double>> oracle_spectrum(const PencilSystem& pencil, std::size_t count) {
    if (count == 0) return {};
    // Start the shift below the bulk of the spectrum; lower it while
    // eigenvalues appear beneath it.
    const double span = pencil.spans[static_cast<std::size_t>(pencil.pieces - 1)].hi - pencil.spans[0].lo;
    const double k = std::numbers::pi / span;
    double sigma = -1.0 - k * k;
    for (int attempt = 0; attempt < 12; ++attempt) {
        Lu lu;
        factorize(lu, pencil.M - sigma * pencil.N, "oracle shift");
        Eigen::Index dim = static_cast<Eigen::Index>(std::max<std::size_t>(2 * count + 40, 80));
        Ritz r;
        for (int grow = 0; grow < 4; ++grow) {
            r = arnoldi(pencil, lu, sigma, count, dim);
            if (r.converged) break;
            dim *= 2;
        }
        if (!r.converged) {
            throw Error(Errc::EigensolverFailure, "Arnoldi iteration did not converge");
        }
        std::sort(r.lambda.begin(), r.lambda.end(),
                  [](auto a, auto b) { return a.real() < b.real(); });
        if (r.lambda.empty() || r.lambda.front().real() > sigma) {
            for (auto& z : r.lambda) {
                if (std::abs(z.imag()) <= 1e-8 * std::max(1.0, std::abs(z.real()))) {
                    z = refine(pencil, z.real());
                }
            }
            std::sort(r.lambda.begin(), r.lambda.end(),
                      [](auto a, auto b) { return a.real() < b.real(); });
            return r.lambda;
        }
        const double low = r.lambda.front().real();
        sigma = low - 1.0 - std::abs(low);
    }
    throw Error(Errc::EigensolverFailure, "could not place the shift below the spectrum");
}

std::vector<double> oracle_eigenvalues(const PencilSystem& pencil, std::size_t count) {
    const std::vector<std::complex<double>> z = oracle_spectrum(pencil, count);
    std::vector<double> out;
    for (const auto& v : z) {
        if (std::abs(v.imag()) > 1e-8) {
            throw Error(Errc::EigensolverFailure,
                        "pencil eigenvalue " + std::to_string(v.real()) + " has imaginary part " +
                            std::to_string(v.imag()));
        }
        out.push_back(v.real());
    }
    return out;
}

HVector oracle_resolve(const PencilSystem& pencil, double lambda, std::span<const double> node_values,
                       double f1) {
    const auto n = static_cast<Eigen::Index>(pencil.size());
    if (static_cast<Eigen::Index>(node_values.size()) != n) {
        throw Error(Errc::InvalidArgument, "right-hand side size does not match the pencil");
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    const int m = pencil.m;
    for (int p = 0; p < pencil.pieces; ++p) {
        for (int j = 1; j < m; ++j) {
            const auto i = static_cast<Eigen::Index>(pencil.index(p, j));
            rhs[i] = node_values[static_cast<std::size_t>(i)];
        }
    }
    rhs[n - 1] = f1;
    Lu lu;
    factorize(lu, lambda * pencil.N - pencil.M, "oracle resolve");
    const Eigen::VectorXd u = lu.solve(rhs);
    if (!u.allFinite()) throw Error(Errc::SingularSystem, "oracle resolve produced non-finite values");

    HVector out;
    for (int p = 0; p < pencil.pieces; ++p) {
        SampledPiece& sp = out.pieces[static_cast<std::size_t>(p)];
        sp.lo = pencil.spans[static_cast<std::size_t>(p)].lo;
        sp.hi = pencil.spans[static_cast<std::size_t>(p)].hi;
        sp.values.resize(static_cast<std::size_t>(m + 1));
        for (int j = 0; j <= m; ++j) {
            sp.values[static_cast<std::size_t>(j)] = u[static_cast<Eigen::Index>(pencil.index(p, j))];
        }
    }
    const int last = pencil.pieces - 1;
    const double h = pencil.h(last);
    const auto at = [&](int j) { return u[static_cast<Eigen::Index>(pencil.index(last, j))]; };
    const double ub = at(m);
    const double dub = (3.0 * at(m) - 4.0 * at(m - 1) + at(m - 2)) / (2.0 * h);
    out.f1 = pencil.right_bc[0] * ub - pencil.right_bc[1] * dub;
    return out;
}

HVector oracle_resolve(const PencilSystem& pencil, double lambda, const PieceFunctions& f,
                       double f1) {
    std::vector<double> values(pencil.size(), 0.0);
    for (int p = 0; p < pencil.pieces; ++p) {
        for (int j = 0; j <= pencil.m; ++j) {
            values[pencil.index(p, j)] = f[static_cast<std::size_t>(p)](pencil.x(p, j));
        }
    }
    return oracle_resolve(pencil, lambda, std::span<const double>(values), f1);
}

std::vector<double> richardson(std::span<const double> fine, std::span<const double> coarse) {
    if (fine.size() != coarse.size()) {
        throw Error(Errc::InvalidArgument, "richardson: sequences differ in length");
    }
    std::vector<double> out(fine.size());
    for (std::size_t i = 0; i < fine.size(); ++i) out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
    return out;
}

HVector richardson(const HVector& fine, const HVector& coarse) {
    HVector out = coarse;
    for (std::size_t p = 0; p < 3; ++p) {
        const auto& c = coarse.pieces[p].values;
        const auto& f = fine.pieces[p].values;
        if (c.empty()) continue;
        if (f.size() != 2 * c.size() - 1) {
            throw Error(Errc::InvalidArgument, "richardson: fine grid must halve the coarse spacing");
        }
        for (std::size_t j = 0; j < c.size(); ++j) {
            out.pieces[p].values[j] = (4.0 * f[2 * j] - c[j]) / 3.0;
        }
    }
    out.f1 = (4.0 * fine.f1 - coarse.f1) / 3.0;
    return out;
}

}  // namespace mdsl::oracle
