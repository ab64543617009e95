#include "mdsl/eigen.hpp"
#include "mdsl/error.hpp"
#include "mdsl/hilbert.hpp"
#include "reference_values.hpp"
#include "specs.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace mdsl;
using testing::pi;

namespace {

double linf(const HVector& u, const std::function<double(double)>& f) {
    double e = 0.0;
    for (const SampledPiece& p : u.pieces) {
        for (std::size_t j = 0; j < p.size(); ++j) e = std::max(e, std::abs(p.values[j] - f(p.x(j))));
    }
    return e;
}

}  // namespace

TEST_SUITE("hilbert_operator") {

TEST_CASE("R functionals") {
    const RightBC bc{1, 0, 0, 1};
    const RValues one = r_functionals(StateVector{1.0, 0.0}, bc);
    CHECK(one.r == 0.0);
    CHECK(one.r_prime == 1.0);
    const RValues q = r_functionals(StateVector{-pi * pi / 2, 0.0}, bc);
    CHECK(q.r == 0.0);
    CHECK(q.r_prime == doctest::Approx(-pi * pi / 2));

    const ValidatedProblem p = validate(testing::p_cont());
    const HVector h = sample(p, [](double x) { return x * x / 2 - pi * x; }, 0.0);
    const RValues s = r_functionals(h, bc);
    CHECK(std::abs(s.r) < 1e-10);

    const ValidatedProblem c = validate(testing::case_spec(1));
    for (double lam : {-1.0, 4.0, 33.0}) {
        const RValues v = r_functionals(chi(c, lam).right_end(), c.right_bc());
        CHECK(std::abs(lam * v.r_prime + v.r) < 1e-12 * std::max(1.0, std::abs(lam)));
    }
}

TEST_CASE("inner product") {
    const ValidatedProblem p = validate(testing::p_cont());
    const HVector one = sample(p, [](double) { return 1.0; }, 0.0);
    CHECK(inner_product(one, one, p) == doctest::Approx(pi).epsilon(1e-13));

    ProblemSpec s = testing::p0();
    s.right_bc = {1, 0, 0, 2};  // rho = 2
    const ValidatedProblem q = validate(s);
    const HVector e = sample(q, [](double) { return 0.0; }, 1.0);
    CHECK(inner_product(e, e, q) == doctest::Approx(1.0 / 12.0));  // 1 / (rho D1 D2)

    const ValidatedProblem c = validate(testing::case_spec(2));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 20; ++t) {
        const double a = u(rng), b = u(rng), d = u(rng);
        const HVector f = sample(c, [=](double x) { return a * std::sin(3 * x) + b; }, d);
        const HVector g = sample(c, [=](double x) { return b * x * x - d; }, a, 401);
        const double fg = inner_product(f, g, c);
        CHECK(fg == doctest::Approx(inner_product(g, f, c)).epsilon(1e-10));
        CHECK(fg * fg <= inner_product(f, f, c) * inner_product(g, g, c) + 1e-12);
        CHECK(inner_product(f, f, c) > 0.0);
    }
}

TEST_CASE("apply_A") {
    const ValidatedProblem p = validate(testing::p_cont());
    DomainElement f;
    for (auto& piece : f.pieces) {
        piece = {[](double x) { return -x; }, [](double) { return -1.0; }, [](double) { return 0.0; }};
    }
    f.f1 = -pi;  // R'(f) = f(pi)
    const HVector af = apply_A(f, p);
    CHECK(af.f1 == doctest::Approx(-1.0));
    for (const SampledPiece& s : af.pieces) {
        for (double v : s.values) CHECK(v == 0.0);
    }
    f.f1 = 0.0;
    CHECK_THROWS_AS((void)apply_A(f, p), Error);
    f.f1 = -pi;
    f.pieces[0].f = [](double x) { return 1.0 - x; };
    try {
        (void)apply_A(f, p);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotInDomain);
        CHECK(std::string(e.what()).find("B_a") != std::string::npos);
    }
}

TEST_CASE("random domain elements satisfy every condition") {
    for (int c = 1; c <= 4; ++c) {
        const ValidatedProblem p = validate(testing::case_spec(c));
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            CHECK_NOTHROW((void)apply_A(make_domain_element(p, seed), p, 101, 1e-12));
        }
    }
}

TEST_CASE("A is symmetric") {
    for (int c = 1; c <= 4; ++c) {
        const ValidatedProblem p = validate(testing::case_spec(c));
        for (std::uint64_t k = 0; k < 5; ++k) {
            const DomainElement f = make_domain_element(p, 2 * k);
            const DomainElement g = make_domain_element(p, 2 * k + 1);
            const HVector hf = sample(p, f), hg = sample(p, g);
            const HVector af = apply_A(f, p), ag = apply_A(g, p);
            const double d = inner_product(af, hg, p) - inner_product(hf, ag, p);
            const double scale = h_norm(af, p) * h_norm(hg, p) + h_norm(hf, p) * h_norm(ag, p);
            CHECK(std::abs(d) <= 1e-7 * scale);
        }
    }
}

TEST_CASE("eigenpairs satisfy A F = lambda F") {
    const ValidatedProblem p = validate(testing::p0());
    EigenOptions o;
    o.lambda_max = 20.0;
    for (const Eigenpair& e : find_eigenvalues(p, o).pairs) {
        const PiecewiseSolution& u = *e.eigenfunction;
        DomainElement f;
        for (int i = 0; i < 3; ++i) {
            const SolutionPath& path = u.piece(i);
            const double lam = e.lambda;
            f.pieces[static_cast<std::size_t>(i)] = {
                [&path](double x) { return path.at(x).u; },
                [&path](double x) { return path.at(x).up; },
                [&path, lam](double x) { return -lam * path.at(x).u; }};  // q = 0
        }
        f.f1 = r_functionals(u.right_end(), p.right_bc()).r_prime;
        const HVector af = apply_A(f, p, 801, 1e-7);
        HVector diff = sample(p, f);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < diff.pieces[i].size(); ++j) {
                diff.pieces[i].values[j] = af.pieces[i].values[j] - e.lambda * diff.pieces[i].values[j];
            }
        }
        diff.f1 = af.f1 - e.lambda * f.f1;
        CHECK(h_norm(diff, p) <= 1e-6);
    }
}

TEST_CASE("Green's function") {
    const ValidatedProblem p = validate(testing::p_cont());
    const ResolventContext ctx(p, 0.0);
    for (double x : {0.3, 1.2, 2.7}) {
        for (double y : {0.5, 2.0, 3.0}) {
            CHECK(ctx.green(x, y) == doctest::Approx(-std::min(x, y)).epsilon(1e-10));
            CHECK(ctx.green(x, y) == ctx.green(y, x));
        }
    }
    const ValidatedProblem q = validate(testing::p0());
    CHECK(testing::rel_err(green(q, 2.0, 0.5, 2.5).value, ref::p0_green_2) < 1e-9);
    CHECK_THROWS_AS((void)green(q, 2.0, pi / 4, 1.0), Error);
    try {
        (void)ResolventContext(q, ref::p0_lambda[1]);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::LambdaIsEigenvalue);
    }
}

TEST_CASE("resolvent closed form") {
    const ValidatedProblem p = validate(testing::p_cont());
    const HVector f = sample(p, [](double) { return 1.0; }, 0.0);
    const ResolventResult r = resolve(p, 0.0, f);
    CHECK(linf(r.u, [](double x) { return x * x / 2 - pi * x; }) < 1e-8);
    CHECK(r.u.f1 == doctest::Approx(-pi * pi / 2).epsilon(1e-9));
}

TEST_CASE("scalar source gives phi / (D1 D2 omega)") {
    const ValidatedProblem p = validate(testing::case_spec(3));
    const double lam = 2.5;
    const ResolventResult r = resolve(p, lam, sample(p, [](double) { return 0.0; }, 1.0));
    const PiecewiseSolution f = phi(p, lam);
    const double c = 1.0 / (p.d1() * p.d2() * omega(p, lam));
    for (std::size_t i = 0; i < 3; ++i) {
        const SampledPiece& s = r.u.pieces[i];
        for (std::size_t j = 1; j + 1 < s.size(); j += 50) {
            CHECK(s.values[j] == doctest::Approx(c * f.at(s.x(j)).u).epsilon(1e-9));
        }
    }
}

TEST_CASE("resolvent residuals") {
    for (int c = 1; c <= 4; ++c) {
        const ValidatedProblem p = validate(testing::case_spec(c));
        const HVector f = sample(p, [](double x) { return std::sin(x) + x * x; }, 0.3);
        const double lam = 2.0 + 0.1 * c;
        const ResolventResult r = resolve(p, lam, f);
        const ResidualReport rep = resolvent_residuals(p, lam, f, r);
        CHECK(rep.ode <= 1e-6);
        CHECK(rep.right_bc <= 1e-6);
        CHECK(rep.left_bc <= 1e-7);
        for (double t : rep.transmission) CHECK(t <= 1e-7);
    }
}

TEST_CASE("delta source approaches a Green's column") {
    const ValidatedProblem p = validate(testing::p0());
    const double y0 = 2.8;
    const double lam = 2.0;
    const ResolventContext ctx(p, lam);
    std::vector<double> err;
    for (double w : {0.1, 0.05, 0.025}) {
        // unit mass in the weighted measure: 1 / D1 D2 on the last piece
        const double scale = 1.0 / p.weight(2);
        const auto delta = [=](double x) {
            const double t = (x - y0) / w;
            return scale * std::exp(-t * t) / (w * std::sqrt(pi));
        };
        const ResolventResult r = resolve(ctx, sample(p, delta, 0.0, 4001));
        double e = 0.0;
        for (double x : {0.4, 1.0, 1.9, 2.2}) {
            const int i = p.piece_of(x);
            const SampledPiece& s = r.u.pieces[static_cast<std::size_t>(i)];
            const auto j = static_cast<std::size_t>(std::lround((x - s.lo) / s.h()));
            e = std::max(e, std::abs(s.values[j] - p.weight(2) * scale * ctx.green(s.x(j), y0)));
        }
        err.push_back(e);
    }
    CHECK(err[1] < 0.35 * err[0]);
    CHECK(err[2] < 0.35 * err[1]);
}

TEST_CASE("resolvent norm blows up like 1 / distance to an eigenvalue") {
    const ValidatedProblem p = validate(testing::p0());
    const HVector f = sample(p, [](double x) { return 1.0 + x; }, 0.0);
    std::vector<double> norms;
    for (int k = 2; k <= 4; ++k) {
        const double lam = ref::p0_lambda[2] + std::pow(10.0, -k);
        norms.push_back(h_norm(resolve(p, lam, f).u, p));
    }
    for (std::size_t i = 1; i < norms.size(); ++i) {
        CHECK(norms[i] / norms[i - 1] == doctest::Approx(10.0).epsilon(0.2));
    }
}

}
