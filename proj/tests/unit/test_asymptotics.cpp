#include "mdsl/asymptotics.hpp"
#include "mdsl/error.hpp"
#include "specs.hpp"

#include <doctest.h>

#include <cmath>

using namespace mdsl;
using testing::pi;

namespace {

ProblemSpec quarter_spec(LeftBC l, RightBC r) {
    ProblemSpec s = testing::case_spec(1);
    s.epsilon = pi / 4;  // theta - eps = pi/4, theta + eps = 3pi/4
    s.potential = PiecewisePotential::zero();
    s.left_bc = l;
    s.right_bc = r;
    return s;
}

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("case classification is a partition") {
    CHECK(classify_case(validate(quarter_spec({1, 0}, {0, 1, -1, 0}))) == AsymptoticCase::case3);
    CHECK(classify_case(validate(quarter_spec({0, 1}, {1, 0, 0, 1}))) == AsymptoticCase::case2);
    CHECK(classify_case(validate(quarter_spec({1, 0}, {1, 0, 0, 1}))) == AsymptoticCase::case4);
    CHECK(classify_case(validate(quarter_spec({1, 1}, {1, 1, -1, 1}))) == AsymptoticCase::case1);
    for (int c = 1; c <= 4; ++c) {
        CHECK(static_cast<int>(classify_case(validate(testing::case_spec(c)))) == c);
    }
}

TEST_CASE("leading terms of the root sequences") {
    const ValidatedProblem p = validate(quarter_spec({1, 1}, {1, 1, -1, 1}));
    CHECK(predict_s(p, AsymptoticCase::case1, SequenceTag::prime, 3).s_pred == doctest::Approx(8.0));
    CHECK(predict_s(p, AsymptoticCase::case3, SequenceTag::prime, 1).s_pred == doctest::Approx(2.0));
    CHECK(predict_s(p, AsymptoticCase::case1, SequenceTag::triple_prime, 4).s_pred ==
          doctest::Approx(8.0));
    const AsymptoticPrediction d = predict_s(p, AsymptoticCase::case2, SequenceTag::double_prime, 3);
    CHECK(d.s_pred == doctest::Approx(4.0));  // (3 - 1) pi / (pi / 2)
    CHECK(d.lambda_pred == doctest::Approx(16.0));
    CHECK_THROWS_AS((void)predict_s(p, AsymptoticCase::case1, SequenceTag::prime, 0), Error);
}

TEST_CASE("predictions are linear in n") {
    const ValidatedProblem p = validate(testing::case_spec(2));
    for (SequenceTag t : {SequenceTag::prime, SequenceTag::double_prime, SequenceTag::triple_prime}) {
        const double step = predict_s(p, AsymptoticCase::case2, t, 2).s_pred -
                            predict_s(p, AsymptoticCase::case2, t, 1).s_pred;
        for (int n = 2; n < 40; ++n) {
            const double d = predict_s(p, AsymptoticCase::case2, t, n + 1).s_pred -
                             predict_s(p, AsymptoticCase::case2, t, n).s_pred;
            CHECK(d == doctest::Approx(step).epsilon(1e-12));
        }
    }
    const auto all = predictions_up_to(p, 20.0);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].s_pred <= all[i].s_pred);
    for (const auto& a : all) CHECK(a.s_pred > 0.0);
}

TEST_CASE("asymptotic omega") {
    // alpha' = (0, 1), alpha = (-1, 0): case 3 with rho = 1
    const ValidatedProblem p = validate(quarter_spec({1, 0}, {0, 1, -1, 0}));
    const double s = 5.0;
    const double want = 1.0 * 1.0 * 0.5 * 0.3 * std::pow(s, 4) * std::cos(s * pi / 4) *
                        std::sin(s * pi / 2) * std::sin(s * pi / 4) / (p.d1() * p.d2());
    CHECK(asymptotic_omega(p, AsymptoticCase::case3, s) == doctest::Approx(want).epsilon(1e-14));
    CHECK(asymptotic_omega(p, AsymptoticCase::case3, 4.0) == doctest::Approx(0.0));  // sin(2 pi)

    CHECK_THROWS_AS((void)asymptotic_omega(validate(testing::p0()), AsymptoticCase::case4, 5.0),
                    Error);
}

TEST_CASE("omega ratio tends to one") {
    for (int c = 1; c <= 4; ++c) {
        const ValidatedProblem p = validate(testing::case_spec(c));
        const AsymptoticCase k = classify_case(p);
        const double l = p.piece(0).length();
        const auto good = [&](double s) {
            return std::abs(std::sin(s * l)) >= 0.3 && std::abs(std::cos(s * l)) >= 0.3;
        };
        std::vector<double> dev;
        std::vector<double> ss;
        for (double target : {20.0, 40.0, 80.0}) {
            double s = target;
            while (!good(s)) s += 0.01;
            ss.push_back(s);
            dev.push_back(std::abs(omega(p, s * s) / asymptotic_omega(p, k, s) - 1.0));
        }
        const double K = 2.0 * ss[0] * dev[0];
        for (std::size_t i = 1; i < ss.size(); ++i) CHECK(dev[i] <= K / ss[i]);
    }
}

TEST_CASE("asymptotic phi") {
    ProblemSpec s = quarter_spec({1, 0}, {1, 0, 0, 1});
    const ValidatedProblem p = validate(s);
    CHECK(asymptotic_phi(p, 100.0, pi / 20) == doctest::Approx(-0.1));
    const ValidatedProblem q = validate(quarter_spec({1, 1}, {1, 1, -1, 1}));
    const double sv = 7.0;
    const double want = -sv * 0.5 * 1.0 * std::sin(sv * pi / 4);  // x = x- + 0
    CHECK(asymptotic_phi(q, sv * sv, pi / 4 + 1e-12) == doctest::Approx(want).epsilon(1e-9));
    CHECK_THROWS_AS((void)asymptotic_phi(q, 4.0, pi / 4), Error);
    CHECK_THROWS_AS((void)asymptotic_phi(q, -4.0, 1.0), Error);
}

TEST_CASE("asymptotic phi converges at one order below the leading term") {
    for (int c : {1, 3}) {
        const ValidatedProblem p = validate(testing::case_spec(c));
        const bool b2 = p.left_bc().beta2 != 0.0;
        std::vector<double> err;
        for (double s : {20.0, 40.0, 80.0}) {
            const PiecewiseSolution u = phi(p, s * s);
            double e = 0.0;
            for (int i = 0; i < 3; ++i) {
                const int lead = (b2 ? 0 : -1) + i;  // power of s in the leading term
                const Interval span = p.piece(i);
                for (int j = 1; j < 20; ++j) {
                    const double x = span.lo + span.length() * j / 20.0;
                    const double d = std::abs(u.at(x).u - asymptotic_phi(p, s * s, x));
                    e = std::max(e, d / std::pow(s, lead - 1));
                }
            }
            err.push_back(e);
        }
        CHECK(err[1] <= 2.0 * err[0]);
        CHECK(err[2] <= 2.0 * err[0]);
    }
}

TEST_CASE("asymptotic eigenfunctions") {
    const ValidatedProblem p = validate(quarter_spec({1, 1}, {1, 1, -1, 1}));
    const AsymptoticValue v = asymptotic_eigenfunction(p, AsymptoticCase::case1, SequenceTag::prime, 4, 0.0);
    REQUIRE(std::holds_alternative<double>(v));
    CHECK(std::get<double>(v) == doctest::Approx(1.0));  // beta2
    const AsymptoticValue w = asymptotic_eigenfunction(p, AsymptoticCase::case1, SequenceTag::prime, 4, 1.5);
    REQUIRE(std::holds_alternative<OrderOnly>(w));
    CHECK(std::get<OrderOnly>(w).order == -1);

    const ValidatedProblem q = validate(quarter_spec({1, 0}, {0, 1, -1, 0}));
    const int n = 3;
    const double l1 = pi / 4;
    const double x = 0.5;
    const AsymptoticValue e = asymptotic_eigenfunction(q, AsymptoticCase::case3, SequenceTag::prime, n, x);
    const double want = -(l1 / ((n - 0.5) * pi)) * std::sin((n - 0.5) * pi * x / l1);
    CHECK(std::get<double>(e) == doctest::Approx(want).epsilon(1e-12));
    const AsymptoticValue z = asymptotic_eigenfunction(q, AsymptoticCase::case3, SequenceTag::prime, n, 3.0);
    CHECK(std::get<OrderOnly>(z).order == 0);
}

TEST_CASE("matching") {
    const ValidatedProblem p = validate(testing::case_spec(4));
    std::vector<Eigenpair> pairs(3);
    for (std::size_t i = 0; i < 3; ++i) {
        pairs[i].lambda = (i + 2.0) * (i + 2.0);
        pairs[i].s = i + 2.0;
    }
    match_to_sequences(pairs, {}, 1.0);
    for (const Eigenpair& e : pairs) CHECK(e.sequence_tag == SequenceTag::unmatched);

    const std::vector<AsymptoticPrediction> dup = {{SequenceTag::prime, 1, 3.0, 9.0},
                                                   {SequenceTag::double_prime, 1, 3.0, 9.0}};
    match_to_sequences(pairs, dup, 0.1);
    CHECK(pairs[1].sequence_tag == SequenceTag::prime);  // tie goes to the first sequence
    CHECK(pairs[0].sequence_tag == SequenceTag::unmatched);
    CHECK(pairs[2].sequence_tag == SequenceTag::unmatched);

    // later members of each sequence sit closer to their predictions
    EigenOptions o;
    o.lambda_max = 3000.0;
    o.build_eigenfunctions = false;
    EigenResult r = find_eigenvalues(p, o);
    match_to_sequences(r.pairs, predictions_up_to(p, 60.0), default_match_window(p));
    double early = 0.0;
    double late = 0.0;
    for (const Eigenpair& e : r.pairs) {
        if (!e.s_pred) continue;
        const double d = std::abs(e.s - *e.s_pred);
        if (e.s < 20) early = std::max(early, d);
        if (e.s > 40) late = std::max(late, d);
    }
    CHECK(late < early);
}

}
