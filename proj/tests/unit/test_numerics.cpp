#include "mdsl/error.hpp"
#include "mdsl/quadrature.hpp"
#include "mdsl/roots.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace mdsl;

namespace {

std::vector<double> samples(int n, double lo, double hi, double (*f)(double)) {
    std::vector<double> y(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) y[static_cast<std::size_t>(j)] = f(lo + (hi - lo) * j / (n - 1));
    return y;
}

}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("Simpson, even and odd interval counts") {
    const double pi = std::numbers::pi;
    for (int n : {101, 100, 4}) {
        const auto y = samples(n, 0.0, pi, [](double x) { return std::sin(x); });
        const double tol = n == 4 ? 3e-2 : 1e-7;
        CHECK(simpson(y, pi / (n - 1)) == doctest::Approx(2.0).epsilon(tol));
    }
    const std::vector<double> two{1.0, 3.0};
    CHECK(simpson(two, 0.5) == doctest::Approx(1.0));
    const auto cube = samples(7, 0.0, 1.0, [](double x) { return x * x * x; });
    CHECK(simpson(cube, 1.0 / 6) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("cumulative integral") {
    const auto y = samples(201, 0.0, 2.0, [](double x) { return std::exp(x); });
    const auto c = cumulative_simpson(y, 0.01);
    for (std::size_t j : {1u, 2u, 3u, 50u, 101u, 200u}) {
        CHECK(c[j] == doctest::Approx(std::exp(0.01 * j) - 1.0).epsilon(1e-9));
    }
    CHECK(c[0] == 0.0);
}

TEST_CASE("one-sided derivative") {
    const auto y = samples(11, 0.0, 1.0, [](double x) { return std::sin(2 * x); });
    CHECK(end_derivative(y, 0.1, false) == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(end_derivative(y, 0.1, true) == doctest::Approx(2 * std::cos(2.0)).epsilon(1e-3));
}

TEST_CASE("Brent") {
    const auto f = [](double x) { return std::cos(x) - x; };
    const RootResult r = brent(f, 0.0, 1.0, f(0.0), f(1.0), 1e-14);
    CHECK(r.x == doctest::Approx(0.7390851332151607).epsilon(1e-14));
    CHECK(r.iterations < 20);
    CHECK_THROWS_AS((void)brent(f, 0.0, 0.5, f(0.0), f(0.5), 1e-12), Error);
}

}
