#pragma once

#include <functional>

namespace mdsl {

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
};

/// Brent's method on a sign-changing bracket [lo, hi] with known end values.
/// Stops once the bracket is narrower than xtol.
[[nodiscard]] RootResult brent(const std::function<double(double)>& f, double lo, double hi,
                               double f_lo, double f_hi, double xtol, int max_iter = 200);

}  // namespace mdsl
