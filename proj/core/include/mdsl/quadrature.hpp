#pragma once

#include <span>
#include <vector>

namespace mdsl {

/// Composite Simpson on uniform samples. An odd number of intervals closes
/// with the 3/8 rule on the last three; two samples fall back to the trapezoid.
[[nodiscard]] double simpson(std::span<const double> y, double h);

/// Running integral from the first node to every node, fourth order throughout.
[[nodiscard]] std::vector<double> cumulative_simpson(std::span<const double> y, double h);

/// One-sided 5-point derivative at the first (at_end = false) or last sample.
[[nodiscard]] double end_derivative(std::span<const double> y, double h, bool at_end);

}  // namespace mdsl
