#include "mdsl/quadrature.hpp"

#include "mdsl/error.hpp"

namespace mdsl {

namespace {

double simpson_pair(const double* y, double h) { return h / 3.0 * (y[0] + 4.0 * y[1] + y[2]); }

double three_eighths(const double* y, double h) {
    return 3.0 * h / 8.0 * (y[0] + 3.0 * y[1] + 3.0 * y[2] + y[3]);
}

}  // namespace

double simpson(std::span<const double> y, double h) {
    const std::size_t n = y.size();
    if (n < 2) return 0.0;
    if (n == 2) return 0.5 * h * (y[0] + y[1]);
    const std::size_t intervals = n - 1;
    const std::size_t even_part = intervals % 2 == 0 ? intervals : intervals - 3;
    double s = 0.0;
    for (std::size_t i = 0; i < even_part; i += 2) s += simpson_pair(&y[i], h);
    if (even_part != intervals) s += three_eighths(&y[even_part], h);
    return s;
}

std::vector<double> cumulative_simpson(std::span<const double> y, double h) {
    const std::size_t n = y.size();
    std::vector<double> out(n, 0.0);
    if (n < 4) {
        for (std::size_t j = 1; j < n; ++j) out[j] = out[j - 1] + 0.5 * h * (y[j - 1] + y[j]);
        return out;
    }
    // Cubic through the first four samples integrated over the first cell.
    out[1] = h / 24.0 * (9.0 * y[0] + 19.0 * y[1] - 5.0 * y[2] + y[3]);
    for (std::size_t j = 2; j < n; j += 2) out[j] = out[j - 2] + simpson_pair(&y[j - 2], h);
    for (std::size_t j = 3; j < n; j += 2) out[j] = out[j - 3] + three_eighths(&y[j - 3], h);
    return out;
}

double end_derivative(std::span<const double> y, double h, bool at_end) {
    if (y.size() < 5) throw Error(Errc::InvalidArgument, "end_derivative needs 5 samples");
    if (!at_end) {
        return (-25.0 * y[0] + 48.0 * y[1] - 36.0 * y[2] + 16.0 * y[3] - 3.0 * y[4]) / (12.0 * h);
    }
    const std::size_t n = y.size() - 1;
    return (25.0 * y[n] - 48.0 * y[n - 1] + 36.0 * y[n - 2] - 16.0 * y[n - 3] + 3.0 * y[n - 4]) /
           (12.0 * h);
}

}  // namespace mdsl
