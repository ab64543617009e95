#pragma once

#include "config.hpp"
#include "output.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace mdsl::cli {

struct CommandArgs {
    // charfn
    double lambda_lo = 0.0;
    double lambda_hi = 10.0;
    std::size_t points = 11;
    // sweep
    std::vector<double> eps_list;
    // green, resolve
    double lambda = 0.0;
    std::size_t grid_n = 8;
    // resolve: f(x) = sum c_k x^k on every piece
    std::vector<double> f_poly{1.0};
    double f1 = 0.0;
    // oracle
    std::size_t count = 8;
    // verify
    bool skip_oracle = false;
    std::uint64_t seed = 1;
};

[[nodiscard]] Table cmd_eigs(const RunConfig& config);
[[nodiscard]] Table cmd_charfn(const RunConfig& config, const CommandArgs& args);
[[nodiscard]] Table cmd_sweep(const RunConfig& config, const CommandArgs& args);
[[nodiscard]] Table cmd_asym(const RunConfig& config);
[[nodiscard]] Table cmd_green(const RunConfig& config, const CommandArgs& args);
[[nodiscard]] Table cmd_resolve(const RunConfig& config, const CommandArgs& args);
[[nodiscard]] Table cmd_oracle(const RunConfig& config, const CommandArgs& args);

/// Table of (check, value, tol, status); `all_passed` reports the verdict.
[[nodiscard]] Table cmd_verify(const RunConfig& config, const CommandArgs& args, bool& all_passed);

}  // namespace mdsl::cli
