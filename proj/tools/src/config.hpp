#pragma once

#include "mdsl/problem.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace mdsl::cli {

enum class Format { csv, jsonl };

struct SolverBlock {
    double lambda_max = 100.0;
    std::optional<double> scan_step;
    double refine_tol = 1e-12;
    std::size_t grid_points = 801;
    int oracle_m = 2000;
};

struct OutputBlock {
    Format format = Format::csv;
    std::string path;  // empty: stdout
    int precision = 12;
};

struct RunConfig {
    ProblemSpec problem;
    SolverBlock solver;
    OutputBlock output;
};

/// Raised for malformed configuration text; maps to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses "key = value" lines with dotted keys; '#' starts a comment.
[[nodiscard]] std::map<std::string, std::string> parse_key_values(const std::string& text);

/// Arithmetic on numbers and pi: + - * / and parentheses.
[[nodiscard]] double evaluate_expression(const std::string& text);

[[nodiscard]] RunConfig load_config(const std::string& text);
[[nodiscard]] RunConfig load_config_file(const std::string& path);

}  // namespace mdsl::cli
