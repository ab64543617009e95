#pragma once

#include "config.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace mdsl::cli {

struct Missing {};

/// A table cell; Missing prints as NA (csv) or null (jsonl).
using Cell = std::variant<Missing, double, long long, std::string>;

[[nodiscard]] inline Cell cell(std::optional<double> v) {
    return v ? Cell{*v} : Cell{Missing{}};
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

[[nodiscard]] std::string format_number(double v, int precision);

void write_table(std::ostream& os, const Table& table, Format format, int precision);

}  // namespace mdsl::cli
