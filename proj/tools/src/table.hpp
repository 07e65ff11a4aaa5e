#pragma once

// Row-oriented output with CSV and JSON renderings.

#include <nlohmann/json.hpp>
#include <string>
#include <variant>
#include <vector>

namespace rotorqm::cli {

using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::json results = nlohmann::json::object();  ///< run-level values (counts, periods, ...)
};

/// Scientific notation with 10 significant digits, e.g. -1.583455224e-28.
std::string format_double(double value);

/// `#`-prefixed header lines, one per `meta` key, then the column line and the rows.
std::string render_csv(const Table& table, const nlohmann::json& meta);

/// {"meta": ..., "rows": [{column: value}, ...]}
std::string render_json(const Table& table, const nlohmann::json& meta);

}  // namespace rotorqm::cli
