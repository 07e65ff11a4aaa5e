#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <type_traits>

namespace rotorqm::cli {

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // print -0 as 0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9e", value);
  return buf;
}

std::string render_csv(const Table& table, const nlohmann::json& meta) {
  std::string out;
  for (const auto& [key, value] : meta.items()) {
    out += "# " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out += (i ? "," : "") + table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) out += format_double(v);
            else if constexpr (std::is_same_v<T, long long>) out += std::to_string(v);
            else out += v;
          },
          row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table, const nlohmann::json& meta) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[table.columns[i]] = v; }, row[i]);
    }
    rows.push_back(std::move(obj));
  }
  return nlohmann::json{{"meta", meta}, {"rows", rows}}.dump(2) + "\n";
}

}  // namespace rotorqm::cli
