#include <exception>
#include <iostream>
#include <nlohmann/json.hpp>

#include "config.hpp"
#include "rotorqm/error.hpp"
#include "run.hpp"

int main(int argc, char** argv) {
  using nlohmann::json;
  try {
    const auto parsed = rotorqm::cli::parse_args(argc, argv);
    if (!parsed.config) return parsed.exit_code;
    return rotorqm::cli::run(*parsed.config);
  } catch (const rotorqm::Error& e) {
    std::cerr << json{{"error", {{"code", rotorqm::error_code_name(e.code())}, {"message", e.what()}}}}.dump()
              << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"code", "INTERNAL"}, {"message", e.what()}}}}.dump() << '\n';
    return 1;
  }
}
