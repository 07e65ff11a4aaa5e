#include "rotorqm/precision.hpp"

#include <cstdlib>
#include <string>

namespace rotorqm {

namespace {

std::optional<double> parse_positive(std::string_view s) {
  // std::from_chars for double is not available on every libstdc++ we target.
  std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !(v > 0.0)) return std::nullopt;
  return v;
}

}  // namespace

std::optional<Precision> parse_precision(std::string_view text) {
  Precision p;
  const auto comma = text.find(',');
  const auto quad = parse_positive(text.substr(0, comma));
  if (!quad) return std::nullopt;
  p.quadrature_rel_tol = *quad;
  if (comma != std::string_view::npos) {
    const auto root = parse_positive(text.substr(comma + 1));
    if (!root) return std::nullopt;
    p.root_rel_tol = *root;
  }
  return p;
}

const Precision& precision() {
  static const Precision p = [] {
    if (const char* env = std::getenv("ROTORQM_PRECISION")) {
      if (auto parsed = parse_precision(env)) return *parsed;
    }
    return Precision{};
  }();
  return p;
}

}  // namespace rotorqm
