#pragma once

#include <optional>
#include <string_view>

namespace rotorqm {

/// Internal numerical tolerances.
///
/// Defaults: quadrature panels are doubled until the relative change drops below 1e-12;
/// root brackets are shrunk to a few ulps. The `ROTORQM_PRECISION` environment variable
/// overrides them, as `<quad_tol>` or `<quad_tol>,<root_tol>`.
struct Precision {
  double quadrature_rel_tol = 1e-12;
  double root_rel_tol = 4.0e-16;
};

/// Parses the `ROTORQM_PRECISION` syntax. Returns nullopt on malformed or non-positive input.
std::optional<Precision> parse_precision(std::string_view text);

/// Process-wide settings, read from the environment on first use.
const Precision& precision();

}  // namespace rotorqm
