#pragma once

// Run configuration for the rotorqm command-line tool. Fully serializable: every output
// file embeds it, and `--replay` rebuilds it from such a header.

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotorqm/serialize.hpp"
#include "rotorqm/types.hpp"

namespace rotorqm::cli {

enum class Subcommand {
  ClassicalSagnac,
  ShellSpectrum,
  FluxSpectrum,
  CylinderSpectrum,
  Interference,
  Beat,
  Census,
  BesselTable,
};

enum class OutputFormat { Csv, Json };

/// Which sectors a spectrum or superposition covers.
enum class SectorChoice { Plus, Minus, Both };

NLOHMANN_JSON_SERIALIZE_ENUM(OutputFormat, {{OutputFormat::Csv, "csv"}, {OutputFormat::Json, "json"}})
NLOHMANN_JSON_SERIALIZE_ENUM(SectorChoice, {{SectorChoice::Plus, "plus"},
                                            {SectorChoice::Minus, "minus"},
                                            {SectorChoice::Both, "both"}})

struct RunConfig {
  Subcommand subcommand = Subcommand::ClassicalSagnac;
  std::optional<std::string> preset;

  double omega = 0.0;   ///< rad/s; derived from linear_velocity when that is set
  double radius = 1e-5;  ///< m
  std::optional<double> linear_velocity;

  std::string particle_name = "electron";  ///< electron, neutron, or custom
  double mass = 0.0;                        ///< kg; filled from the particle unless custom

  double flux_ratio = 0.0;
  double k = 0.0;
  int n = 1;
  int s = 5;  ///< zero count for tables and spectra, zero index for single modes
  int p_min = -10;
  int p_max = 30;
  std::optional<BoundaryCondition> bc;
  std::string family = "periodic_lower_psi";
  SectorChoice sectors = SectorChoice::Plus;
  std::optional<double> frequency;  ///< Hz, classical-sagnac phase
  bool trace = false;               ///< classical-sagnac: emit the per-angle delay trace
  int samples = 64;

  OutputFormat format = OutputFormat::Csv;
  std::string out;  ///< empty: stdout. Not part of the serialized config.
  bool timestamp = true;
  bool include_geometric_potential = false;
  bool normalize_modes = false;
  bool paper_index_labels = false;

  RotatingFrame frame() const { return {omega, radius}; }
  Particle particle() const;
};

std::string_view to_string(Subcommand s) noexcept;
std::optional<Subcommand> subcommand_from_string(std::string_view name) noexcept;

/// Applies a named parameter bundle (fig1, fig2, eq86). Physics flags are left untouched.
/// Throws INVALID_ARGUMENT for unknown names.
void apply_preset(RunConfig& config, std::string_view name);

/// Resolves derived fields (omega from linear velocity, mass from particle) and validates.
void finalize(RunConfig& config);

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = 0;  ///< meaningful when config is empty (help, usage error)
};

/// Parses a command line. `--replay FILE` loads the config embedded in an output file,
/// with `--out` and `--no-timestamp` still honored.
ParseResult parse_args(int argc, const char* const* argv);

}  // namespace rotorqm::cli
