#include "config.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "rotorqm/error.hpp"
#include "rotorqm/serialize.hpp"

namespace rotorqm::cli {

namespace {

constexpr std::pair<Subcommand, std::string_view> kSubcommands[] = {
    {Subcommand::ClassicalSagnac, "classical-sagnac"},
    {Subcommand::ShellSpectrum, "shell-spectrum"},
    {Subcommand::FluxSpectrum, "flux-spectrum"},
    {Subcommand::CylinderSpectrum, "cylinder-spectrum"},
    {Subcommand::Interference, "interference"},
    {Subcommand::Beat, "beat"},
    {Subcommand::Census, "census"},
    {Subcommand::BesselTable, "bessel-table"},
};

template <typename T>
nlohmann::json or_null(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <typename T>
std::optional<T> optional_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

void emit_usage_error(const std::string& message) {
  std::cerr << nlohmann::json{{"error", {{"code", "USAGE"}, {"message", message}}}}.dump() << '\n';
}

RunConfig load_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open replay file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  nlohmann::json config;
  if (!text.empty() && text.front() == '{') {
    config = nlohmann::json::parse(text).at("meta").at("config");
  } else {
    const std::string tag = "# config: ";
    const auto at = text.find(tag);
    if (at == std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "no embedded config in " + path);
    }
    const auto end = text.find('\n', at);
    config = nlohmann::json::parse(text.substr(at + tag.size(), end - at - tag.size()));
  }
  return config.get<RunConfig>();
}

}  // namespace

Particle RunConfig::particle() const {
  if (particle_name == "electron") return Particle::electron();
  if (particle_name == "neutron") return Particle::neutron();
  return Particle{mass, 0.0};
}

std::string_view to_string(Subcommand s) noexcept {
  for (const auto& [value, name] : kSubcommands)
    if (value == s) return name;
  return "?";
}

std::optional<Subcommand> subcommand_from_string(std::string_view name) noexcept {
  for (const auto& [value, text] : kSubcommands)
    if (text == name) return value;
  return std::nullopt;
}

void apply_preset(RunConfig& config, std::string_view name) {
  // All presets share the rotating frame of the reference figures: an electron on a 10 um
  // shell whose rim moves at -100 m/s.
  config.particle_name = "electron";
  config.radius = 1e-5;
  config.linear_velocity = -100.0;
  if (name == "fig1") {
    config.flux_ratio = 2.0;
    config.p_min = -10;
    config.p_max = 30;
  } else if (name == "fig2") {
    config.n = 1;
    config.s = 5;
    config.bc.reset();
  } else if (name == "eq86") {
    config.n = 1;
    config.s = 1;
    config.bc.reset();
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown preset " + std::string(name));
  }
  config.preset = std::string(name);
}

void finalize(RunConfig& config) {
  if (config.linear_velocity) {
    config.omega = frame_from_linear_speed(*config.linear_velocity, config.radius).omega;
  }
  validate_frame(config.frame());
  if (config.particle_name == "electron" || config.particle_name == "neutron") {
    config.mass = config.particle().mass;
  } else {
    config.particle_name = "custom";
  }
  validate_particle(config.particle());
  if (config.p_min > config.p_max) throw Error(ErrorCode::InvalidArgument, "--p-min exceeds --p-max");
  if (config.samples < 2) throw Error(ErrorCode::InvalidArgument, "--samples must be at least 2");
  if (config.family != "periodic_lower_psi" && config.family != "periodic_cap_psi" &&
      config.family != "class_ii") {
    throw Error(ErrorCode::InvalidArgument, "unknown shell family " + config.family);
  }
}

void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json{
      {"subcommand", std::string(to_string(c.subcommand))},
      {"preset", or_null(c.preset)},
      {"omega", c.omega},
      {"radius", c.radius},
      {"linear_velocity", or_null(c.linear_velocity)},
      {"particle", {{"name", c.particle_name}, {"mass", c.mass}}},
      {"flux_ratio", c.flux_ratio},
      {"k", c.k},
      {"n", c.n},
      {"s", c.s},
      {"p_min", c.p_min},
      {"p_max", c.p_max},
      {"bc", or_null(c.bc)},
      {"family", c.family},
      {"sectors", c.sectors},
      {"frequency", or_null(c.frequency)},
      {"trace", c.trace},
      {"samples", c.samples},
      {"format", c.format},
      {"timestamp", c.timestamp},
      {"include_geometric_potential", c.include_geometric_potential},
      {"normalize_modes", c.normalize_modes},
      {"paper_index_labels", c.paper_index_labels},
  };
}

void from_json(const nlohmann::json& j, RunConfig& c) {
  const auto sub = subcommand_from_string(j.at("subcommand").get<std::string>());
  if (!sub) throw Error(ErrorCode::InvalidArgument, "unknown subcommand in config");
  c.subcommand = *sub;
  c.preset = optional_field<std::string>(j, "preset");
  j.at("omega").get_to(c.omega);
  j.at("radius").get_to(c.radius);
  c.linear_velocity = optional_field<double>(j, "linear_velocity");
  j.at("particle").at("name").get_to(c.particle_name);
  j.at("particle").at("mass").get_to(c.mass);
  j.at("flux_ratio").get_to(c.flux_ratio);
  j.at("k").get_to(c.k);
  j.at("n").get_to(c.n);
  j.at("s").get_to(c.s);
  j.at("p_min").get_to(c.p_min);
  j.at("p_max").get_to(c.p_max);
  c.bc = optional_field<BoundaryCondition>(j, "bc");
  j.at("family").get_to(c.family);
  j.at("sectors").get_to(c.sectors);
  c.frequency = optional_field<double>(j, "frequency");
  j.at("trace").get_to(c.trace);
  j.at("samples").get_to(c.samples);
  j.at("format").get_to(c.format);
  j.at("timestamp").get_to(c.timestamp);
  j.at("include_geometric_potential").get_to(c.include_geometric_potential);
  j.at("normalize_modes").get_to(c.normalize_modes);
  j.at("paper_index_labels").get_to(c.paper_index_labels);
}

ParseResult parse_args(int argc, const char* const* argv) {
  CLI::App app{"Rotating-frame quantum mechanics: spectra, Sagnac phases and figure data", "rotorqm"};
  app.require_subcommand(0, 1);

  RunConfig v;
  double velocity = 0.0, frequency = 0.0;
  std::string particle, preset, bc, format, sector, replay;

  auto* o_omega = app.add_option("--omega", v.omega, "frame angular velocity (rad/s)");
  auto* o_radius = app.add_option("--radius", v.radius, "frame radius R0 (m)");
  auto* o_velocity =
      app.add_option("--linear-velocity", velocity, "rim speed R0 omega (m/s)")->excludes(o_omega);
  auto* o_mass = app.add_option("--mass", v.mass, "particle rest mass (kg)");
  auto* o_particle = app.add_option("--particle", particle, "electron or neutron")
                         ->check(CLI::IsMember({"electron", "neutron"}))
                         ->excludes(o_mass);
  auto* o_flux = app.add_option("--flux-ratio", v.flux_ratio, "enclosed flux in flux quanta");
  auto* o_k = app.add_option("--k", v.k, "axial wavenumber (1/m)");
  auto* o_n = app.add_option("--n", v.n, "angular quantum number or order");
  auto* o_s = app.add_option("--s", v.s, "radial zero count, or zero index for single modes");
  auto* o_pmin = app.add_option("--p-min", v.p_min, "lowest shell quantum number");
  auto* o_pmax = app.add_option("--p-max", v.p_max, "highest shell quantum number");
  auto* o_bc = app.add_option("--bc", bc, "cylinder boundary condition")
                   ->check(CLI::IsMember({"dirichlet", "neumann"}));
  auto* o_preset = app.add_option("--preset", preset, "figure parameter bundle")
                       ->check(CLI::IsMember({"fig1", "fig2", "eq86"}));
  auto* o_format = app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  auto* o_out = app.add_option("--out", v.out, "output path (default stdout)");
  auto* o_no_ts = app.add_flag("--no-timestamp", "omit the generation timestamp");
  auto* o_geom = app.add_flag("--with-geometric-potential", "add the thin-shell geometric potential");
  auto* o_paper = app.add_flag("--paper-indexing", "zero-based radial indices, as on the figure axes");
  auto* o_norm = app.add_flag("--normalize-modes", "unit radial L2 norm for cylinder modes");
  auto* o_family = app.add_option("--family", v.family, "shell-spectrum family")
                       ->check(CLI::IsMember({"periodic_lower_psi", "periodic_cap_psi", "class_ii"}));
  auto* o_sector = app.add_option("--sector", sector, "plus, minus or both")
                       ->check(CLI::IsMember({"plus", "minus", "both"}));
  auto* o_freq = app.add_option("--frequency", frequency, "classical signal frequency (Hz)");
  auto* o_trace = app.add_flag("--trace", "classical-sagnac: per-angle delay trace");
  auto* o_samples = app.add_option("--samples", v.samples, "grid size for traces");
  auto* o_replay = app.add_option("--replay", replay, "re-run the config embedded in an output file");

  const std::map<Subcommand, std::string> descriptions = {
      {Subcommand::ClassicalSagnac, "round-trip timing and Sagnac phase for a circular rim"},
      {Subcommand::ShellSpectrum, "thin-shell energies for the chosen family and sectors"},
      {Subcommand::FluxSpectrum, "thin-shell energies with enclosed magnetic flux"},
      {Subcommand::CylinderSpectrum, "solid-cylinder energies for s = 1..--s"},
      {Subcommand::Interference, "angular interference of two shell sector states"},
      {Subcommand::Beat, "cross term between the two sectors of one cylinder mode"},
      {Subcommand::Census, "count negative-energy states (cylinder with --bc, shell otherwise)"},
      {Subcommand::BesselTable, "zeros of J_n and J_n' up to index --s"},
  };
  std::vector<std::pair<Subcommand, CLI::App*>> subs;
  for (const auto& [value, name] : kSubcommands) {
    auto* sub = app.add_subcommand(std::string(name), descriptions.at(value));
    sub->fallthrough();
    subs.emplace_back(value, sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return {std::nullopt, 0};  // --help
    emit_usage_error(e.what());
    return {std::nullopt, 2};
  }

  RunConfig c;
  if (o_replay->count()) {
    c = load_replay(replay);
    if (o_out->count()) c.out = v.out;
    if (o_no_ts->count()) c.timestamp = false;
    finalize(c);
    return {c, 0};
  }

  bool chosen = false;
  for (const auto& [value, sub] : subs) {
    if (sub->parsed()) {
      c.subcommand = value;
      chosen = true;
    }
  }
  if (!chosen) {
    emit_usage_error("a subcommand is required");
    return {std::nullopt, 2};
  }

  if (o_preset->count()) apply_preset(c, preset);
  if (o_omega->count()) {
    c.omega = v.omega;
    c.linear_velocity.reset();
  }
  if (o_velocity->count()) c.linear_velocity = velocity;
  if (o_radius->count()) c.radius = v.radius;
  if (o_mass->count()) {
    c.particle_name = "custom";
    c.mass = v.mass;
  }
  if (o_particle->count()) c.particle_name = particle;
  if (o_flux->count()) c.flux_ratio = v.flux_ratio;
  if (o_k->count()) c.k = v.k;
  if (o_n->count()) c.n = v.n;
  if (o_s->count()) c.s = v.s;
  if (o_pmin->count()) c.p_min = v.p_min;
  if (o_pmax->count()) c.p_max = v.p_max;
  if (o_bc->count()) c.bc = bc == "dirichlet" ? BoundaryCondition::Dirichlet : BoundaryCondition::Neumann;
  if (o_format->count()) c.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (o_out->count()) c.out = v.out;
  if (o_no_ts->count()) c.timestamp = false;
  if (o_geom->count()) c.include_geometric_potential = true;
  if (o_paper->count()) c.paper_index_labels = true;
  if (o_norm->count()) c.normalize_modes = true;
  if (o_family->count()) c.family = v.family;
  if (o_sector->count()) {
    c.sectors = sector == "plus" ? SectorChoice::Plus
                : sector == "minus" ? SectorChoice::Minus
                                    : SectorChoice::Both;
  } else if (c.subcommand == Subcommand::Interference) {
    c.sectors = SectorChoice::Both;
  }
  if (o_freq->count()) c.frequency = frequency;
  if (o_trace->count()) c.trace = true;
  if (o_samples->count()) c.samples = v.samples;
  finalize(c);
  return {c, 0};
}

}  // namespace rotorqm::cli
