#include "run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <unistd.h>

#include "rotorqm/classical.hpp"
#include "rotorqm/constants.hpp"
#include "rotorqm/cylinder.hpp"
#include "rotorqm/error.hpp"
#include "rotorqm/precision.hpp"
#include "rotorqm/shell.hpp"
#include "rotorqm/specfun.hpp"

namespace rotorqm::cli {

namespace {

const std::vector<std::string> kShellColumns = {"family", "sector", "p_or_m", "k",
                                                "flux_ratio", "omega", "energy_J", "E0_J",
                                                "correction_J", "negative_flag"};
const std::vector<std::string> kCylinderColumns = {"bc", "n", "s_paper", "s_lib", "omega", "energy_J"};

std::vector<Sector> sector_list(SectorChoice choice) {
  switch (choice) {
    case SectorChoice::Plus: return {Sector::Plus};
    case SectorChoice::Minus: return {Sector::Minus};
    case SectorChoice::Both: return {Sector::Plus, Sector::Minus};
  }
  return {Sector::Plus};
}

std::vector<BoundaryCondition> bc_list(const RunConfig& c) {
  if (c.bc) return {*c.bc};
  return {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann};
}

std::vector<Cell> shell_row(const SpectrumPoint& p, double flux_ratio, double omega) {
  return {std::string(to_string(p.family)), std::string(to_string(p.mode.sector)),
          static_cast<long long>(p.mode.angular_qn), p.mode.axial_k, flux_ratio, omega, p.energy,
          p.e0, p.correction, static_cast<long long>(p.negative())};
}

std::vector<Cell> cylinder_row(const SpectrumPoint& p, double omega) {
  const long long s = p.mode.radial_index;
  return {std::string(to_string(p.mode.bc)), static_cast<long long>(p.mode.angular_qn), s - 1, s,
          omega, p.energy};
}

int mode_index(const RunConfig& c) {
  const int s = c.paper_index_labels ? c.s + 1 : c.s;
  if (s < 1) throw Error(ErrorCode::IndexOutOfRange, "radial zero index must be >= 1 (>= 0 with --paper-indexing)");
  return s;
}

int zero_count(const RunConfig& c) {
  if (c.s < 1) throw Error(ErrorCode::IndexOutOfRange, "--s must be at least 1 zero");
  return c.s;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

Table classical_sagnac(const RunConfig& c) {
  Table t;
  const auto frame = c.frame();
  const auto circle = classical::ClosedPath::circle(c.radius);
  if (c.trace) {
    t.columns = {"phi", "r", "dT_contribution"};
    double sum = 0.0;
    for (const auto& row : classical::path_trace(frame, circle, c.samples)) {
      t.rows.push_back({row.phi, row.r, row.dT_contribution});
      sum += row.dT_contribution;
    }
    t.results["trace_sum_delta_t"] = sum;
    t.results["delta_t"] = classical::roundtrip_delta_t(frame, c.radius).delta_t;
    return t;
  }
  const auto exact = classical::roundtrip_delta_t(frame, c.radius);
  const double area = kPi * c.radius * c.radius;
  t.columns = {"omega", "radius", "gamma", "t_cw", "t_ccw", "delta_t", "leading_order_delta_t",
               "circulation_phase"};
  std::vector<Cell> row = {c.omega,      c.radius,    classical::gamma_factor(frame, c.radius),
                           exact.t_cw,   exact.t_ccw, exact.delta_t,
                           classical::leading_order_delta_t(frame, area),
                           classical::circulation_phase(frame, c.particle())};
  if (c.frequency) {
    t.columns.insert(t.columns.end(), {"frequency", "sagnac_phase"});
    row.push_back(*c.frequency);
    row.push_back(classical::classical_sagnac_phase({*c.frequency}, exact.delta_t));
  }
  t.rows.push_back(std::move(row));
  return t;
}

Table shell_spectrum(const RunConfig& c) {
  Table t;
  t.columns = kShellColumns;
  const SpectrumOptions opts{c.include_geometric_potential};
  for (Sector sector : sector_list(c.sectors)) {
    if (c.family == "class_ii") {
      t.rows.push_back(shell_row(shell::class2_energy(c.frame(), c.particle(), c.k, sector, opts), 0.0, c.omega));
      continue;
    }
    for (int q = c.p_min; q <= c.p_max; ++q) {
      const auto p = c.family == "periodic_cap_psi"
                         ? shell::periodic_cap_psi_energy(c.frame(), c.particle(), q, c.k, sector, opts)
                         : shell::periodic_lower_psi_energy(c.frame(), c.particle(), q, c.k, sector, opts);
      t.rows.push_back(shell_row(p, 0.0, c.omega));
    }
  }
  return t;
}

Table flux_spectrum(const RunConfig& c) {
  Table t;
  t.columns = kShellColumns;
  const SpectrumOptions opts{c.include_geometric_potential};
  long long negative = 0;
  for (Sector sector : sector_list(c.sectors)) {
    for (int p = c.p_min; p <= c.p_max; ++p) {
      const auto point = shell::flux_spectrum(c.frame(), c.particle(), FluxSpec{c.flux_ratio}, p, c.k, sector, opts);
      negative += point.negative();
      t.rows.push_back(shell_row(point, c.flux_ratio, c.omega));
    }
  }
  const double b_r = characteristic_energy(c.particle(), c.radius);
  t.results["negative_count"] = negative;
  t.results["vertex_p_minus_flux"] = -kConstants.hbar * c.omega / (2.0 * b_r);
  return t;
}

Table cylinder_spectrum(const RunConfig& c) {
  Table t;
  t.columns = kCylinderColumns;
  for (auto bc : bc_list(c)) {
    for (int s = 1; s <= zero_count(c); ++s) {
      const auto p = cylinder::mode_spectrum_point(cylinder::make_mode(c.frame(), c.particle(), c.n, s, bc, c.k));
      t.rows.push_back(cylinder_row(p, c.omega));
    }
  }
  t.results["s_paper_offset"] = "s_paper = s_lib - 1";
  return t;
}

Table interference(const RunConfig& c) {
  Table t;
  t.columns = {"phi", "cross_term", "total_density"};
  const double a = shell::shell_coefficients(c.frame(), c.particle(), c.k, c.k, 0.0, 0.0).a_coeff;
  const auto grid = linspace(0.0, 2.0 * kPi, c.samples);
  std::pair<Sector, Sector> sectors{Sector::Plus, Sector::Minus};
  if (c.sectors == SectorChoice::Plus) sectors = {Sector::Plus, Sector::Plus};
  if (c.sectors == SectorChoice::Minus) sectors = {Sector::Minus, Sector::Minus};
  const auto trace = shell::sector_interference(1.0, 1.0, a, grid, sectors);
  for (std::size_t i = 0; i < grid.size(); ++i)
    t.rows.push_back({grid[i], trace.cross_term[i], trace.total_density[i]});
  t.results["a_coeff"] = a;
  t.results["no_sagnac"] = trace.no_sagnac;
  t.results["roundtrip_cross_term"] = trace.roundtrip_cross_term;
  if (!trace.no_sagnac) {
    t.results["sagnac_phase"] = 2.0 * kPi * std::abs(a);
    t.results["extracted_phase"] = trace.extracted_phase;
    t.results["winding"] = trace.winding;
    t.results["circulation_phase"] = classical::circulation_phase(c.frame(), c.particle());
  }
  return t;
}

Table beat(const RunConfig& c) {
  Table t;
  t.columns = {"r", "t", "cross_term"};
  const auto bc = c.bc.value_or(BoundaryCondition::Dirichlet);
  const int s = mode_index(c);
  const double period = cylinder::beat_period(c.frame(), c.n);
  const double span = period > 0.0 ? 2.0 * period : 1e-6;
  const auto radii = linspace(0.0, c.radius, c.samples);
  const auto times = linspace(0.0, span, c.samples);
  const auto trace = cylinder::anomalous_interference(c.frame(), c.particle(), c.n, s, bc, radii, times);
  double scale = 1.0;
  if (c.normalize_modes) {
    const double norm = cylinder::radial_norm(cylinder::make_mode(c.frame(), c.particle(), c.n, s, bc));
    scale = 1.0 / (norm * norm);
  }
  for (std::size_t i = 0; i < radii.size(); ++i)
    for (std::size_t j = 0; j < times.size(); ++j)
      t.rows.push_back({radii[i], times[j], scale * trace.cross_term[i * times.size() + j]});
  t.results["beat_period"] = period;
  t.results["time_dependent"] = trace.time_dependent;
  t.results["bc"] = std::string(to_string(bc));
  t.results["s_lib"] = s;
  t.results["printed_phase"] = "cos(2 n hbar Omega t)";
  t.results["implemented_phase"] = "cos(2 n Omega t)";
  return t;
}

Table census(const RunConfig& c) {
  Table t;
  Census result;
  if (c.bc) {
    t.columns = kCylinderColumns;
    result = cylinder::negative_energy_census_3d(c.frame(), c.particle(), *c.bc, std::abs(c.n), zero_count(c));
    for (const auto& p : result.negative_states) t.rows.push_back(cylinder_row(p, c.omega));
    t.results["kind"] = "cylinder";
  } else {
    t.columns = kShellColumns;
    result = shell::negative_energy_census_shell(c.frame(), c.particle(), FluxSpec{c.flux_ratio}, c.p_min, c.p_max);
    for (const auto& p : result.negative_states) t.rows.push_back(shell_row(p, c.flux_ratio, c.omega));
    t.results["kind"] = "shell";
  }
  t.results["count"] = result.count;
  t.results["examined"] = result.examined;
  return t;
}

Table bessel_table(const RunConfig& c) {
  Table t;
  t.columns = {"n", "kind", "s", "root"};
  const int offset = c.paper_index_labels ? 1 : 0;
  for (auto kind : {specfun::ZeroKind::FunctionZero, specfun::ZeroKind::DerivativeZero}) {
    const auto table = specfun::zero_table(c.n, kind, zero_count(c));
    const std::string label = kind == specfun::ZeroKind::FunctionZero ? "function" : "derivative";
    for (std::size_t i = 0; i < table.zeros.size(); ++i)
      t.rows.push_back({static_cast<long long>(c.n), label, static_cast<long long>(i + 1 - offset), table.zeros[i]});
  }
  return t;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Table build_table(const RunConfig& c) {
  switch (c.subcommand) {
    case Subcommand::ClassicalSagnac: return classical_sagnac(c);
    case Subcommand::ShellSpectrum: return shell_spectrum(c);
    case Subcommand::FluxSpectrum: return flux_spectrum(c);
    case Subcommand::CylinderSpectrum: return cylinder_spectrum(c);
    case Subcommand::Interference: return interference(c);
    case Subcommand::Beat: return beat(c);
    case Subcommand::Census: return census(c);
    case Subcommand::BesselTable: return bessel_table(c);
  }
  throw Error(ErrorCode::InvalidArgument, "unhandled subcommand");
}

std::string render(const RunConfig& config) {
  const Table table = build_table(config);
  nlohmann::json meta;
  meta["tool"] = std::string("rotorqm ") + ROTORQM_VERSION;
  meta["config"] = nlohmann::json(config);
  meta["constants"] = constants_table();
  nlohmann::json results = table.results;
  results["class_ii_tolerance"] = shell::kClassIITolerance;
  results["include_geometric_potential"] = config.include_geometric_potential;
  results["precision"] = {{"quadrature_rel_tol", precision().quadrature_rel_tol},
                          {"root_rel_tol", precision().root_rel_tol}};
  meta["results"] = results;
  if (config.timestamp) meta["generated"] = utc_timestamp();
  return config.format == OutputFormat::Json ? render_json(table, meta)
                                             : render_csv(table, meta);
}

int run(const RunConfig& config) {
  const std::string text = render(config);
  if (config.out.empty()) {
    std::cout << text;
    return std::cout.good() ? 0 : 1;
  }
  const std::filesystem::path target(config.out);
  std::filesystem::path temp = target;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(temp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + temp.string());
    f << text;
    f.close();
    if (!f) throw Error(ErrorCode::InvalidArgument, "failed writing " + temp.string());
  }
  std::filesystem::rename(temp, target);
  return 0;
}

}  // namespace rotorqm::cli
