#include "rotorqm/shell.hpp"

#include <cmath>
#include <tuple>

#include "rotorqm/constants.hpp"
#include "rotorqm/error.hpp"

namespace rotorqm::shell {

namespace {

struct Scales {
  double radius;
  double mass;
  double b_r;  // hbar^2 / (2 m R0^2)
};

Scales scales(const RotatingFrame& frame, const Particle& particle) {
  validate_particle(particle);
  const double r = validate_frame(frame).frame.radius;
  return {r, particle.mass, characteristic_energy(particle, r)};
}

double axial_energy(double mass, double k) {
  const double hbar = kConstants.hbar;
  return hbar * hbar * k * k / (2.0 * mass);
}

double base_shift(const Scales& s, const SpectrumOptions& opts) {
  return opts.include_geometric_potential ? -s.b_r : 0.0;
}

// Shared by the psi-periodic and flux families so the zero-flux limit is bit-identical.
SpectrumPoint lower_family_point(SpectrumFamily family, const RotatingFrame& frame,
                                 const Scales& s, int label, double shifted_qn, double k,
                                 Sector sector, const SpectrumOptions& opts) {
  const double sigma = sector_sign(sector);
  const double e0 = axial_energy(s.mass, k) + s.b_r * shifted_qn * shifted_qn + base_shift(s, opts);
  const double correction = sigma * kConstants.hbar * frame.omega * shifted_qn;
  return make_spectrum_point(family, ModeSpec{sector, label, k, 0, BoundaryCondition::None}, e0,
                             correction);
}

}  // namespace

std::string_view to_string(SolutionClass c) noexcept {
  switch (c) {
    case SolutionClass::I: return "I";
    case SolutionClass::II: return "II";
    case SolutionClass::III: return "III";
  }
  return "?";
}

ShellCoefficients shell_coefficients(const RotatingFrame& frame, const Particle& particle,
                                     double k_plus, double k_minus, double e_plus,
                                     double e_minus) {
  const Scales s = scales(frame, particle);
  const double hbar = kConstants.hbar;
  const double r2 = s.radius * s.radius;
  auto b_of = [&](double k, double e) { return -r2 * (k * k - 2.0 * s.mass * e / (hbar * hbar)); };

  ShellCoefficients c;
  c.a_coeff = -2.0 * s.mass * r2 * frame.omega / hbar;
  c.b_plus = b_of(k_plus, e_plus);
  c.b_minus = b_of(k_minus, e_minus);
  c.d_plus = c.a_coeff * c.a_coeff + 4.0 * c.b_plus;
  c.d_minus = c.a_coeff * c.a_coeff + 4.0 * c.b_minus;
  std::tie(c.class_plus, c.class_minus) = classify(c);
  return c;
}

SolutionClass classify_discriminant(double d) noexcept {
  if (std::abs(d) <= kClassIITolerance) return SolutionClass::II;
  return d > 0.0 ? SolutionClass::I : SolutionClass::III;
}

std::pair<SolutionClass, SolutionClass> classify(const ShellCoefficients& coeffs) noexcept {
  return {classify_discriminant(coeffs.d_plus), classify_discriminant(coeffs.d_minus)};
}

AngularExponents angular_exponents(const ShellCoefficients& coeffs, Sector sector) {
  const double d = sector == Sector::Plus ? coeffs.d_plus : coeffs.d_minus;
  const SolutionClass cls = classify_discriminant(d);
  if (!is_solvable(cls)) {
    throw Error(ErrorCode::UnsupportedClass, "class III shell solutions are not solved");
  }
  const double sigma = sector_sign(sector);
  const double root = cls == SolutionClass::II ? 0.0 : std::sqrt(d);
  return {cls, sigma * 0.5 * (-coeffs.a_coeff + root), sigma * 0.5 * (-coeffs.a_coeff - root)};
}

SpectrumPoint class2_energy(const RotatingFrame& frame, const Particle& particle, double k,
                            Sector sector, const SpectrumOptions& opts) {
  const Scales s = scales(frame, particle);
  const double e0 = axial_energy(s.mass, k) + base_shift(s, opts);
  const double correction = -0.5 * s.mass * s.radius * s.radius * frame.omega * frame.omega;
  return make_spectrum_point(SpectrumFamily::ClassII,
                             ModeSpec{sector, 0, k, 0, BoundaryCondition::None}, e0, correction);
}

SpectrumPoint periodic_cap_psi_energy(const RotatingFrame& frame, const Particle& particle, int m,
                                      double k, Sector sector, const SpectrumOptions& opts) {
  const Scales s = scales(frame, particle);
  const double qn = m;
  const double e0 = axial_energy(s.mass, k) + s.b_r * qn * qn + base_shift(s, opts);
  const double correction = -0.5 * s.mass * s.radius * s.radius * frame.omega * frame.omega;
  return make_spectrum_point(SpectrumFamily::PeriodicPsiCap,
                             ModeSpec{sector, m, k, 0, BoundaryCondition::None}, e0, correction);
}

ShellMomentum periodic_cap_psi_momentum(const RotatingFrame& frame, const Particle& particle,
                                        int m, Branch branch) {
  const Scales s = scales(frame, particle);
  const double sign = branch == Branch::Plus ? 1.0 : -1.0;
  ShellMomentum out;
  out.classical_term = s.mass * s.radius * frame.omega;
  out.quantum_term = sign * kConstants.hbar * m / s.radius;
  out.total = out.classical_term + out.quantum_term;
  return out;
}

double omega_quantization(const Particle& particle, double radius, int s) {
  validate_particle(particle);
  if (!(radius > 0.0)) throw Error(ErrorCode::NonpositiveRadius, "radius must be positive");
  return kConstants.hbar * s / (2.0 * particle.mass * radius * radius);
}

SpectrumPoint periodic_lower_psi_energy(const RotatingFrame& frame, const Particle& particle,
                                        int p, double k, Sector sector,
                                        const SpectrumOptions& opts) {
  return lower_family_point(SpectrumFamily::PeriodicPsiLower, frame, scales(frame, particle), p,
                            static_cast<double>(p), k, sector, opts);
}

double periodic_lower_psi_momentum(const RotatingFrame& frame, int p) {
  const double r = validate_frame(frame).frame.radius;
  return -kConstants.hbar * p / r;
}

SpectrumPoint flux_spectrum(const RotatingFrame& frame, const Particle& particle,
                            const FluxSpec& flux, int p, double k, Sector sector,
                            const SpectrumOptions& opts) {
  if (!std::isfinite(flux.flux_ratio)) {
    throw Error(ErrorCode::InvalidArgument, "flux ratio must be finite");
  }
  const double shifted = p - sector_sign(sector) * flux.flux_ratio;
  return lower_family_point(SpectrumFamily::Flux, frame, scales(frame, particle), p, shifted, k,
                            sector, opts);
}

double flux_equivalent_omega(const Particle& particle, double flux_ratio, int p,
                             double b_r_prime) {
  validate_particle(particle);
  return b_r_prime * (p - flux_ratio) / kConstants.hbar;
}

double geometric_potential(const Particle& particle, double radius) {
  return -characteristic_energy(particle, radius);
}

InterferenceTrace sector_interference(std::complex<double> c_first, std::complex<double> c_second,
                                      double a_coeff, std::span<const double> phi_grid,
                                      std::pair<Sector, Sector> sectors) {
  using namespace std::complex_literals;
  InterferenceTrace trace;
  trace.sectors_used = sectors;
  trace.abscissa.assign(phi_grid.begin(), phi_grid.end());
  trace.total_density.reserve(phi_grid.size());
  trace.cross_term.reserve(phi_grid.size());

  const double s1 = sector_sign(sectors.first);
  const double s2 = sector_sign(sectors.second);
  auto state = [&](std::complex<double> c, double sigma, double phi) {
    return c * std::exp(-0.5i * sigma * a_coeff * phi);
  };
  for (double phi : phi_grid) {
    const auto psi1 = state(c_first, s1, phi);
    const auto psi2 = state(c_second, s2, phi);
    const double cross = 2.0 * std::real(std::conj(psi1) * psi2);
    trace.cross_term.push_back(cross);
    trace.total_density.push_back(std::norm(psi1) + std::norm(psi2) + cross);
  }

  if (sectors.first == sectors.second) {
    trace.no_sagnac = true;
    trace.roundtrip_cross_term = 2.0 * std::real(std::conj(c_first) * c_second);
    return trace;
  }
  const auto c_plus = sectors.first == Sector::Plus ? c_first : c_second;
  const auto c_minus = sectors.first == Sector::Plus ? c_second : c_first;
  trace.roundtrip_cross_term =
      2.0 * std::real(std::conj(c_plus) * c_minus * std::exp(2.0i * kPi * a_coeff));
  const double turns = std::abs(a_coeff);
  const double whole = std::floor(turns);
  trace.winding = static_cast<long>(whole);
  trace.extracted_phase = 2.0 * kPi * (turns - whole);
  return trace;
}

Census negative_energy_census_shell(const RotatingFrame& frame, const Particle& particle,
                                    const FluxSpec& flux, int p_min, int p_max, Sector sector) {
  if (p_min > p_max) throw Error(ErrorCode::InvalidArgument, "empty p range");
  Census census;
  for (int p = p_min; p <= p_max; ++p) {
    const auto point = flux_spectrum(frame, particle, flux, p, 0.0, sector);
    ++census.examined;
    if (point.negative()) census.negative_states.push_back(point);
  }
  census.count = census.negative_states.size();
  return census;
}

}  // namespace rotorqm::shell
