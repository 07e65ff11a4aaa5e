#include "rotorqm/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "rotorqm/constants.hpp"
#include "rotorqm/error.hpp"
#include "rotorqm/specfun.hpp"

namespace rotorqm::cylinder {

namespace {

constexpr double kRadiusSlack = 1e-12;

double zero_for(BoundaryCondition bc, int n, int s) {
  switch (bc) {
    case BoundaryCondition::Dirichlet: return specfun::bessel_zero(n, s);
    case BoundaryCondition::Neumann: return specfun::bessel_prime_zero(n, s);
    case BoundaryCondition::None: break;
  }
  throw Error(ErrorCode::InvalidArgument, "cylinder modes need a Dirichlet or Neumann condition");
}

}  // namespace

CylinderMode make_mode(const RotatingFrame& frame, const Particle& particle, int n, int s,
                       BoundaryCondition bc, double k, Sector sector) {
  validate_particle(particle);
  const double radius = validate_frame(frame).frame.radius;
  if (s < 1) throw Error(ErrorCode::IndexOutOfRange, "radial index must be >= 1");
  const double root = zero_for(bc, n, s);
  const double hbar = kConstants.hbar;
  const double two_m = 2.0 * particle.mass;

  CylinderMode mode;
  mode.n = n;
  mode.s = s;
  mode.k = k;
  mode.bc = bc;
  mode.sector = sector;
  mode.radius = radius;
  mode.radial_wavenumber = root / radius;
  const double kappa = mode.radial_wavenumber;
  mode.e0 = hbar * hbar * kappa * kappa / two_m + hbar * hbar * k * k / two_m;
  mode.correction = sector_sign(sector) * hbar * frame.omega * n;
  mode.energy = mode.e0 + mode.correction;
  return mode;
}

SpectrumPoint mode_spectrum_point(const CylinderMode& mode) {
  const auto family = mode.bc == BoundaryCondition::Dirichlet ? SpectrumFamily::CylDirichlet
                                                              : SpectrumFamily::CylNeumann;
  return make_spectrum_point(family, ModeSpec{mode.sector, mode.n, mode.k, mode.s, mode.bc},
                             mode.e0, mode.correction);
}

SpectrumPoint dirichlet_energy(const RotatingFrame& frame, const Particle& particle, int n, int s,
                               double k, Sector sector) {
  return mode_spectrum_point(make_mode(frame, particle, n, s, BoundaryCondition::Dirichlet, k, sector));
}

SpectrumPoint neumann_energy(const RotatingFrame& frame, const Particle& particle, int n, int s,
                             double k, Sector sector) {
  return mode_spectrum_point(make_mode(frame, particle, n, s, BoundaryCondition::Neumann, k, sector));
}

double radial_norm(const CylinderMode& mode) {
  // int_0^R J_n(kr)^2 r dr = R^2/2 [J_n'(kR)^2 + (1 - n^2/(kR)^2) J_n(kR)^2]
  const double x = mode.radial_wavenumber * mode.radius;
  const double j = specfun::bessel_j(mode.n, x);
  const double jp = specfun::bessel_j_prime(mode.n, x);
  const double nn = static_cast<double>(mode.n) * mode.n;
  const double r2 = mode.radius * mode.radius;
  return std::sqrt(0.5 * r2 * (jp * jp + (1.0 - nn / (x * x)) * j * j));
}

std::complex<double> mode_wavefunction(const CylinderMode& mode, double r, double phi, double z,
                                       double t, const WavefunctionOptions& opts) {
  using namespace std::complex_literals;
  if (!(r >= 0.0) || r > mode.radius * (1.0 + kRadiusSlack)) {
    throw Error(ErrorCode::ROutOfRange,
                "r = " + std::to_string(r) + " outside [0, " + std::to_string(mode.radius) + "]");
  }
  const double x = std::min(mode.radial_wavenumber * r, mode.radial_wavenumber * mode.radius);
  double radial = specfun::bessel_j(mode.n, x);
  if (opts.normalize) radial /= radial_norm(mode);
  const double phase = -mode.energy * t / kConstants.hbar - mode.n * phi + mode.k * z;
  return radial * std::exp(1.0i * phase);
}

Census negative_energy_census_3d(const RotatingFrame& frame, const Particle& particle,
                                 BoundaryCondition bc, int n_min, int n_max, int s_max) {
  if (n_min > n_max) throw Error(ErrorCode::InvalidArgument, "empty n range");
  if (std::max(std::abs(n_min), std::abs(n_max)) > specfun::kMaxOrder) {
    throw Error(ErrorCode::OrderOutOfRange, "census order range exceeds |n| <= 50");
  }
  if (s_max < 1 || s_max > specfun::kMaxZeroIndex) {
    throw Error(ErrorCode::IndexOutOfRange, "census needs 1 <= s_max <= 200");
  }
  Census census;
  for (int n = n_min; n <= n_max; ++n) {
    for (int s = 1; s <= s_max; ++s) {
      const auto point = mode_spectrum_point(make_mode(frame, particle, n, s, bc));
      ++census.examined;
      if (point.negative()) census.negative_states.push_back(point);
    }
  }
  census.count = census.negative_states.size();
  return census;
}

Census negative_energy_census_3d(const RotatingFrame& frame, const Particle& particle,
                                 BoundaryCondition bc, int n_max, int s_max) {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 0");
  return negative_energy_census_3d(frame, particle, bc, -n_max, n_max, s_max);
}

double beat_period(const RotatingFrame& frame, int n) {
  if (n == 0 || frame.omega == 0.0) return 0.0;
  return kPi / (std::abs(n) * std::abs(frame.omega));
}

InterferenceTrace anomalous_interference(const RotatingFrame& frame, const Particle& particle,
                                         int n, int s, BoundaryCondition bc,
                                         std::span<const double> r_grid,
                                         std::span<const double> t_grid) {
  const auto plus = make_mode(frame, particle, n, s, bc, 0.0, Sector::Plus);
  const auto minus = make_mode(frame, particle, n, s, bc, 0.0, Sector::Minus);

  InterferenceTrace trace;
  trace.sectors_used = {Sector::Plus, Sector::Minus};
  trace.radii.assign(r_grid.begin(), r_grid.end());
  trace.abscissa.assign(t_grid.begin(), t_grid.end());
  trace.total_density.reserve(r_grid.size() * t_grid.size());
  trace.cross_term.reserve(r_grid.size() * t_grid.size());
  for (double r : r_grid) {
    for (double t : t_grid) {
      const auto a = mode_wavefunction(plus, r, 0.0, 0.0, t);
      const auto b = mode_wavefunction(minus, r, 0.0, 0.0, t);
      const double cross = 2.0 * std::real(std::conj(a) * b);
      trace.cross_term.push_back(cross);
      trace.total_density.push_back(std::norm(a) + std::norm(b) + cross);
    }
  }
  trace.beat_period = beat_period(frame, n);
  trace.time_dependent = trace.beat_period > 0.0;
  return trace;
}

}  // namespace rotorqm::cylinder
