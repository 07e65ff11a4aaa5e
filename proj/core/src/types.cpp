#include "rotorqm/types.hpp"

#include <cmath>
#include <string>

#include "rotorqm/constants.hpp"
#include "rotorqm/error.hpp"

namespace rotorqm {

ValidatedFrame validate_frame(const RotatingFrame& frame) {
  if (!(frame.radius > 0.0) || !std::isfinite(frame.radius)) {
    throw Error(ErrorCode::NonpositiveRadius,
                "frame radius must be positive and finite, got " + std::to_string(frame.radius));
  }
  if (!std::isfinite(frame.omega)) {
    throw Error(ErrorCode::InvalidArgument, "angular velocity must be finite");
  }
  const double v = frame.linear_speed();
  if (std::abs(v) >= kConstants.c) {
    throw Error(ErrorCode::SuperluminalRim,
                "rim speed |omega| R0 = " + std::to_string(std::abs(v)) + " m/s is not below c");
  }
  return {frame, v};
}

RotatingFrame frame_from_linear_speed(double linear_speed, double radius) {
  if (!(radius > 0.0)) {
    throw Error(ErrorCode::NonpositiveRadius, "frame radius must be positive");
  }
  return validate_frame({linear_speed / radius, radius}).frame;
}

Particle Particle::electron() noexcept { return {kConstants.m_electron, -kConstants.e_charge}; }
Particle Particle::neutron() noexcept { return {kConstants.m_neutron, 0.0}; }
Particle Particle::proton() noexcept { return {kConstants.m_proton, kConstants.e_charge}; }

void validate_particle(const Particle& particle) {
  if (!(particle.mass > 0.0) || !std::isfinite(particle.mass)) {
    throw Error(ErrorCode::NonpositiveMass, "particle mass must be positive and finite");
  }
}

double FluxSpec::flux_quantum() noexcept {
  return 2.0 * kPi * kConstants.hbar / kConstants.e_charge;
}

void validate_mode(const ModeSpec& mode) {
  if (mode.bc != BoundaryCondition::None && mode.radial_index < 1) {
    throw Error(ErrorCode::InvalidArgument, "bounded modes need radial_index >= 1");
  }
}

std::string_view to_string(Sector s) noexcept { return s == Sector::Plus ? "plus" : "minus"; }

std::string_view to_string(BoundaryCondition bc) noexcept {
  switch (bc) {
    case BoundaryCondition::Dirichlet: return "dirichlet";
    case BoundaryCondition::Neumann: return "neumann";
    case BoundaryCondition::None: return "none";
  }
  return "none";
}

double characteristic_energy(const Particle& particle, double radius) {
  validate_particle(particle);
  if (!(radius > 0.0)) {
    throw Error(ErrorCode::NonpositiveRadius, "radius must be positive");
  }
  const double hbar = kConstants.hbar;
  return hbar * hbar / (2.0 * particle.mass * radius * radius);
}

double characteristic_energy(const Particle& particle, const RotatingFrame& frame) {
  return characteristic_energy(particle, validate_frame(frame).frame.radius);
}

}  // namespace rotorqm
