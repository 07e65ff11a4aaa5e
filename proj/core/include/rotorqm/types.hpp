#pragma once

#include <string_view>

namespace rotorqm {

/// Rigidly rotating cylindrical frame. `omega` is signed (rad/s); `radius` is R0 (m).
struct RotatingFrame {
  double omega = 0.0;
  double radius = 1.0;

  double linear_speed() const noexcept { return omega * radius; }

  friend bool operator==(const RotatingFrame&, const RotatingFrame&) = default;
};

struct ValidatedFrame {
  RotatingFrame frame;
  double linear_speed = 0.0;  ///< signed v = omega * radius, m/s
};

/// Throws NONPOSITIVE_RADIUS if radius <= 0 and SUPERLUMINAL_RIM if |omega| radius >= c.
ValidatedFrame validate_frame(const RotatingFrame& frame);

/// Frame with omega = v / radius. Validated.
RotatingFrame frame_from_linear_speed(double linear_speed, double radius);

struct Particle {
  double mass = 0.0;    ///< rest mass, kg
  double charge = 0.0;  ///< C

  static Particle electron() noexcept;
  static Particle neutron() noexcept;
  static Particle proton() noexcept;

  friend bool operator==(const Particle&, const Particle&) = default;
};

/// Throws NONPOSITIVE_MASS unless mass > 0 and finite.
void validate_particle(const Particle& particle);

/// Magnetic flux through the shell interior, carried as the ratio to the flux quantum.
/// Spectra only ever consume the ratio.
struct FluxSpec {
  double flux_ratio = 0.0;

  /// SI flux quantum 2*pi*hbar/e (Wb). Absolute-flux reporting is convention dependent;
  /// the Gaussian analogue carries an extra factor c.
  static double flux_quantum() noexcept;
  double flux() const noexcept { return flux_ratio * flux_quantum(); }

  friend bool operator==(const FluxSpec&, const FluxSpec&) = default;
};

/// Which of the two reflection-related Hamiltonians governs a state.
enum class Sector { Plus, Minus };

/// +1 for Plus, -1 for Minus.
constexpr int sector_sign(Sector s) noexcept { return s == Sector::Plus ? 1 : -1; }

enum class BoundaryCondition { Dirichlet, Neumann, None };

struct ModeSpec {
  Sector sector = Sector::Plus;
  int angular_qn = 0;    ///< m, p, or n depending on the spectrum family
  double axial_k = 0.0;  ///< 1/m
  int radial_index = 0;  ///< zero ordinal s >= 1 for cylinder modes, 0 otherwise
  BoundaryCondition bc = BoundaryCondition::None;

  friend bool operator==(const ModeSpec&, const ModeSpec&) = default;
};

/// Throws INVALID_ARGUMENT when a bounded mode carries radial_index < 1.
void validate_mode(const ModeSpec& mode);

std::string_view to_string(Sector s) noexcept;
std::string_view to_string(BoundaryCondition bc) noexcept;

/// B_R = hbar^2 / (2 m R^2), the rotational energy scale of a ring of radius R.
double characteristic_energy(const Particle& particle, const RotatingFrame& frame);
double characteristic_energy(const Particle& particle, double radius);

}  // namespace rotorqm
