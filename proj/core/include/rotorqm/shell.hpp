#pragma once

// Quantum mechanics on a thin rotating cylindrical shell of radius R0.
//
// Angular convention: quantum numbers label the same angular function in both sectors.
// Psi-periodic states e^{-i p phi} have momentum -hbar p / R0; the Plus sector couples
// them to rotation as +hbar p omega, the Minus sector (reflected Hamiltonian) as
// -hbar p omega.

#include <complex>
#include <span>
#include <utility>

#include "rotorqm/spectrum.hpp"
#include "rotorqm/types.hpp"

namespace rotorqm::shell {

/// |D| <= this classifies as the degenerate class II.
inline constexpr double kClassIITolerance = 1e-9;

enum class SolutionClass { I, II, III };

std::string_view to_string(SolutionClass c) noexcept;

/// Dimensionless coefficients of psi'' +/- i A psi' + B_{+/-} psi = 0.
struct ShellCoefficients {
  double a_coeff = 0.0;
  double b_plus = 0.0;
  double b_minus = 0.0;
  double d_plus = 0.0;   ///< A^2 + 4 B_+
  double d_minus = 0.0;  ///< A^2 + 4 B_-
  SolutionClass class_plus = SolutionClass::I;
  SolutionClass class_minus = SolutionClass::I;
};

/// A = -2 m R0^2 omega / hbar, B = -R0^2 (k^2 - 2 m E / hbar^2), per sector.
ShellCoefficients shell_coefficients(const RotatingFrame& frame, const Particle& particle,
                                     double k_plus, double k_minus, double e_plus,
                                     double e_minus);

SolutionClass classify_discriminant(double d) noexcept;

/// (plus, minus) classes from the stored discriminants.
std::pair<SolutionClass, SolutionClass> classify(const ShellCoefficients& coeffs) noexcept;

/// Class III is classified but never solved.
constexpr bool is_solvable(SolutionClass c) noexcept { return c != SolutionClass::III; }

/// Angular exponents of the general solution psi = C2 e^{i l2 phi} + C1 e^{i l1 phi}.
/// For class II both exponents coincide and the second solution is phi e^{i l phi}.
struct AngularExponents {
  SolutionClass solution_class = SolutionClass::I;
  double lambda_c2 = 0.0;
  double lambda_c1 = 0.0;
};

/// Throws UNSUPPORTED_CLASS for class III.
AngularExponents angular_exponents(const ShellCoefficients& coeffs, Sector sector);

/// Degenerate-discriminant energy (hbar^2/2m)(k^2 - (m R0 omega / hbar)^2); sector independent.
SpectrumPoint class2_energy(const RotatingFrame& frame, const Particle& particle, double k,
                            Sector sector = Sector::Plus, const SpectrumOptions& opts = {});

/// Psi-periodic energies hbar^2 k^2/2m + m^2 B_R - m R0^2 omega^2 / 2; sector independent.
SpectrumPoint periodic_cap_psi_energy(const RotatingFrame& frame, const Particle& particle,
                                      int m, double k, Sector sector = Sector::Plus,
                                      const SpectrumOptions& opts = {});

enum class Branch { Plus, Minus };

struct ShellMomentum {
  double total = 0.0;
  double classical_term = 0.0;  ///< m R0 omega, independent of hbar
  double quantum_term = 0.0;    ///< +/- hbar m / R0
};

ShellMomentum periodic_cap_psi_momentum(const RotatingFrame& frame, const Particle& particle,
                                        int m, Branch branch);

/// Rotation rate omega_s = hbar s / (2 m R0^2) at which the Psi-periodic spectrum matches
/// the non-rotating one.
double omega_quantization(const Particle& particle, double radius, int s);

/// psi-periodic energies hbar^2 k^2/2m + p^2 B_R + sigma hbar p omega (sigma = +/-1 by sector).
SpectrumPoint periodic_lower_psi_energy(const RotatingFrame& frame, const Particle& particle,
                                        int p, double k, Sector sector = Sector::Plus,
                                        const SpectrumOptions& opts = {});

/// Angular momentum eigenvalue -hbar p / R0 of the psi-periodic state.
double periodic_lower_psi_momentum(const RotatingFrame& frame, int p);

/// (p - f)(B_R (p - f) + hbar omega) + hbar^2 k^2 / 2m with f = flux ratio. The Minus sector
/// evaluates the reflected Hamiltonian: omega and f both change sign.
SpectrumPoint flux_spectrum(const RotatingFrame& frame, const Particle& particle,
                            const FluxSpec& flux, int p, double k = 0.0,
                            Sector sector = Sector::Plus, const SpectrumOptions& opts = {});

/// omega_p = B'_R (p - f) / hbar: rotation that turns the flux+rotation spectrum at fixed p
/// into a pure-flux spectrum.
double flux_equivalent_omega(const Particle& particle, double flux_ratio, int p,
                             double b_r_prime);

/// Thin-shell geometric potential -hbar^2 / (2 m R0^2).
double geometric_potential(const Particle& particle, double radius);

/// Superposition c1 psi_{s1} + c2 psi_{s2} of degenerate-class momentum states with C1 = 0,
/// psi_{+} = e^{-i A phi / 2}, psi_{-} = e^{+i A phi / 2}, sampled on `phi_grid`.
/// Opposite sectors give the cross term 2 Re(c+^* c- e^{i A phi}) and the Sagnac phase
/// 2 pi |A|; a single sector yields an A-independent density flagged no_sagnac.
InterferenceTrace sector_interference(std::complex<double> c_first, std::complex<double> c_second,
                                      double a_coeff, std::span<const double> phi_grid,
                                      std::pair<Sector, Sector> sectors = {Sector::Plus,
                                                                           Sector::Minus});

/// Exhaustive scan of flux_spectrum over p in [p_min, p_max] (k = 0).
Census negative_energy_census_shell(const RotatingFrame& frame, const Particle& particle,
                                    const FluxSpec& flux, int p_min, int p_max,
                                    Sector sector = Sector::Plus);

}  // namespace rotorqm::shell
