#pragma once

// Exact angular-momentum modes of the solid rotating cylinder, 0 <= r <= R0.
//
// A mode is e^{-iEt/hbar} e^{-i n phi} e^{ikz} J_n(kappa r), with kappa R0 a zero of J_n
// (Dirichlet) or of J_n' (Neumann). Its energy is
//   E = hbar^2 kappa^2 / 2m + hbar^2 k^2 / 2m + sigma n hbar omega,
// where sigma = +1 in the Plus sector and -1 in the Minus (reflected) sector. Radial
// indices are one-based: s = 1 is the first zero.

#include <complex>
#include <span>

#include "rotorqm/spectrum.hpp"
#include "rotorqm/types.hpp"

namespace rotorqm::cylinder {

struct CylinderMode {
  int n = 0;
  int s = 1;
  double k = 0.0;
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  Sector sector = Sector::Plus;
  double radius = 0.0;             ///< R0
  double energy = 0.0;             ///< J
  double e0 = 0.0;                 ///< non-rotating part
  double correction = 0.0;         ///< sigma n hbar omega
  double radial_wavenumber = 0.0;  ///< kappa, 1/m
};

/// Throws INVALID_ARGUMENT for bc = None; zero-table range errors propagate.
CylinderMode make_mode(const RotatingFrame& frame, const Particle& particle, int n, int s,
                       BoundaryCondition bc, double k = 0.0, Sector sector = Sector::Plus);

SpectrumPoint mode_spectrum_point(const CylinderMode& mode);

SpectrumPoint dirichlet_energy(const RotatingFrame& frame, const Particle& particle, int n, int s,
                               double k = 0.0, Sector sector = Sector::Plus);
SpectrumPoint neumann_energy(const RotatingFrame& frame, const Particle& particle, int n, int s,
                             double k = 0.0, Sector sector = Sector::Plus);

struct WavefunctionOptions {
  /// Scale so that the radial factor has unit L2 norm on [0, R0] with weight r dr.
  bool normalize = false;
};

/// Radial L2 norm sqrt(int_0^R0 J_n(kappa r)^2 r dr), closed form.
double radial_norm(const CylinderMode& mode);

/// Throws R_OUT_OF_RANGE unless 0 <= r <= R0.
std::complex<double> mode_wavefunction(const CylinderMode& mode, double r, double phi, double z,
                                       double t, const WavefunctionOptions& opts = {});

/// Enumerates n in [n_min, n_max], s in [1, s_max] (Plus sector, k = 0).
Census negative_energy_census_3d(const RotatingFrame& frame, const Particle& particle,
                                 BoundaryCondition bc, int n_min, int n_max, int s_max);

/// Symmetric range |n| <= n_max.
Census negative_energy_census_3d(const RotatingFrame& frame, const Particle& particle,
                                 BoundaryCondition bc, int n_max, int s_max);

/// pi / (|n| |omega|); 0 when n or omega vanish.
double beat_period(const RotatingFrame& frame, int n);

/// Superposition of the (n, s) mode in the Plus sector with the same mode in the Minus
/// sector, sampled at phi = z = 0 on r_grid x t_grid (row-major over r, then t). The
/// cross term is 2 J_n(kappa r)^2 cos(2 n omega t), computed from the modes themselves.
InterferenceTrace anomalous_interference(const RotatingFrame& frame, const Particle& particle,
                                         int n, int s, BoundaryCondition bc,
                                         std::span<const double> r_grid,
                                         std::span<const double> t_grid);

}  // namespace rotorqm::cylinder
