#pragma once

// Residual of the rotating-cylinder eigenproblem for a sampled mode:
//   || H psi - E psi || / (|E| || psi ||),
//   H = -(hbar^2 / 2m) laplacian + sigma i hbar omega d/dphi,
// on the radial grid r_i = R0 i / 200, i = 1..200. Radial derivatives use 9-point Fornberg
// stencils (one-sided near the ends); phi and z derivatives are spectral, from samples of
// the mode over one period.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "oracle/fornberg.hpp"
#include "rotorqm/constants.hpp"
#include "rotorqm/cylinder.hpp"

namespace rotorqm::oracle {

struct Residual {
  double relative = 0.0;
  int grid_points = 0;
};

// d/du and d^2/du^2 at u0 of a function sampled at u0 + L j / N (one period L).
inline std::pair<std::complex<double>, std::complex<double>> spectral_derivatives(
    const std::vector<std::complex<double>>& samples, double period) {
  using namespace std::complex_literals;
  const int n = static_cast<int>(samples.size());
  std::complex<double> d1 = 0.0, d2 = 0.0;
  for (int m = -n / 2 + 1; m < n / 2; ++m) {
    std::complex<double> c = 0.0;
    for (int j = 0; j < n; ++j) c += samples[j] * std::exp(-2.0i * kPi * double(m * j) / double(n));
    c /= double(n);
    const double w = 2.0 * kPi * m / period;
    d1 += 1.0i * w * c;
    d2 += -w * w * c;
  }
  return {d1, d2};
}

inline Residual cylinder_residual(const cylinder::CylinderMode& mode, double omega, double mass,
                                  int points = 200) {
  constexpr int kStencil = 9;
  constexpr int kPeriodic = 16;
  const double hbar = kConstants.hbar;
  const double r0 = mode.radius;
  const double phi0 = 0.37, z0 = 0.21 * r0;
  const double z_period = mode.k != 0.0 ? 2.0 * kPi / std::abs(mode.k) : r0;

  std::vector<double> r(points);
  std::vector<std::complex<double>> psi(points);
  for (int i = 0; i < points; ++i) {
    r[i] = r0 * (i + 1) / points;
    psi[i] = cylinder::mode_wavefunction(mode, r[i], phi0, z0, 0.0);
  }

  const double sigma = mode.sector == Sector::Plus ? 1.0 : -1.0;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < points; ++i) {
    const int first = std::clamp(i - kStencil / 2, 0, points - kStencil);
    std::vector<double> nodes(r.begin() + first, r.begin() + first + kStencil);
    const auto w = fd_weights(r[i], nodes, 2);
    std::complex<double> d_r = 0.0, d_rr = 0.0;
    for (int j = 0; j < kStencil; ++j) {
      d_r += w[1][j] * psi[first + j];
      d_rr += w[2][j] * psi[first + j];
    }

    std::vector<std::complex<double>> around_phi(kPeriodic), along_z(kPeriodic);
    for (int j = 0; j < kPeriodic; ++j) {
      around_phi[j] = cylinder::mode_wavefunction(mode, r[i], phi0 + 2.0 * kPi * j / kPeriodic, z0, 0.0);
      along_z[j] = cylinder::mode_wavefunction(mode, r[i], phi0, z0 + z_period * j / kPeriodic, 0.0);
    }
    const auto [d_phi, d_phiphi] = spectral_derivatives(around_phi, 2.0 * kPi);
    const auto d_zz = spectral_derivatives(along_z, z_period).second;

    const std::complex<double> laplacian = d_rr + d_r / r[i] + d_phiphi / (r[i] * r[i]) + d_zz;
    const std::complex<double> h_psi =
        -hbar * hbar / (2.0 * mass) * laplacian + sigma * std::complex<double>(0.0, hbar * omega) * d_phi;
    num += std::norm(h_psi - mode.energy * psi[i]);
    den += std::norm(psi[i]);
  }
  return {std::sqrt(num) / (std::abs(mode.energy) * std::sqrt(den)), points};
}

}  // namespace rotorqm::oracle
