#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "rotorqm/classical.hpp"
#include "rotorqm/error.hpp"
#include "rotorqm/shell.hpp"
#include "support.hpp"

namespace rotorqm::shell {
namespace {

using testing::kHbar;
using testing::reference_frame;
using testing::rel_diff;

const Particle kElectron = Particle::electron();
const double kBr = 6.1042643149807904e-29;  // mpmath, electron on R0 = 1e-5

std::vector<double> uniform_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

TEST(ShellCoefficientsTest, Examples) {
  const auto c = shell_coefficients(reference_frame(), kElectron, 0.0, 0.0, 0.0, 0.0);
  // mpmath: 2 m R0^2 |omega| / hbar
  EXPECT_LT(rel_diff(c.a_coeff, 17.275985484637695), 1e-14);
  EXPECT_EQ(shell_coefficients({0.0, 1e-5}, kElectron, 0, 0, 0, 0).a_coeff, 0.0);

  const double k = 3e5;
  const double e = kHbar * kHbar * k * k / (2 * kElectron.mass);
  const auto free = shell_coefficients(reference_frame(), kElectron, k, k, e, e);
  EXPECT_NEAR(free.b_plus, 0.0, 1e-12);
  EXPECT_NEAR(free.b_minus, 0.0, 1e-12);
  EXPECT_LT(rel_diff(free.d_plus, free.a_coeff * free.a_coeff), 1e-12);
  EXPECT_EQ(free.class_plus, SolutionClass::I);
}

TEST(ClassifyTest, Discriminant) {
  EXPECT_EQ(classify_discriminant(1.0), SolutionClass::I);
  EXPECT_EQ(classify_discriminant(0.0), SolutionClass::II);
  EXPECT_EQ(classify_discriminant(5e-10), SolutionClass::II);
  EXPECT_EQ(classify_discriminant(-1.0), SolutionClass::III);
  ShellCoefficients c;
  c.d_plus = -1.0;
  c.d_minus = 2.0;
  EXPECT_EQ(classify(c), std::make_pair(SolutionClass::III, SolutionClass::I));
  EXPECT_FALSE(is_solvable(SolutionClass::III));
  try {
    angular_exponents(c, Sector::Plus);
    FAIL() << "class III must not be solved";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedClass);
  }
  EXPECT_EQ(angular_exponents(c, Sector::Minus).solution_class, SolutionClass::I);
}

TEST(Class2Test, Examples) {
  EXPECT_EQ(class2_energy({0.0, 1e-5}, kElectron, 0.0).energy, 0.0);
  // mpmath: -m R0^2 omega^2 / 2
  EXPECT_LT(rel_diff(class2_energy(reference_frame(), kElectron, 0.0).energy,
                     -4.55469185075e-27),
            1e-14);
}

TEST(Class2Test, EnergyHasDegenerateDiscriminant) {
  for (double k : {0.0, 1e4, 7e5}) {
    const double e = class2_energy(reference_frame(), kElectron, k).energy;
    const auto c = shell_coefficients(reference_frame(), kElectron, k, k, e, e);
    EXPECT_EQ(c.class_plus, SolutionClass::II) << c.d_plus;
    EXPECT_EQ(c.class_minus, SolutionClass::II);
    const auto ex = angular_exponents(c, Sector::Plus);
    EXPECT_EQ(ex.lambda_c1, ex.lambda_c2);
    EXPECT_LT(rel_diff(ex.lambda_c1, -0.5 * c.a_coeff), 1e-15);
  }
}

TEST(PeriodicCapPsiTest, Examples) {
  // mpmath: B_R - m R0^2 omega^2 / 2
  EXPECT_LT(rel_diff(periodic_cap_psi_energy({1e7, 1e-5}, kElectron, 1, 0.0).energy,
                     -4.4936492076001921e-27),
            1e-14);
  const auto p = periodic_cap_psi_energy(reference_frame(), kElectron, 3, 2e4);
  EXPECT_EQ(p.family, SpectrumFamily::PeriodicPsiCap);
  EXPECT_EQ(p.mode.angular_qn, 3);
}

TEST(PeriodicCapPsiTest, Momentum) {
  const RotatingFrame f{1e7, 1e-5};
  EXPECT_EQ(periodic_cap_psi_momentum(f, kElectron, 0, Branch::Plus).total,
            kElectron.mass * 1e-5 * 1e7);
  // mpmath: m R0 omega + hbar / R0
  EXPECT_LT(rel_diff(periodic_cap_psi_momentum(f, kElectron, 1, Branch::Plus).total,
                     1.01639555185e-28),
            1e-14);
  const RotatingFrame still{0.0, 1e-5};
  EXPECT_DOUBLE_EQ(periodic_cap_psi_momentum(still, kElectron, 1, Branch::Plus).total, kHbar / 1e-5);
  EXPECT_DOUBLE_EQ(periodic_cap_psi_momentum(still, kElectron, 1, Branch::Minus).total, -kHbar / 1e-5);
}

TEST(OmegaQuantizationTest, Examples) {
  EXPECT_EQ(omega_quantization(kElectron, 1e-5, 0), 0.0);
  // mpmath: hbar / (2 m R0^2)
  EXPECT_LT(rel_diff(omega_quantization(kElectron, 1e-5, 1), 578838.18025271487), 1e-14);
  EXPECT_DOUBLE_EQ(omega_quantization(kElectron, 1e-5, -3), -3 * omega_quantization(kElectron, 1e-5, 1));
}

TEST(OmegaQuantizationTest, RotationCoefficientIsInteger) {
  for (int s = -4; s <= 4; ++s) {
    const double w = omega_quantization(kElectron, 1e-5, s);
    EXPECT_NEAR(shell_coefficients({w, 1e-5}, kElectron, 0, 0, 0, 0).a_coeff, -s, 1e-13);
  }
}

TEST(PeriodicLowerPsiTest, Examples) {
  EXPECT_EQ(periodic_lower_psi_energy(reference_frame(), kElectron, 0, 0.0).energy, 0.0);
  // mpmath: B_R - hbar |omega|
  EXPECT_LT(rel_diff(periodic_lower_psi_energy(reference_frame(), kElectron, 1, 0.0).energy,
                     -9.935291738501921e-28),
            1e-14);
  EXPECT_DOUBLE_EQ(periodic_lower_psi_momentum(reference_frame(), 2), -2 * kHbar / 1e-5);
}

TEST(PeriodicLowerPsiTest, PeriodicStateSolvesTheSectorEquation) {
  // e^{-i p phi} must be one of the two angular exponents at the listed energy.
  for (Sector sector : {Sector::Plus, Sector::Minus}) {
    for (int p = -6; p <= 6; ++p) {
      const double k = 1e4;
      const double e = periodic_lower_psi_energy(reference_frame(), kElectron, p, k, sector).energy;
      const auto c = shell_coefficients(reference_frame(), kElectron, k, k, e, e);
      const auto ex = angular_exponents(c, sector);
      const double miss = std::min(std::abs(ex.lambda_c1 + p), std::abs(ex.lambda_c2 + p));
      EXPECT_LT(miss, 1e-9) << "p=" << p;
    }
  }
}

TEST(FluxSpectrumTest, Examples) {
  const FluxSpec two{2.0};
  EXPECT_EQ(flux_spectrum(reference_frame(), kElectron, two, 2).energy, 0.0);
  // mpmath: (p - 2)(B_R (p - 2) + hbar omega)
  EXPECT_LT(rel_diff(flux_spectrum(reference_frame(), kElectron, two, 3).energy,
                     -9.935291738501921e-28),
            1e-14);
  EXPECT_LT(rel_diff(flux_spectrum(reference_frame(), kElectron, two, 11).energy,
                     -4.5466922578655598e-27),
            1e-14);
  EXPECT_THROW(flux_spectrum(reference_frame(), kElectron, FluxSpec{std::nan("")}, 1), Error);
}

TEST(FluxSpectrumTest, ZeroFluxIsPeriodicLowerPsi) {
  for (Sector sector : {Sector::Plus, Sector::Minus}) {
    for (int p = -20; p <= 20; ++p) {
      const auto a = flux_spectrum(reference_frame(), kElectron, FluxSpec{0.0}, p, 3e3, sector);
      const auto b = periodic_lower_psi_energy(reference_frame(), kElectron, p, 3e3, sector);
      EXPECT_EQ(a.energy, b.energy);
      EXPECT_EQ(a.e0, b.e0);
      EXPECT_EQ(a.correction, b.correction);
    }
  }
}

TEST(FluxSpectrumTest, ReflectionMapsSectors) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ratio(-3.0, 3.0);
  std::uniform_real_distribution<double> speed(-200.0, 200.0);
  for (int i = 0; i < 200; ++i) {
    const RotatingFrame f{speed(rng) / 1e-5, 1e-5};
    const RotatingFrame mirrored{-f.omega, f.radius};
    const double r = ratio(rng);
    for (int p = -5; p <= 5; ++p) {
      const double plus = flux_spectrum(f, kElectron, FluxSpec{r}, p).energy;
      // E(p, omega, f) = E(-p, -omega, -f)
      EXPECT_LT(rel_diff(plus, flux_spectrum(mirrored, kElectron, FluxSpec{-r}, -p).energy), 1e-14);
      // The Minus sector is the reflected Hamiltonian: E-(p) = E+(-p).
      EXPECT_LT(rel_diff(flux_spectrum(f, kElectron, FluxSpec{r}, p, 0.0, Sector::Minus).energy,
                         flux_spectrum(f, kElectron, FluxSpec{r}, -p).energy),
                1e-14);
      const double lower = periodic_lower_psi_energy(f, kElectron, p, 0.0).energy;
      EXPECT_EQ(lower, periodic_lower_psi_energy(mirrored, kElectron, -p, 0.0).energy);
    }
    EXPECT_EQ(class2_energy(f, kElectron, 0.0, Sector::Plus).energy,
              class2_energy(mirrored, kElectron, 0.0, Sector::Minus).energy);
    EXPECT_EQ(periodic_cap_psi_energy(f, kElectron, 2, 0.0, Sector::Plus).energy,
              periodic_cap_psi_energy(mirrored, kElectron, 2, 0.0, Sector::Minus).energy);
  }
}

TEST(FluxSpectrumTest, FluxRotationEquivalence) {
  // Rotating at omega_p with scale B_R(R0) turns level p into 2 B_R (p - f)^2, the pure-flux
  // level of a shell of radius R0 / sqrt(2).
  const double r0 = 1e-5;
  const double b_r = characteristic_energy(kElectron, r0);
  for (double f : {0.0, 0.5, 2.0, -1.25}) {
    for (int p = -6; p <= 6; ++p) {
      const double w = flux_equivalent_omega(kElectron, f, p, b_r);
      const double rotating = flux_spectrum({w, r0}, kElectron, FluxSpec{f}, p).energy;
      const double pure = flux_spectrum({0.0, r0 / std::sqrt(2.0)}, kElectron, FluxSpec{f}, p).energy;
      EXPECT_LT(rel_diff(rotating, pure), 1e-14) << f << " " << p;
      EXPECT_LT(rel_diff(rotating, 2 * b_r * (p - f) * (p - f)), 1e-14);
    }
  }
}

TEST(FluxEquivalentOmegaTest, Examples) {
  EXPECT_EQ(flux_equivalent_omega(kElectron, 2.0, 2, kBr), 0.0);
  const double one = flux_equivalent_omega(kElectron, 2.0, 3, kBr);
  EXPECT_LT(rel_diff(one, omega_quantization(kElectron, 1e-5, 1)), 1e-14);
  EXPECT_DOUBLE_EQ(flux_equivalent_omega(kElectron, 2.0, 0, kBr), -2 * one);
}

TEST(GeometricPotentialTest, Examples) {
  EXPECT_LT(rel_diff(geometric_potential(kElectron, 1e-5), -kBr), 1e-15);
  const double far = geometric_potential(kElectron, 1e3);
  EXPECT_LT(far, 0.0);
  EXPECT_GT(far, -1e-44);
  const SpectrumOptions with{true};
  const auto a = flux_spectrum(reference_frame(), kElectron, FluxSpec{2.0}, 5);
  const auto b = flux_spectrum(reference_frame(), kElectron, FluxSpec{2.0}, 5, 0.0, Sector::Plus, with);
  EXPECT_LT(rel_diff(b.e0 - a.e0, -kBr), 1e-12);
  EXPECT_EQ(a.correction, b.correction);
}

TEST(SectorInterferenceTest, Examples) {
  const auto grid = uniform_grid(0.0, 2 * kPi, 65);
  const auto zero = sector_interference(1.0, 1.0, 0.0, grid);
  EXPECT_DOUBLE_EQ(zero.roundtrip_cross_term, 2.0);
  const auto integer = sector_interference(1.0, 1.0, 17.0, grid);
  EXPECT_NEAR(integer.roundtrip_cross_term, 2.0, 1e-12);
  EXPECT_EQ(integer.winding, 17);
  EXPECT_NEAR(integer.extracted_phase, 0.0, 1e-12);
  const auto frac = sector_interference(1.0, 1.0, 17.275, grid);
  // mpmath: 2 cos(2 pi 0.275)
  EXPECT_NEAR(frac.roundtrip_cross_term, -0.31286893008046174, 1e-12);
  EXPECT_NEAR(frac.cross_term.back(), frac.roundtrip_cross_term, 1e-12);
  EXPECT_FALSE(frac.no_sagnac);
}

TEST(SectorInterferenceTest, PhaseMatchesCirculation) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> speed(-500.0, 500.0);
  std::uniform_real_distribution<double> radius(1e-6, 5e-5);
  for (int i = 0; i < 500; ++i) {
    const RotatingFrame f{speed(rng), radius(rng)};
    const RotatingFrame g{f.omega / f.radius, f.radius};
    const double a = shell_coefficients(g, kElectron, 0, 0, 0, 0).a_coeff;
    const double grid[] = {0.0};
    const auto t = sector_interference(1.0, 1.0, a, grid);
    const double total = t.extracted_phase + 2 * kPi * t.winding;
    EXPECT_LT(rel_diff(total, std::abs(classical::circulation_phase(g, kElectron))), 1e-12);
    EXPECT_GE(t.extracted_phase, 0.0);
    EXPECT_LT(t.extracted_phase, 2 * kPi);
  }
}

TEST(SectorInterferenceTest, SameSectorDensityIgnoresRotation) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  const auto grid = uniform_grid(-kPi, 3 * kPi, 101);
  for (int i = 0; i < 100; ++i) {
    const std::complex<double> c1{g(rng), g(rng)}, c2{g(rng), g(rng)};
    for (Sector s : {Sector::Plus, Sector::Minus}) {
      const auto a = sector_interference(c1, c2, 3.7 * g(rng), grid, {s, s});
      const auto b = sector_interference(c1, c2, 40.0 * g(rng), grid, {s, s});
      EXPECT_TRUE(a.no_sagnac);
      for (std::size_t j = 0; j < grid.size(); ++j)
        EXPECT_NEAR(a.total_density[j], b.total_density[j], 1e-12 * (1 + b.total_density[j]));
    }
  }
}

TEST(SectorInterferenceTest, CrossTermsAreConjugate) {
  // Swapping the sector order conjugates the interference term, leaving the density real
  // and unchanged.
  const auto grid = uniform_grid(0.0, 2 * kPi, 33);
  const std::complex<double> c1{0.3, -1.2}, c2{0.7, 0.4};
  const auto a = sector_interference(c1, c2, 5.3, grid, {Sector::Plus, Sector::Minus});
  const auto b = sector_interference(c2, c1, 5.3, grid, {Sector::Minus, Sector::Plus});
  for (std::size_t j = 0; j < grid.size(); ++j) {
    EXPECT_NEAR(a.cross_term[j], b.cross_term[j], 1e-14);
    EXPECT_NEAR(a.total_density[j], b.total_density[j], 1e-14);
  }
}

TEST(CensusTest, ShellCounts) {
  EXPECT_EQ(negative_energy_census_shell({0.0, 1e-5}, kElectron, FluxSpec{0.0}, -50, 50).count, 0u);
  const auto fig1 = negative_energy_census_shell(reference_frame(), kElectron, FluxSpec{2.0}, -10, 30);
  EXPECT_EQ(fig1.examined, 41u);
  ASSERT_EQ(fig1.count, 17u);
  EXPECT_EQ(fig1.negative_states.front().mode.angular_qn, 3);
  EXPECT_EQ(fig1.negative_states.back().mode.angular_qn, 19);
  const RotatingFrame doubled{-2e7, 1e-5};
  // 0 < p - 2 < 34.55: all 34 states need the wider window.
  EXPECT_EQ(negative_energy_census_shell(doubled, kElectron, FluxSpec{2.0}, -10, 30).count, 28u);
  const auto wide = negative_energy_census_shell(doubled, kElectron, FluxSpec{2.0}, -100, 100);
  EXPECT_EQ(wide.count, 34u);
  EXPECT_EQ(wide.negative_states.back().mode.angular_qn, 36);
  EXPECT_THROW(negative_energy_census_shell(doubled, kElectron, FluxSpec{}, 3, 2), Error);
}

TEST(CensusTest, CountGrowsWithRotationRate) {
  std::size_t last = 0;
  for (double w = 0.0; w <= 5e7; w += 2.5e6) {
    const auto c = negative_energy_census_shell({-w, 1e-5}, kElectron, FluxSpec{2.0}, -200, 200);
    EXPECT_GE(c.count, last);
    last = c.count;
  }
}

TEST(BoundednessTest, QuadraticLowerBound) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> speed(-300.0, 300.0);
  std::uniform_real_distribution<double> ratio(-4.0, 4.0);
  for (int i = 0; i < 100; ++i) {
    const RotatingFrame f{speed(rng) / 1e-5, 1e-5};
    const double f_ratio = ratio(rng);
    const double bound = -(kHbar * f.omega) * (kHbar * f.omega) / (4 * kBr);
    for (int p = -100; p <= 100; ++p) {
      const double e = flux_spectrum(f, kElectron, FluxSpec{f_ratio}, p).energy;
      EXPECT_GE(e, bound * (1 + 1e-12));
    }
  }
}

TEST(DecompositionTest, CorrectionsHaveDocumentedForm) {
  const RotatingFrame f = reference_frame();
  const double rot = -0.5 * kElectron.mass * 1e-10 * 1e14;
  EXPECT_LT(rel_diff(class2_energy(f, kElectron, 2e3).correction, rot), 1e-14);
  EXPECT_LT(rel_diff(periodic_cap_psi_energy(f, kElectron, -4, 0).correction, rot), 1e-14);
  EXPECT_LT(rel_diff(periodic_lower_psi_energy(f, kElectron, 5, 0).correction, 5 * kHbar * f.omega),
            1e-14);
  const auto p = periodic_lower_psi_energy(f, kElectron, 5, 0);
  EXPECT_EQ(p.energy, p.e0 + p.correction);
}

}  // namespace
}  // namespace rotorqm::shell
