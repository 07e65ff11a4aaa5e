#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "rotorqm/types.hpp"

namespace rotorqm {

/// Which closed-form spectrum produced a SpectrumPoint.
enum class SpectrumFamily {
  ClassII,           ///< degenerate discriminant on the shell
  PeriodicPsiCap,    ///< periodicity imposed on the reduced factor Psi
  PeriodicPsiLower,  ///< periodicity imposed on psi itself
  Flux,              ///< psi-periodic shell threaded by magnetic flux
  CylDirichlet,
  CylNeumann,
};

std::string_view to_string(SpectrumFamily f) noexcept;

/// One energy eigenvalue. `energy == e0 + correction` holds exactly: e0 is the
/// non-rotating part, correction the rotation-induced term.
struct SpectrumPoint {
  double energy = 0.0;
  ModeSpec mode;
  SpectrumFamily family = SpectrumFamily::ClassII;
  double e0 = 0.0;
  double correction = 0.0;

  bool negative() const noexcept { return energy < 0.0; }
};

SpectrumPoint make_spectrum_point(SpectrumFamily family, const ModeSpec& mode, double e0,
                                  double correction) noexcept;

struct SpectrumOptions {
  /// Adds the constant thin-shell geometric potential to e0. Off by default.
  bool include_geometric_potential = false;
};

/// Negative-energy states found by exhaustive enumeration, in enumeration order.
struct Census {
  std::vector<SpectrumPoint> negative_states;
  std::size_t count = 0;
  std::size_t examined = 0;
};

/// Sampled interference of a two-state superposition.
///
/// Shell traces are sampled over phi (`abscissa`), with `radii` empty. Cylinder beat
/// traces are sampled over t (`abscissa`) for each radius in `radii`; the density and
/// cross-term vectors are then row-major over radius, then time.
struct InterferenceTrace {
  std::vector<double> abscissa;
  std::vector<double> radii;
  std::vector<double> total_density;
  std::vector<double> cross_term;
  double roundtrip_cross_term = 0.0;  ///< shell only: cross term after one full turn
  double extracted_phase = 0.0;       ///< rad, reduced to [0, 2 pi)
  long winding = 0;                   ///< whole turns removed from extracted_phase
  double beat_period = 0.0;           ///< s; 0 when the trace is stationary
  std::pair<Sector, Sector> sectors_used{Sector::Plus, Sector::Minus};
  bool no_sagnac = false;       ///< both states in one sector: no phase shift exists
  bool time_dependent = false;  ///< cross term oscillates in t
};

}  // namespace rotorqm
