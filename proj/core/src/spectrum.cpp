#include "rotorqm/spectrum.hpp"

namespace rotorqm {

std::string_view to_string(SpectrumFamily f) noexcept {
  switch (f) {
    case SpectrumFamily::ClassII: return "class_ii";
    case SpectrumFamily::PeriodicPsiCap: return "periodic_cap_psi";
    case SpectrumFamily::PeriodicPsiLower: return "periodic_lower_psi";
    case SpectrumFamily::Flux: return "flux";
    case SpectrumFamily::CylDirichlet: return "cyl_dirichlet";
    case SpectrumFamily::CylNeumann: return "cyl_neumann";
  }
  return "unknown";
}

SpectrumPoint make_spectrum_point(SpectrumFamily family, const ModeSpec& mode, double e0,
                                  double correction) noexcept {
  return {e0 + correction, mode, family, e0, correction};
}

}  // namespace rotorqm
