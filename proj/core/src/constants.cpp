#include "rotorqm/constants.hpp"

namespace rotorqm {

nlohmann::json constants_table() {
  auto entry = [](double value, const char* unit) {
    return nlohmann::json{{"value", value}, {"unit", unit}, {"source", "CODATA 2018"}};
  };
  return nlohmann::json{
      {"c", entry(kConstants.c, "m/s")},
      {"hbar", entry(kConstants.hbar, "J s")},
      {"e_charge", entry(kConstants.e_charge, "C")},
      {"m_electron", entry(kConstants.m_electron, "kg")},
      {"m_neutron", entry(kConstants.m_neutron, "kg")},
      {"m_proton", entry(kConstants.m_proton, "kg")},
  };
}

}  // namespace rotorqm
