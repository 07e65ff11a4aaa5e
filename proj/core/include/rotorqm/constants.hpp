#pragma once

#include <nlohmann/json.hpp>

namespace rotorqm {

/// SI values, CODATA 2018 recommended set.
struct PhysicalConstants {
  double c;           ///< speed of light, m/s (exact)
  double hbar;        ///< reduced Planck constant, J s (exact)
  double e_charge;    ///< elementary charge, C (exact)
  double m_electron;  ///< kg
  double m_neutron;   ///< kg
  double m_proton;    ///< kg
};

inline constexpr PhysicalConstants kConstants{
    299792458.0,
    1.054571817e-34,
    1.602176634e-19,
    9.1093837015e-31,
    1.67492749804e-27,
    1.67262192369e-27,
};

inline constexpr double kPi = 3.14159265358979323846;

/// Constants table as `{key: {value, unit, source}}`; embedded in every output header.
nlohmann::json constants_table();

}  // namespace rotorqm
