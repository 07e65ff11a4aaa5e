#pragma once

// JSON mappings for the plain value types. Doubles are written in shortest round-trip
// form, so serialize -> parse reproduces every field bit-for-bit.

#include <nlohmann/json.hpp>

#include "rotorqm/types.hpp"

namespace rotorqm {

void to_json(nlohmann::json& j, const RotatingFrame& f);
void from_json(const nlohmann::json& j, RotatingFrame& f);
void to_json(nlohmann::json& j, const Particle& p);
void from_json(const nlohmann::json& j, Particle& p);
void to_json(nlohmann::json& j, const FluxSpec& f);
void from_json(const nlohmann::json& j, FluxSpec& f);
void to_json(nlohmann::json& j, const ModeSpec& m);
void from_json(const nlohmann::json& j, ModeSpec& m);

NLOHMANN_JSON_SERIALIZE_ENUM(Sector, {{Sector::Plus, "plus"}, {Sector::Minus, "minus"}})
NLOHMANN_JSON_SERIALIZE_ENUM(BoundaryCondition, {{BoundaryCondition::None, "none"},
                                                 {BoundaryCondition::Dirichlet, "dirichlet"},
                                                 {BoundaryCondition::Neumann, "neumann"}})

}  // namespace rotorqm
