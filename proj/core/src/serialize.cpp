#include "rotorqm/serialize.hpp"

namespace rotorqm {

void to_json(nlohmann::json& j, const RotatingFrame& f) {
  j = {{"omega", f.omega}, {"radius", f.radius}};
}
void from_json(const nlohmann::json& j, RotatingFrame& f) {
  j.at("omega").get_to(f.omega);
  j.at("radius").get_to(f.radius);
}

void to_json(nlohmann::json& j, const Particle& p) {
  j = {{"mass", p.mass}, {"charge", p.charge}};
}
void from_json(const nlohmann::json& j, Particle& p) {
  j.at("mass").get_to(p.mass);
  j.at("charge").get_to(p.charge);
}

void to_json(nlohmann::json& j, const FluxSpec& f) { j = {{"flux_ratio", f.flux_ratio}}; }
void from_json(const nlohmann::json& j, FluxSpec& f) { j.at("flux_ratio").get_to(f.flux_ratio); }

void to_json(nlohmann::json& j, const ModeSpec& m) {
  j = {{"sector", m.sector},
       {"angular_qn", m.angular_qn},
       {"axial_k", m.axial_k},
       {"radial_index", m.radial_index},
       {"bc", m.bc}};
}
void from_json(const nlohmann::json& j, ModeSpec& m) {
  j.at("sector").get_to(m.sector);
  j.at("angular_qn").get_to(m.angular_qn);
  j.at("axial_k").get_to(m.axial_k);
  j.at("radial_index").get_to(m.radial_index);
  j.at("bc").get_to(m.bc);
}

}  // namespace rotorqm
