#include "ssblow/rigidity/report.hpp"

#include "ssblow/sscalc/serialize.hpp"

namespace ssblow::rigidity {

using nlohmann::json;

json to_json(const TrivialityVerdict& v) {
  return {{"gamma", to_string(v.gamma)},
          {"k", v.k},
          {"field", std::string(sscalc::field_name(v.field))},
          {"coefficient", to_string(v.coefficient)},
          {"degree", to_string(v.degree)},
          {"degree_value", v.degree.get_d()},
          {"case", std::string(case_name(v.branch))},
          {"conclusion", std::string(conclusion_name(v.conclusion))},
          {"reason", v.reason}};
}

json to_json(const SeparabilityResult& r) {
  json j = {{"f", r.f}, {"g", r.g}, {"residual", r.residual}};
  j["g_is_constant"] = r.g_is_constant ? json(*r.g_is_constant) : json(nullptr);
  return j;
}

json to_json(const ExtremumReport& r) {
  return {{"nonzero_extremum", r.nonzero_extremum},
          {"kind", r.is_maximum ? "max" : "min"},
          {"R", r.R},
          {"Z", r.Z},
          {"value", r.value},
          {"on_boundary", r.on_boundary},
          {"dR", r.dR},
          {"dZ", r.dZ},
          {"drift_term", r.drift_term},
          {"normal_drift", r.normal_drift},
          {"transport_residual", r.transport_residual},
          {"boundary_condition_residual", r.boundary_condition_residual},
          {"contradiction", r.contradiction}};
}

json to_json(const IbpReport& r) {
  return {{"lhs", r.lhs},
          {"rhs", r.rhs},
          {"boundary_term", r.boundary_term},
          {"transport_term", r.transport_term},
          {"balance", r.balance},
          {"abs_lhs_minus_rhs", std::abs(r.lhs - r.rhs)},
          {"bc_residual", r.bc_residual},
          {"gamma", r.gamma},
          {"p", r.p},
          {"rho", r.rho},
          {"h", r.h}};
}

json to_json(const IbpVerdict& v) {
  return {{"fine", to_json(v.fine)}, {"coarse", to_json(v.coarse)}, {"tolerance", v.tolerance}, {"passes", v.passes}};
}

json to_json(const EndgameReport& r) {
  return {{"bc_residual", r.bc_residual},
          {"a", r.a},
          {"b", r.b},
          {"fit_residual", r.fit_residual},
          {"interior_dz_max", r.interior_dz_max},
          {"solve_residual", r.solve_residual},
          {"truncation_radius", r.truncation_radius}};
}

json to_json(const Endgame1dReport& r) { return {{"a", r.a}, {"b", r.b}, {"fit_residual", r.fit_residual}}; }

json to_json(const WindowVerdict& v) {
  return {{"tag", std::string(window_class_name(v.tag))},
          {"ratio_growth", v.ratio_growth},
          {"delta_exponent", v.delta_exponent},
          {"delta_vanishes", v.delta_vanishes},
          {"ratio_first", v.ratio_first},
          {"ratio_last", v.ratio_last}};
}

json to_json(const PipelineReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"name", s.name}, {"holds", s.holds}, {"detail", s.detail}, {"equation", s.equation}});
  }
  return {{"gamma", to_string(r.gamma)},
          {"steps", steps},
          {"swirl", to_json(r.swirl)},
          {"vorticity", to_json(r.vorticity)},
          {"psi_a", r.psi_a},
          {"psi_b", r.psi_b},
          {"trivial", r.trivial}};
}

json rigidity_document(std::string_view kind, json body) {
  json doc = {{"schema", std::string(kRigiditySchema)}, {"kind", std::string(kind)}};
  for (auto& [key, value] : body.items()) doc[key] = value;
  return doc;
}

}  // namespace ssblow::rigidity
