#pragma once

#include <nlohmann/json.hpp>
#include <string_view>

#include "ssblow/rigidity/diagnostics.hpp"
#include "ssblow/rigidity/endgame.hpp"
#include "ssblow/rigidity/identity.hpp"
#include "ssblow/rigidity/pipeline.hpp"
#include "ssblow/rigidity/triviality.hpp"
#include "ssblow/rigidity/window.hpp"

namespace ssblow::rigidity {

inline constexpr std::string_view kRigiditySchema = "rigidity/1";

nlohmann::json to_json(const TrivialityVerdict& v);
nlohmann::json to_json(const SeparabilityResult& r);
nlohmann::json to_json(const ExtremumReport& r);
nlohmann::json to_json(const IbpReport& r);
nlohmann::json to_json(const IbpVerdict& v);
nlohmann::json to_json(const EndgameReport& r);  // without the field itself
nlohmann::json to_json(const Endgame1dReport& r);
nlohmann::json to_json(const WindowVerdict& v);
nlohmann::json to_json(const PipelineReport& r);

/// {"schema":"rigidity/1","kind":kind, ...body}
nlohmann::json rigidity_document(std::string_view kind, nlohmann::json body);

}  // namespace ssblow::rigidity
