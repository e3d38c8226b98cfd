#pragma once

#include <json.hpp>

#include "cyclominus/hminus.hpp"
#include "cyclominus/numeric.hpp"
#include "cyclominus/predict.hpp"
#include "cyclominus/rayclass.hpp"

namespace cyclominus {

// canonical JSON forms: fixed key order, exact values (integers, rationals)
// rendered as decimal strings
using json = nlohmann::ordered_json;

json to_json(const FieldSpec& spec);
json to_json(const AbelianType& type);
json to_json(const HMinusResult& res, const FieldSpec& spec);
json to_json(const PredictionReport& rep);
json to_json(const NormKernelReport& rep);
json to_json(const MetsankylaReport& rep);
json to_json(const Lemma3Report& rep);
json to_json(const RootDiscriminant& rd, const FieldSpec& spec);

// one canonical text rendering, shared by the command line tools
std::string render_text(const HMinusResult& res, const FieldSpec& spec);
std::string render_text(const PredictionReport& rep);
std::string render_text(const NormKernelReport& rep);
std::string render_text(const MetsankylaReport& rep);
std::string render_text(const Lemma3Report& rep);
std::string render_text(const RootDiscriminant& rd, const FieldSpec& spec);

}  // namespace cyclominus
