#pragma once

#include <string>

#include "json.hpp"
#include "pcs/machine.hpp"
#include "pcs/verify.hpp"

namespace pcs {

using Json = nlohmann::json;

Json pcs_to_json(const Pcs& model);
Pcs pcs_from_json(const Json& j);

Json config_to_json(const Machine& m, const Config& c);
Config config_from_json(const Machine& m, const Json& j);

// Literal form "state:word,word,..." with the empty word for eps.
Config config_from_literal(const Machine& m, const std::string& text);

Json run_to_json(const Machine& m, const Run& run);
Run run_from_json(const Machine& m, const Json& j);

Json verdict_to_json(const Machine& m, const Verdict& v);

std::string semantics_name(Semantics s);
Semantics semantics_from_name(const std::string& name);

}  // namespace pcs
