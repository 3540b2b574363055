#pragma once

#include <string>

#include <json.hpp>

#include "shufflecheck/compat.hpp"

namespace shufflecheck {

// Serialization of checker reports. Both forms carry the same facts;
// wall time is emitted only when include_timing is set so that default
// output is byte-identical across runs.
std::string report_to_text(const CompatReport& report, bool include_timing = false);
nlohmann::json report_to_json(const CompatReport& report, bool include_timing = false);

nlohmann::json witness_to_json(const ShuffleWitness& w);
nlohmann::json witness_to_json(const DescentWitness& w);
std::string witness_to_text(const ShuffleWitness& w, std::string_view indent = "  ");
std::string witness_to_text(const DescentWitness& w, std::string_view indent = "  ");

}  // namespace shufflecheck
