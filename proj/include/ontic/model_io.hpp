#pragma once

#include <string>

#include <json.hpp>

#include "ontic/ontology.hpp"

namespace ontic {

// {"a2"?, "assumptions": {...}, "epistemic_states": [{"preparation", "context"?,
// "weights": {lambda: "p/q"}}], "ontic_states": [...], "responses": [{"context",
// "preparation"?, "outcomes": [...], "table": {lambda: ["p/q", ...]}}]}.
// Probabilities are strings ("p/q" or a finite decimal) or integers. Missing
// weights are 0; every table must list every ontic state.
nlohmann::json model_to_json(const OntologicalModel& model);
// Throws SchemaError naming the offending location, e.g. "responses[2].table.arm0[1]".
OntologicalModel model_from_json(const nlohmann::json& doc);

OntologicalModel load_model(const std::string& path);

// Reads and parses a JSON file; throws SchemaError on I/O or syntax errors.
nlohmann::json read_json_file(const std::string& path);
// Two-space indentation, sorted keys, trailing newline.
std::string dump_json(const nlohmann::json& doc);

}  // namespace ontic
