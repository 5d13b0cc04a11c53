#pragma once

#include <string>

#include <json.hpp>

#include "fgraph/filters.hpp"
#include "fgraph/homology.hpp"
#include "fgraph/map.hpp"
#include "fgraph/pairing.hpp"

namespace fg {

// Document parsing throws MapError("MalformedDocument", ...) on structural
// problems; semantic validation (validate_map / validate_pair) is up to the
// caller unless stated otherwise.

nlohmann::json graph_to_json(const CombinatorialMap& m);
CombinatorialMap graph_from_json(const nlohmann::json& doc);

nlohmann::json pair_to_json(const GraphPair& p);
GraphPair pair_from_json(const nlohmann::json& doc);

AbelianPresentation presentation_from_json(const nlohmann::json& doc,
                                           std::vector<std::vector<long long>>* extra,
                                           int* modulus);

nlohmann::json verdict_to_json(const FilterVerdict& v);
nlohmann::json report_to_json(const FilterReport& r);

// Accepts a path to a JSON graph document or an inline "shape:..." literal;
// the resulting map is validated.
CombinatorialMap load_graph_argument(const std::string& arg);

// Read and parse a whole JSON file. Throws MalformedDocument on bad JSON.
nlohmann::json load_json_file(const std::string& path);

}  // namespace fg
