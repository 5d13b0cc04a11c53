#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fgraph/filters.hpp"
#include "fgraph/pairing.hpp"
#include "fgraph/shape.hpp"

namespace fg {

enum class SignPattern { any, parallel, antiparallel };

// All canonical maps with the given parameters from the small-case grammar:
// one-vertex (b1,b2,b3) or two-vertex sign(rho;a1..a4) with every label
// variant, one representative per canonical class, deterministic order.
// Throws MapError("UnsupportedParameters") when n > 2 or m > 2.
std::vector<CombinatorialMap> enumerate_graphs(int delta, int n, int m,
                                               SignPattern signs = SignPattern::any);

struct SearchConfig {
    int delta = 4;
    int n1 = 1;
    int n2 = 1;  // normalized to n1 <= n2
    std::vector<std::string> disabled;  // filter ids; a fail there never rejects
    int threads = 0;                    // 0: FG_THREADS or hardware default
};

struct SurvivorEntry {
    std::string code;    // canonical pair code, the sort key
    std::string shape1;  // normalized shape strings, shape1 <= shape2
    std::string shape2;
    GraphPair pair;
    FilterReport report;
};

struct SurvivorList {
    SearchConfig config;
    std::vector<SurvivorEntry> entries;  // sorted by code, duplicate-free
};

SurvivorList search(const SearchConfig& config);

// Normalized display form of a shape: weight cycle maximized over the
// rotations and reflections that preserve the loop block structure.
std::string normalize_shape(const ShapeDescriptor& shape);
std::string shape_of(const CombinatorialMap& m);  // via family reconstruction

struct FixtureDiff {
    std::vector<std::string> missing;  // in fixture, not in survivors
    std::vector<std::string> extra;    // in survivors, not in fixture
    bool empty() const { return missing.empty() && extra.empty(); }
};

// Compare at unordered shape-pair granularity. The fixture is an array of
// objects with "shape1"/"shape2" (and optional annotations). Throws
// MapError("MalformedFixture") on bad structure.
FixtureDiff diff_fixture(const SurvivorList& survivors, const nlohmann::json& fixture);

}  // namespace fg
