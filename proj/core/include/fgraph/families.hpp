#pragma once

#include <optional>

#include "fgraph/map.hpp"

namespace fg {

// A maximal chain of parallel edges, consecutive members cobounding a bigon
// disk face. Loops have both endpoints on one vertex.
struct Family {
    enum class Kind { positive, negative, loop };

    std::vector<int> edges;  // in chain order
    int tail_vertex = 0;     // designated first vertex (smaller index)
    int head_vertex = 0;
    Kind kind = Kind::negative;
    // Constant head-minus-tail label shift mod m, absent when the members
    // disagree (which happens for positive families with m > 2, where the
    // label sums are constant instead).
    std::optional<int> transition;
    bool coloop = false;  // every member has equal labels at its two ends

    int weight() const { return static_cast<int>(edges.size()); }
};

// The reduced graph keeps one edge per family. Its rotation is stored as a
// map skeleton (labels unset) so faces can be traced; annulus designations
// carry over from the full map.
struct ReducedGraph {
    CombinatorialMap skeleton;  // edge ids are family indices
    std::vector<int> weights;   // per family
};

struct FamilyData {
    std::vector<Family> families;
    std::vector<int> family_of_edge;
    ReducedGraph reduced;
};

// Partition the edges into families via the bigon adjacency and collapse to
// the reduced graph. Requires a structurally valid map.
FamilyData compute_families(const CombinatorialMap& m);

// The transition of a non-loop family oriented from its tail vertex.
// Throws MixedTransition when the members disagree.
int transition_number(const CombinatorialMap& m, const Family& f);

}  // namespace fg
