#pragma once

#include <array>

#include "fgraph/map.hpp"

namespace fg {

// Two intersection graphs with the identification of their intersection
// points: map1's labels index map2's vertices and vice versa. Cell (i, j)
// pairs the delta slots of u_i labeled j+1 with the delta slots of v_j
// labeled i+1.
struct GraphPair {
    CombinatorialMap map1, map2;
    int jumping_number = 1;  // class mod delta, coprime to delta
    // points[i][j]: delta entries {slot at u_i, slot at v_j}
    std::vector<std::vector<std::vector<std::array<int, 2>>>> points;
};

// Derived point and edge correspondences of a validated pair.
struct PairStructure {
    std::vector<std::vector<Dart>> point_image;  // map1 (vertex,slot) -> map2 dart
    std::vector<std::vector<Dart>> point_preimage;
    std::vector<int> edge_map;  // map1 edge -> map2 edge
    int multiplier = 1;         // observed cyclic multiplier, = J^{-1} mod delta
};

// Check all pair invariants: counts, per-cell bijections, every edge's two
// points landing on one companion edge, and the jumping condition for the
// declared jumping number (up to sign). Throws CountMismatch,
// BrokenBijection, EdgeMismatch, JumpMismatch.
PairStructure validate_pair(const GraphPair& pair);

// All pairings of the two maps satisfying the structural invariants,
// deduplicated under the pair symmetry group, in deterministic order.
std::vector<GraphPair> enumerate_pairings(const CombinatorialMap& map1,
                                          const CombinatorialMap& map2);

// Stable content key of a pairing (used for ordering and deduplication).
std::string pairing_signature(const GraphPair& pair);

// Slots of the given vertex carrying one label, successive along the
// direction induced by the vertex orientation.
std::vector<int> cell_slots(const CombinatorialMap& m, int vertex, int label);

// The representative min(j, delta - j) of the class {j, -j} mod delta.
int normalized_jump(int mu, int delta);

}  // namespace fg
