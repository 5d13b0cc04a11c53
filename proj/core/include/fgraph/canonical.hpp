#pragma once

#include <random>
#include <string>

#include "fgraph/map.hpp"

namespace fg {

// A generator-combination of the declared symmetry group: mirror reversal,
// global sign flip, companion label shift (with the label reflection forced
// by the word invariant when orientation and signs disagree), plus the
// always-free renamings: vertex/edge permutation and rotation base point.
struct SymmetryElement {
    bool mirror = false;
    bool sign_flip = false;
    bool label_reflect = false;
    int label_shift = 0;
    std::vector<int> vertex_perm;       // image of each vertex
    std::vector<int> rotation_offsets;  // left rotation per original vertex
    std::vector<int> edge_perm;         // image of each edge id
};

// Apply the element; the result may violate the label-word invariant when
// mirror/sign_flip/label_reflect are combined inconsistently (callers that
// need validity should check or use random_symmetry).
CombinatorialMap apply_symmetry(const CombinatorialMap& m, const SymmetryElement& g);

// A uniformly random element whose application preserves validity.
SymmetryElement random_symmetry(const CombinatorialMap& m, std::mt19937& rng);

// Canonical byte code: equal exactly for maps related by the symmetry group.
// Computed by minimizing a traversal code over group combinations and
// starting darts.
std::string canonical_code(const CombinatorialMap& m);

// A structure-preserving self-map at the dart level, possibly orientation
// reversing and relabeling companions.
struct PointAuto {
    std::vector<std::vector<Dart>> dart_image;  // [vertex][slot]
    std::vector<int> vertex_image;
    std::vector<int> label_image;  // index 1..m used, entry 0 unused
    bool mirror = false;
};

// All symmetry-group self-equivalences of the map.
std::vector<PointAuto> map_automorphisms(const CombinatorialMap& m);

}  // namespace fg
