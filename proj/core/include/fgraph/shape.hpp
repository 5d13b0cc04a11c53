#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgraph/map.hpp"

namespace fg {

// Compressed reduced-graph notation: (b1,b2,b3) for one-vertex graphs,
// sign(rho; a1,...,a4) for two-vertex graphs. Weight 0 entries are retained;
// their position matters when rho > 0.
struct ShapeDescriptor {
    bool two_vertex = true;
    int sign_product = -1;  // +1 parallel vertices, -1 antiparallel
    int rho = 0;            // weight of the loop family at each vertex
    std::vector<int> weights;  // a1..a4 or b1..b3
    int delta = 4;
    int companion_count = 1;
    // Transition of the first nonzero non-loop family (mod m); fixes the
    // relative label offset between the two vertices. When every non-loop
    // weight is zero, or when the leading family's member transitions are
    // mixed (positive family with m > 2), it is the offset itself, the only
    // remaining label freedom. Ignored for one-vertex shapes. Default 1 when
    // m > 1 (no co-loops), else 0.
    std::optional<int> s1;
    // Optional full per-family constraints; checked post expansion.
    std::vector<std::optional<int>> transitions;   // per non-loop family
    std::vector<std::optional<int>> start_offsets; // label of first endpoint at first vertex

    int valence() const;
    std::string str() const;  // e.g. "-(2;2,2,2,0)"
};

// Parse "+(3,1,3,1)", "-(2;2,2,2,0)", "(3,1,1)", optionally followed by
// "@delta=5,m=2,s1=0". Throws MapError("ShapeSyntax", ...) on bad input.
ShapeDescriptor parse_shape(const std::string& text);

// Build the combinatorial map realizing the shape on the torus: the standard
// two-vertex embedding with one loop family per vertex and four interleaved
// non-loop families, or the one-vertex embedding with three loop families.
// Labels follow the standard label word with the relative offset implied by
// s1. Throws ValenceMismatch / LabelConflict / NonToral.
CombinatorialMap expand_shape(const ShapeDescriptor& shape);

// Infer (delta, m) from the valence when unambiguous; throws otherwise.
void infer_parameters(ShapeDescriptor& shape);

namespace detail {

// Embedding convention knobs for the two-vertex builder, resolved once
// against the transition tables; exposed for the convention tests.
struct TwoVertexConvention {
    int perm[4];            // family occupying each non-loop block slot at u2
    bool u2_reverse;        // reverse non-loop block internal order at u2
    bool loop_reverse;      // reverse the second loop block at each vertex
};

extern const TwoVertexConvention kTwoVertexConvention;

CombinatorialMap build_two_vertex(const ShapeDescriptor& shape, int offset,
                                  const TwoVertexConvention& conv);
CombinatorialMap build_one_vertex(const ShapeDescriptor& shape);

}  // namespace detail

}  // namespace fg
