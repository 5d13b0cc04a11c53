#pragma once

#include "fgraph/map.hpp"

namespace fg {

// Equivalence classes of the edge relation: equal label pair, equal endpoint
// vertices, and equidistant endpoints (the oriented distance between the two
// tail points matches the one between the two head points read back).
struct EdClasses {
    std::vector<int> class_of_edge;
    std::vector<std::vector<int>> classes;
    std::vector<int> d_vector;  // class sizes, descending
};

EdClasses ed_classes(const CombinatorialMap& m);

// The generating relation on a single pair of edges.
bool ed_related(const CombinatorialMap& m, int e1, int e2);

}  // namespace fg
