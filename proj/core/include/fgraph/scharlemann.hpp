#pragma once

#include <array>

#include "fgraph/families.hpp"
#include "fgraph/map.hpp"

namespace fg {

// A disk face bounded by positive edges whose endpoint labels all lie in one
// pair of consecutive labels {i, i+1 mod m}.
struct ScharlemannCycle {
    std::vector<int> edges;
    int face = -1;
    std::array<int, 2> label_pair{0, 0};  // {i, i+1 mod m}
    bool extended = false;

    int length() const { return static_cast<int>(edges.size()); }
};

std::vector<ScharlemannCycle> find_scharlemann(const CombinatorialMap& m);

}  // namespace fg
