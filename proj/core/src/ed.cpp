#include "fgraph/ed.hpp"

#include <algorithm>
#include <numeric>

namespace fg {

namespace {

// Endpoints ordered so comparisons are well defined: non-loops by vertex
// index, loops by slot order around their vertex.
std::array<Dart, 2> oriented_ends(const CombinatorialMap& m, int e) {
    auto ed = m.edge_darts();
    Dart a = ed[e][0], b = ed[e][1];
    if (a.vertex != b.vertex) {
        if (a.vertex > b.vertex) std::swap(a, b);
    } else {
        if (a.slot > b.slot) std::swap(a, b);
    }
    return {a, b};
}

}  // namespace

bool ed_related(const CombinatorialMap& m, int e1, int e2) {
    auto [p1, q1] = oriented_ends(m, e1);
    auto [p2, q2] = oriented_ends(m, e2);
    if (p1.vertex != p2.vertex || q1.vertex != q2.vertex) return false;
    auto pair_of = [&](const Dart& a, const Dart& b) -> std::pair<int, int> {
        int x = m.label_at(a), y = m.label_at(b);
        return {std::min(x, y), std::max(x, y)};
    };
    if (pair_of(p1, q1) != pair_of(p2, q2)) return false;
    return slot_distance(m, p1, p2) == slot_distance(m, q2, q1);
}

EdClasses ed_classes(const CombinatorialMap& m) {
    int E = m.edge_count();
    std::vector<int> parent(E);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int a = 0; a < E; ++a)
        for (int b = a + 1; b < E; ++b)
            if (ed_related(m, a, b)) parent[find(a)] = find(b);

    EdClasses out;
    out.class_of_edge.assign(E, -1);
    std::vector<int> index_of_root(E, -1);
    for (int e = 0; e < E; ++e) {
        int r = find(e);
        if (index_of_root[r] == -1) {
            index_of_root[r] = static_cast<int>(out.classes.size());
            out.classes.emplace_back();
        }
        out.class_of_edge[e] = index_of_root[r];
        out.classes[index_of_root[r]].push_back(e);
    }
    for (const auto& c : out.classes) out.d_vector.push_back(static_cast<int>(c.size()));
    std::sort(out.d_vector.rbegin(), out.d_vector.rend());
    return out;
}

}  // namespace fg
