#include "fgraph/pairing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include "fgraph/canonical.hpp"

namespace fg {

// Slots of the given vertex carrying one label, successive along the
// direction induced by the vertex orientation.
std::vector<int> cell_slots(const CombinatorialMap& m, int vertex, int label) {
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(m.rotation[vertex].size()); ++k)
        if (m.rotation[vertex][k].label == label) out.push_back(k);
    if (m.signs[vertex] < 0) std::reverse(out.begin(), out.end());
    return out;
}

int normalized_jump(int mu, int delta) {
    int j = ((mu % delta) + delta) % delta;
    return std::min(j, delta - j);
}

namespace {

int normalized_j(int mu, int delta) {
    // the jumping number is the inverse multiplier; for delta up to 5 the
    // class {J, -J} equals {mu, -mu}
    int j = ((mu % delta) + delta) % delta;
    return std::min(j, delta - j);
}

bool maps_equal(const CombinatorialMap& a, const CombinatorialMap& b) {
    auto key = [](const CombinatorialMap& m) {
        std::string s = std::to_string(m.delta) + "/" + std::to_string(m.vertex_count) +
                        "/" + std::to_string(m.companion_count) + "/";
        for (int x : m.signs) s += x > 0 ? '+' : '-';
        for (const auto& rot : m.rotation) {
            s += '[';
            for (const Slot& sl : rot)
                s += std::to_string(sl.edge) + "." + std::to_string(sl.end) + "." +
                     std::to_string(sl.label) + ";";
        }
        return s;
    };
    return key(a) == key(b);
}

}  // namespace

std::string pairing_signature(const GraphPair& pair) {
    std::string s = "J" + std::to_string(normalized_j(pair.jumping_number,
                                                      pair.map1.delta));
    for (const auto& row : pair.points)
        for (const auto& cell : row) {
            s += '|';
            for (const auto& pr : cell)
                s += std::to_string(pr[0]) + ":" + std::to_string(pr[1]) + ",";
        }
    return s;
}

PairStructure validate_pair(const GraphPair& pair) {
    const CombinatorialMap& m1 = pair.map1;
    const CombinatorialMap& m2 = pair.map2;
    int delta = m1.delta;
    if (m2.delta != delta)
        throw MapError("CountMismatch", "the two maps disagree on delta");
    if (m1.companion_count != m2.vertex_count || m2.companion_count != m1.vertex_count)
        throw MapError("CountMismatch",
                       "companion count of one map must equal the vertex count "
                       "of the other");
    int n1 = m1.vertex_count, n2 = m2.vertex_count;
    if (static_cast<int>(pair.points.size()) != n1)
        throw MapError("BrokenBijection", "points table needs one row per vertex");
    if (std::gcd(((pair.jumping_number % delta) + delta) % delta, delta) != 1)
        throw MapError("JumpMismatch", "declared jumping number not coprime to delta");

    PairStructure st;
    st.point_image.resize(n1);
    for (int v = 0; v < n1; ++v)
        st.point_image[v].assign(m1.rotation[v].size(), Dart{});
    st.point_preimage.resize(n2);
    for (int v = 0; v < n2; ++v)
        st.point_preimage[v].assign(m2.rotation[v].size(), Dart{});

    std::optional<int> mu;
    for (int i = 0; i < n1; ++i) {
        if (static_cast<int>(pair.points[i].size()) != n2)
            throw MapError("BrokenBijection", "points row needs one cell per companion");
        for (int j = 0; j < n2; ++j) {
            auto A = cell_slots(m1, i, j + 1);
            auto B = cell_slots(m2, j, i + 1);
            const auto& cell = pair.points[i][j];
            if (static_cast<int>(A.size()) != delta ||
                static_cast<int>(B.size()) != delta ||
                static_cast<int>(cell.size()) != delta)
                throw MapError("BrokenBijection",
                               "cell (" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ") must pair delta points");
            std::vector<int> pos_in_b(delta, -1);
            std::vector<char> used_a(delta, 0), used_b(delta, 0);
            for (const auto& pr : cell) {
                auto ia = std::find(A.begin(), A.end(), pr[0]);
                auto ib = std::find(B.begin(), B.end(), pr[1]);
                if (ia == A.end() || ib == B.end())
                    throw MapError("BrokenBijection", "cell entry outside its label class");
                int ta = static_cast<int>(ia - A.begin());
                int tb = static_cast<int>(ib - B.begin());
                if (used_a[ta] || used_b[tb])
                    throw MapError("BrokenBijection", "cell entry repeated");
                used_a[ta] = used_b[tb] = 1;
                pos_in_b[ta] = tb;
                st.point_image[i][pr[0]] = Dart{j, pr[1]};
                st.point_preimage[j][pr[1]] = Dart{i, pr[0]};
            }
            // cyclic multiplier of this cell
            int cmu = ((pos_in_b[1 % delta] - pos_in_b[0]) % delta + delta) % delta;
            for (int t = 0; t < delta; ++t)
                if (pos_in_b[t] != (pos_in_b[0] + cmu * t) % delta)
                    throw MapError("JumpMismatch",
                                   "cell bijection is not a cyclic multiplication");
            if (!mu) mu = cmu;
            else if (*mu != cmu)
                throw MapError("JumpMismatch", "cells disagree on the multiplier");
        }
    }
    if (mu) {
        if (std::gcd(*mu, delta) != 1)
            throw MapError("JumpMismatch", "multiplier not coprime to delta");
        if (normalized_j(*mu, delta) != normalized_j(pair.jumping_number, delta))
            throw MapError("JumpMismatch",
                           "declared jumping number does not match the bijections");
        st.multiplier = *mu;
    }

    st.edge_map.assign(m1.edge_count(), -1);
    auto ed1 = m1.edge_darts();
    for (int e = 0; e < static_cast<int>(ed1.size()); ++e) {
        Dart q0 = st.point_image[ed1[e][0].vertex][ed1[e][0].slot];
        Dart q1 = st.point_image[ed1[e][1].vertex][ed1[e][1].slot];
        if (m2.at(q0).edge != m2.at(q1).edge || q0 == q1)
            throw MapError("EdgeMismatch",
                           "ends of edge " + std::to_string(e) +
                               " map to different companion edges");
        st.edge_map[e] = m2.at(q0).edge;
    }
    return st;
}

namespace {

struct CellRef {
    int cell;  // flattened index i * n2 + j
    int t;     // position within the A-side order
};

// transformed copy of a pairing under compatible automorphisms of its maps
GraphPair transform_pairing(const GraphPair& p, const PairStructure& st,
                            const PointAuto& a1, const PointAuto& a2) {
    const CombinatorialMap& m1 = p.map1;
    const CombinatorialMap& m2 = p.map2;
    int n1 = m1.vertex_count, n2 = m2.vertex_count;
    GraphPair out;
    out.map1 = m1;
    out.map2 = m2;
    out.points.assign(n1, std::vector<std::vector<std::array<int, 2>>>(n2));

    // new image of point a1(d) is a2(image of d)
    std::vector<std::vector<Dart>> img(n1);
    for (int v = 0; v < n1; ++v) img[v].assign(m1.rotation[v].size(), Dart{});
    for (int v = 0; v < n1; ++v)
        for (int k = 0; k < static_cast<int>(m1.rotation[v].size()); ++k) {
            Dart from = a1.dart_image[v][k];
            Dart to = st.point_image[v][k];
            img[from.vertex][from.slot] = a2.dart_image[to.vertex][to.slot];
        }
    for (int i = 0; i < n1; ++i)
        for (int k = 0; k < static_cast<int>(m1.rotation[i].size()); ++k) {
            int j = m1.rotation[i][k].label - 1;
            out.points[i][j].push_back({k, img[i][k].slot});
        }
    // the normalized jumping class is invariant under these transforms
    out.jumping_number = p.jumping_number;
    return out;
}

}  // namespace

std::vector<GraphPair> enumerate_pairings(const CombinatorialMap& map1,
                                          const CombinatorialMap& map2) {
    std::vector<GraphPair> out;
    int delta = map1.delta;
    if (map2.delta != delta || map1.companion_count != map2.vertex_count ||
        map2.companion_count != map1.vertex_count)
        return out;
    int n1 = map1.vertex_count, n2 = map2.vertex_count;
    int cells = n1 * n2;

    std::vector<std::vector<int>> A(cells), B(cells);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            A[i * n2 + j] = cell_slots(map1, i, j + 1);
            B[i * n2 + j] = cell_slots(map2, j, i + 1);
        }

    // locate every map1 dart inside its cell
    std::vector<std::vector<CellRef>> refs(n1);
    for (int i = 0; i < n1; ++i) {
        refs[i].assign(map1.rotation[i].size(), CellRef{-1, -1});
        for (int j = 0; j < n2; ++j) {
            const auto& slots = A[i * n2 + j];
            for (int t = 0; t < static_cast<int>(slots.size()); ++t)
                refs[i][slots[t]] = CellRef{i * n2 + j, t};
        }
    }

    // edges checked as soon as both their cells are assigned
    auto ed1 = map1.edge_darts();
    std::vector<std::vector<int>> edges_at(cells);
    for (int e = 0; e < static_cast<int>(ed1.size()); ++e) {
        int c0 = refs[ed1[e][0].vertex][ed1[e][0].slot].cell;
        int c1 = refs[ed1[e][1].vertex][ed1[e][1].slot].cell;
        edges_at[std::max(c0, c1)].push_back(e);
    }

    std::vector<GraphPair> raw;
    std::vector<int> anchor(cells, -1);
    for (int mu = 1; mu < delta; ++mu) {
        if (std::gcd(mu, delta) != 1) continue;
        auto image_dart = [&](const Dart& d) {
            CellRef r = refs[d.vertex][d.slot];
            int j = r.cell % n2;
            int pos = (anchor[r.cell] + mu * r.t) % delta;
            return Dart{j, B[r.cell][pos]};
        };
        std::function<void(int)> rec = [&](int c) {
            if (c == cells) {
                GraphPair p;
                p.map1 = map1;
                p.map2 = map2;
                int ji = 0;  // inverse of mu mod delta
                for (int x = 1; x < delta; ++x)
                    if (x * mu % delta == 1) ji = x;
                p.jumping_number = std::min(ji, delta - ji);
                p.points.assign(n1, std::vector<std::vector<std::array<int, 2>>>(n2));
                for (int i = 0; i < n1; ++i)
                    for (int k = 0; k < static_cast<int>(map1.rotation[i].size()); ++k) {
                        int j = map1.rotation[i][k].label - 1;
                        p.points[i][j].push_back({k, image_dart(Dart{i, k}).slot});
                    }
                raw.push_back(std::move(p));
                return;
            }
            for (int a = 0; a < delta; ++a) {
                anchor[c] = a;
                bool ok = true;
                for (int e : edges_at[c]) {
                    Dart q0 = image_dart(ed1[e][0]);
                    Dart q1 = image_dart(ed1[e][1]);
                    if (q0 == q1 || map2.at(q0).edge != map2.at(q1).edge) {
                        ok = false;
                        break;
                    }
                }
                if (ok) rec(c + 1);
            }
            anchor[c] = -1;
        };
        rec(0);
    }

    // deduplicate under compatible automorphism pairs (and the swap when the
    // two maps coincide)
    auto autos1 = map_automorphisms(map1);
    auto autos2 = map_automorphisms(map2);
    std::vector<std::pair<const PointAuto*, const PointAuto*>> compat;
    for (const auto& a1 : autos1)
        for (const auto& a2 : autos2) {
            bool ok = true;
            for (int j = 0; j < n2 && ok; ++j)
                if (a2.vertex_image[j] != a1.label_image[j + 1] - 1) ok = false;
            for (int i = 0; i < n1 && ok; ++i)
                if (a1.vertex_image[i] != a2.label_image[i + 1] - 1) ok = false;
            if (ok) compat.push_back({&a1, &a2});
        }
    bool swappable = maps_equal(map1, map2);

    std::map<std::string, GraphPair> reps;
    for (const GraphPair& p : raw) {
        PairStructure st = validate_pair(p);
        std::string best = pairing_signature(p);
        std::vector<GraphPair> orbit_bases{p};
        if (swappable) {
            GraphPair q;
            q.map1 = map2;
            q.map2 = map1;
            q.jumping_number = p.jumping_number;
            q.points.assign(n2, std::vector<std::vector<std::array<int, 2>>>(n1));
            for (int j = 0; j < n2; ++j)
                for (int k = 0; k < static_cast<int>(map2.rotation[j].size()); ++k) {
                    int i = map2.rotation[j][k].label - 1;
                    Dart pre = st.point_preimage[j][k];
                    q.points[j][i].push_back({k, pre.slot});
                }
            orbit_bases.push_back(std::move(q));
        }
        for (const GraphPair& base : orbit_bases) {
            PairStructure bst = validate_pair(base);
            for (const auto& [a1, a2] : compat) {
                GraphPair t = transform_pairing(base, bst, *a1, *a2);
                std::string sig = pairing_signature(t);
                if (sig < best) best = sig;
            }
        }
        if (!reps.count(best)) {
            // store the orbit representative rebuilt from its signature owner
            reps.emplace(best, p);
        }
    }
    for (auto& [sig, p] : reps) out.push_back(std::move(p));
    return out;
}

}  // namespace fg
