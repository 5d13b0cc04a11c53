#include "fgraph/filters.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fgraph/canonical.hpp"
#include "fgraph/ed.hpp"
#include "fgraph/families.hpp"
#include "fgraph/scharlemann.hpp"

namespace fg {

namespace {

FilterVerdict pass(std::string id) { return {std::move(id), FilterStatus::pass, ""}; }

FilterVerdict fail(std::string id, std::string w) {
    return {std::move(id), FilterStatus::fail, std::move(w)};
}

FilterVerdict na(std::string id, std::string w) {
    return {std::move(id), FilterStatus::not_applicable, std::move(w)};
}

bool all_parallel(const CombinatorialMap& m) {
    return std::all_of(m.signs.begin(), m.signs.end(),
                       [&](int s) { return s == m.signs[0]; });
}

std::string dart_str(const Dart& d) {
    return "v" + std::to_string(d.vertex + 1) + "[" + std::to_string(d.slot) + "]";
}

}  // namespace

const char* status_str(FilterStatus s) {
    switch (s) {
        case FilterStatus::pass: return "pass";
        case FilterStatus::fail: return "fail";
        default: return "not_applicable";
    }
}

FilterVerdict filter_parity(const GraphPair& pair, const PairStructure& st) {
    const std::string id = "L2.2(1)";
    for (int e = 0; e < static_cast<int>(st.edge_map.size()); ++e)
        if (pair.map1.edge_sign(e) == pair.map2.edge_sign(st.edge_map[e]))
            return fail(id, "edge " + std::to_string(e) + " has sign " +
                                std::to_string(pair.map1.edge_sign(e)) +
                                " in both graphs");
    return pass(id);
}

FilterVerdict filter_biparallel(const GraphPair& pair, const PairStructure& st) {
    const std::string id = "L2.2(2)";
    FamilyData f1 = compute_families(pair.map1);
    FamilyData f2 = compute_families(pair.map2);
    int E = static_cast<int>(st.edge_map.size());
    for (int a = 0; a < E; ++a)
        for (int b = a + 1; b < E; ++b)
            if (f1.family_of_edge[a] == f1.family_of_edge[b] &&
                f2.family_of_edge[st.edge_map[a]] == f2.family_of_edge[st.edge_map[b]])
                return fail(id, "edges " + std::to_string(a) + "," + std::to_string(b) +
                                    " are parallel in both graphs");
    return pass(id);
}

FilterVerdict filter_sign_sum(const GraphPair& pair) {
    const std::string id = "L2.23";
    int p1 = sign_sum(pair.map1), p2 = sign_sum(pair.map2);
    if (p1 * p2 != 0)
        return fail(id, "sign sums " + std::to_string(p1) + " and " +
                            std::to_string(p2) + " are both nonzero");
    return pass(id);
}

FilterVerdict filter_size_bounds(const CombinatorialMap& m, bool companion_positive) {
    const std::string id = "L2.3";
    FamilyData fd = compute_families(m);
    int mm = m.companion_count;
    int n = m.vertex_count;

    for (size_t k = 0; k < fd.families.size(); ++k) {
        const Family& f = fd.families[k];
        int w = f.weight();
        bool positive_edges = f.kind != Family::Kind::negative;
        if (positive_edges && mm > 2) {
            // parallel positive edges: at most m/2 + 2, the extreme forcing
            // m divisible by 4
            if (2 * w > mm + 4 || (2 * w == mm + 4 && mm % 4 != 0))
                return fail(id, "positive family " + std::to_string(k) + " has weight " +
                                    std::to_string(w) + " with m=" + std::to_string(mm));
        }
        if (!positive_edges) {
            bool bounded = mm >= 4 || (companion_positive && mm >= 3);
            if (bounded && w > 2 * mm)
                return fail(id, "negative family " + std::to_string(k) + " has weight " +
                                    std::to_string(w) + " > 2m = " + std::to_string(2 * mm));
        }
    }

    int reduced_edges = static_cast<int>(fd.families.size());
    if (reduced_edges > 3 * n)
        return fail(id, "reduced graph has " + std::to_string(reduced_edges) +
                            " edges > 3n = " + std::to_string(3 * n));

    // when no vertex is interior (every vertex meets a non-disk region), the
    // reduced graph behaves like a graph in a disk: at most 2n edges
    if (!m.annulus_marks.empty()) {
        FaceSet fs = trace_faces(fd.reduced.skeleton);
        bool has_interior = false;
        for (int v = 0; v < fd.reduced.skeleton.vertex_count && !has_interior; ++v) {
            bool boundary = false;
            for (int s = 0; s < static_cast<int>(fd.reduced.skeleton.rotation[v].size()); ++s)
                if (!fs.faces[fs.face_of[v][s]].disk) boundary = true;
            if (!boundary) has_interior = true;
        }
        if (!has_interior && reduced_edges > 2 * n)
            return fail(id, "reduced graph without interior vertices has " +
                                std::to_string(reduced_edges) +
                                " edges > 2n = " + std::to_string(2 * n));
    }
    return pass(id);
}

FilterVerdict filter_scharlemann_labels(const CombinatorialMap& m,
                                        const std::vector<int>* companion_signs) {
    const std::string id = "L2.3(4)";
    auto cycles = find_scharlemann(m);
    if (cycles.empty()) return pass(id);

    int mm = m.companion_count;
    if (mm % 2 != 0)
        return fail(id, "Scharlemann cycle with label pair {" +
                            std::to_string(cycles[0].label_pair[0]) + "," +
                            std::to_string(cycles[0].label_pair[1]) +
                            "} but companion count " + std::to_string(mm) + " is odd");

    std::set<int> labels;
    for (const auto& c : cycles) {
        labels.insert(c.label_pair[0]);
        labels.insert(c.label_pair[1]);
        if (c.extended && mm > 2)
            return fail(id, "extended Scharlemann cycle at face " + std::to_string(c.face));
    }
    if (labels.size() > 4) {
        std::string w = "labels of Scharlemann cycles:";
        for (int l : labels) w += " " + std::to_string(l);
        return fail(id, w);
    }

    // at most two labels per companion sign class; without companion data the
    // separating pattern of Lemma 2.2(4) makes the classes the label parities
    std::set<int> cls[2];
    for (int l : labels) {
        int c = companion_signs ? ((*companion_signs)[l - 1] > 0 ? 0 : 1) : l % 2;
        cls[c].insert(l);
    }
    for (int c = 0; c < 2; ++c)
        if (cls[c].size() > 2) {
            std::string w = "one sign class carries labels:";
            for (int l : cls[c]) w += " " + std::to_string(l);
            return fail(id, w);
        }

    // disjoint label pairs must agree in parity
    for (size_t a = 0; a < cycles.size(); ++a)
        for (size_t b = a + 1; b < cycles.size(); ++b) {
            const auto& pa = cycles[a].label_pair;
            const auto& pb = cycles[b].label_pair;
            bool disjoint = pa[0] != pb[0] && pa[0] != pb[1] && pa[1] != pb[0] &&
                            pa[1] != pb[1];
            if (disjoint && (pa[0] - pb[0]) % 2 != 0)
                return fail(id, "disjoint Scharlemann label pairs {" +
                                    std::to_string(pa[0]) + "," + std::to_string(pa[1]) +
                                    "} and {" + std::to_string(pb[0]) + "," +
                                    std::to_string(pb[1]) + "} of opposite parity");
        }
    return pass(id);
}

FilterVerdict filter_coloop_cycles(const CombinatorialMap& m, bool companion_positive) {
    const std::string id = "L2.14";
    FamilyData fd = compute_families(m);
    auto ed = m.edge_darts();
    int mm = m.companion_count;

    for (size_t k = 0; k < fd.families.size(); ++k) {
        const Family& f = fd.families[k];
        if (f.kind != Family::Kind::negative) continue;

        // arrows of the induced companion subgraph: tail label -> head label
        std::set<std::array<int, 2>> arrows;
        std::set<int> loop_labels;
        for (int e : f.edges) {
            Dart t = ed[e][0], h = ed[e][1];
            if (t.vertex != f.tail_vertex) std::swap(t, h);
            int lt = m.label_at(t), lh = m.label_at(h);
            if (lt == lh) loop_labels.insert(lt);
            else arrows.insert({lt, lh});
        }

        // disjoint cycles: one per looped companion vertex, plus each orbit of
        // the transition shift that the arrows cover entirely
        int cycles = static_cast<int>(loop_labels.size());
        if (!arrows.empty() && f.transition) {
            int s = *f.transition;
            std::vector<char> seen(mm + 1, 0);
            for (int start = 1; start <= mm; ++start) {
                if (seen[start]) continue;
                bool full = true;
                int l = start;
                do {
                    seen[l] = 1;
                    int nxt = (l - 1 + s) % mm + 1;
                    if (!arrows.count({l, nxt})) full = false;
                    l = nxt;
                } while (l != start);
                if (full) ++cycles;
            }
        }

        if (cycles >= 3)
            return fail(id, "(2) family " + std::to_string(k) + " induces " +
                                std::to_string(cycles) + " disjoint companion cycles");
        if (companion_positive && cycles >= 2)
            return fail(id, "(3) family " + std::to_string(k) + " induces " +
                                std::to_string(cycles) +
                                " disjoint companion cycles with positive companion");
    }
    return pass(id);
}

FilterVerdict filter_congruence(const CombinatorialMap& m) {
    const std::string id = "L15.1";
    if (m.vertex_count != 2 || m.companion_count != 2)
        return na(id, "needs two vertices and two companions");
    FamilyData fd = compute_families(m);

    const Family* loop0 = nullptr;
    std::vector<const Family*> nonloop;
    for (const Family& f : fd.families) {
        if (f.kind == Family::Kind::loop) {
            if (f.tail_vertex == 0) loop0 = &f;
        } else {
            nonloop.push_back(&f);
        }
    }

    if (!loop0) {
        // no loops: weight plus the co-loop indicator is constant mod 2
        for (size_t a = 0; a < nonloop.size(); ++a)
            for (size_t b = a + 1; b < nonloop.size(); ++b) {
                int pa = (nonloop[a]->weight() + (nonloop[a]->coloop ? 0 : 1)) % 2;
                int pb = (nonloop[b]->weight() + (nonloop[b]->coloop ? 0 : 1)) % 2;
                if (pa != pb)
                    return fail(id, "(1) weights " + std::to_string(nonloop[a]->weight()) +
                                        (nonloop[a]->coloop ? " (co-loop)" : "") + " and " +
                                        std::to_string(nonloop[b]->weight()) +
                                        (nonloop[b]->coloop ? " (co-loop)" : "") +
                                        " break the congruence");
            }
        return pass(id);
    }

    // loops present: all non-loop weights agree mod 2
    for (size_t a = 0; a < nonloop.size(); ++a)
        for (size_t b = a + 1; b < nonloop.size(); ++b)
            if (nonloop[a]->weight() % 2 != nonloop[b]->weight() % 2)
                return fail(id, "(2) weights " + std::to_string(nonloop[a]->weight()) +
                                    " and " + std::to_string(nonloop[b]->weight()) +
                                    " of opposite parity beside a loop");

    // a side of the loop carrying a single family forces that weight even,
    // its unseen neighbour having weight zero
    std::vector<char> is_loop_slot(m.rotation[0].size(), 0);
    for (int e : loop0->edges) {
        for (int k = 0; k < static_cast<int>(m.rotation[0].size()); ++k)
            if (m.rotation[0][k].edge == e) is_loop_slot[k] = 1;
    }
    int V = static_cast<int>(m.rotation[0].size());
    std::vector<std::set<int>> side_families;
    for (int k = 0; k < V; ++k) {
        int prev = (k + V - 1) % V;
        if (is_loop_slot[k]) continue;
        if (is_loop_slot[prev] || side_families.empty()) side_families.emplace_back();
        side_families.back().insert(fd.family_of_edge[m.rotation[0][k].edge]);
    }
    // the slot range may open mid-arc; merge a wrapping tail into the head
    if (side_families.size() > 2 && !is_loop_slot[0] && !is_loop_slot[V - 1]) {
        for (int f : side_families.back()) side_families.front().insert(f);
        side_families.pop_back();
    }
    for (const auto& side : side_families)
        if (side.size() == 1) {
            const Family& f = fd.families[*side.begin()];
            if (f.weight() % 2 != 0)
                return fail(id, "(3) lone family of odd weight " +
                                    std::to_string(f.weight()) + " on one side of the loop");
        }
    return pass(id);
}

namespace {

// one direction of the distance identities; image maps A-darts to B-darts
bool distance_direction(const CombinatorialMap& ma, const CombinatorialMap& mb,
                        const std::vector<std::vector<Dart>>& image, std::string& w) {
    int n = ma.vertex_count, mm = ma.companion_count;
    std::vector<std::vector<std::vector<int>>> cell(n);
    for (int i = 0; i < n; ++i) {
        cell[i].resize(mm);
        for (int k = 0; k < mm; ++k) cell[i][k] = cell_slots(ma, i, k + 1);
    }
    auto img = [&](int v, int s) { return image[v][s]; };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < mm; ++k)
                for (int l = 0; l < mm; ++l) {
                    // (i): both endpoints of each pair share one cell
                    for (int p : cell[i][k])
                        for (int q : cell[i][k])
                            for (int r : cell[j][l])
                                for (int s : cell[j][l]) {
                                    Dart P{i, p}, Q{i, q}, R{j, r}, S{j, s};
                                    if (slot_distance(ma, P, Q) != slot_distance(ma, R, S))
                                        continue;
                                    int dl = slot_distance(mb, img(i, p), img(i, q));
                                    int dr = slot_distance(mb, img(j, r), img(j, s));
                                    if (dl != dr) {
                                        w = "(i) " + dart_str(P) + "," + dart_str(Q) +
                                            " vs " + dart_str(R) + "," + dart_str(S) +
                                            ": companion distances " + std::to_string(dl) +
                                            " != " + std::to_string(dr);
                                        return false;
                                    }
                                }
                    // (ii): the four points spread over the four cells
                    for (int p : cell[i][k])
                        for (int q : cell[i][l])
                            for (int r : cell[j][k])
                                for (int s : cell[j][l]) {
                                    Dart P{i, p}, Q{i, q}, R{j, r}, S{j, s};
                                    if (slot_distance(ma, P, Q) != slot_distance(ma, R, S))
                                        continue;
                                    int dl = slot_distance(mb, img(i, p), img(j, r));
                                    int dr = slot_distance(mb, img(i, q), img(j, s));
                                    if (dl != dr) {
                                        w = "(ii) " + dart_str(P) + "," + dart_str(Q) +
                                            "," + dart_str(R) + "," + dart_str(S) +
                                            ": companion distances " + std::to_string(dl) +
                                            " != " + std::to_string(dr);
                                        return false;
                                    }
                                }
                }
    return true;
}

}  // namespace

FilterVerdict filter_distance(const GraphPair& pair, const PairStructure& st) {
    const std::string id = "L2.16";
    std::string w;
    if (!distance_direction(pair.map1, pair.map2, st.point_image, w))
        return fail(id, "graph 1: " + w);
    if (!distance_direction(pair.map2, pair.map1, st.point_preimage, w))
        return fail(id, "graph 2: " + w);
    return pass(id);
}

FilterVerdict filter_equidistance(const GraphPair& pair, const PairStructure& st) {
    const std::string id = "L17.2";
    EdClasses c1 = ed_classes(pair.map1);
    EdClasses c2 = ed_classes(pair.map2);
    int E = static_cast<int>(st.edge_map.size());
    for (int a = 0; a < E; ++a)
        for (int b = a + 1; b < E; ++b) {
            bool s1 = c1.class_of_edge[a] == c1.class_of_edge[b];
            bool s2 = c2.class_of_edge[st.edge_map[a]] == c2.class_of_edge[st.edge_map[b]];
            if (s1 != s2)
                return fail(id, "edges " + std::to_string(a) + "," + std::to_string(b) +
                                    " are ED equivalent in graph " + (s1 ? "1" : "2") +
                                    " only");
        }
    return pass(id);
}

FilterVerdict filter_jumping(const GraphPair& pair, const PairStructure& st) {
    const std::string id = "L2.18";
    int delta = pair.map1.delta;
    int declared = normalized_jump(pair.jumping_number, delta);
    if (std::gcd(declared, delta) != 1)
        return fail(id, "declared jumping number " + std::to_string(pair.jumping_number) +
                            " is not coprime to " + std::to_string(delta));
    int seen = -1;
    for (int i = 0; i < pair.map1.vertex_count; ++i)
        for (int j = 0; j < pair.map2.vertex_count; ++j) {
            auto A = cell_slots(pair.map1, i, j + 1);
            auto B = cell_slots(pair.map2, j, i + 1);
            std::vector<int> pos(delta, -1);
            for (int t = 0; t < delta; ++t) {
                Dart im = st.point_image[i][A[t]];
                pos[t] = static_cast<int>(std::find(B.begin(), B.end(), im.slot) - B.begin());
            }
            int mu = ((pos[1 % delta] - pos[0]) % delta + delta) % delta;
            for (int t = 0; t < delta; ++t)
                if (pos[t] != (pos[0] + mu * t) % delta)
                    return fail(id, "cell (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) +
                                        ") order is not a cyclic multiplication");
            if (seen == -1) seen = mu;
            else if (seen != mu)
                return fail(id, "cells disagree on the multiplier: " +
                                    std::to_string(seen) + " vs " + std::to_string(mu));
        }
    if (seen != -1) {
        if (std::gcd(seen, delta) != 1)
            return fail(id, "observed multiplier " + std::to_string(seen) +
                                " is not coprime to " + std::to_string(delta));
        // the jumping number is the inverse multiplier
        int ji = 0;
        for (int x = 1; x < delta; ++x)
            if (x * seen % delta == 1) ji = x;
        if (normalized_jump(ji, delta) != declared)
            return fail(id, "observed jumping number " + std::to_string(ji) +
                                " does not match declared " +
                                std::to_string(pair.jumping_number));
    }
    return pass(id);
}

namespace {

// A fixed-point-free label-preserving involution exchanging the two
// vertices. Freeness at the map level: no dart, edge, or disk face is
// carried to itself (a disk involution always has a fixed point).
bool free_involution_exists(const CombinatorialMap& K) {
    auto autos = map_automorphisms(K);
    FaceSet fs = trace_faces(K);
    for (const PointAuto& a : autos) {
        if (a.vertex_image != std::vector<int>{1, 0}) continue;
        bool labels_ok = true;
        for (int l = 1; l <= K.companion_count; ++l)
            if (a.label_image[l] != l) labels_ok = false;
        if (!labels_ok) continue;
        bool invol = true;
        for (int v = 0; v < K.vertex_count && invol; ++v)
            for (int k = 0; k < static_cast<int>(K.rotation[v].size()); ++k) {
                Dart m1 = a.dart_image[v][k];
                if (a.dart_image[m1.vertex][m1.slot] != Dart{v, k}) {
                    invol = false;
                    break;
                }
            }
        if (!invol) continue;
        bool fixed = false;
        for (int v = 0; v < K.vertex_count && !fixed; ++v)
            for (int k = 0; k < static_cast<int>(K.rotation[v].size()); ++k) {
                Dart im = a.dart_image[v][k];
                if (K.rotation[v][k].edge == K.at(im).edge) {
                    fixed = true;
                    break;
                }
                int f = fs.face_of[v][k], fi = fs.face_of[im.vertex][im.slot];
                if (f == fi && fs.faces[f].disk) {
                    fixed = true;
                    break;
                }
            }
        if (!fixed) return true;
    }
    return false;
}

}  // namespace

FilterVerdict filter_kleinian(const GraphPair& pair) {
    const std::string id = "L6.2";
    FamilyData fam1 = compute_families(pair.map1);
    FamilyData fam2 = compute_families(pair.map2);

    struct Side {
        const CombinatorialMap* x;
        const FamilyData* xf;
        const CombinatorialMap* y;
        const FamilyData* yf;
    };
    Side sides[2] = {{&pair.map1, &fam1, &pair.map2, &fam2},
                     {&pair.map2, &fam2, &pair.map1, &fam1}};

    for (const Side& s : sides) {
        if (s.y->vertex_count != 2) continue;

        // four parallel positive edges on one side make the other kleinian;
        // so does an all-bigon positive side whose companion has more than
        // two reduced edges
        bool trig_parallel = false;
        for (const Family& f : s.xf->families)
            if (f.kind != Family::Kind::negative && f.weight() >= 4) trig_parallel = true;

        bool all_even = std::all_of(s.xf->families.begin(), s.xf->families.end(),
                                    [](const Family& f) { return f.weight() % 2 == 0; });
        bool trig_bigons = all_parallel(*s.x) && all_even &&
                           static_cast<int>(s.yf->families.size()) > 2;
        if (!trig_parallel && !trig_bigons) continue;

        for (size_t fi = 0; fi < s.xf->families.size(); ++fi)
            if (s.xf->families[fi].weight() % 2 != 0)
                return fail(id, "(2) family " + std::to_string(fi) +
                                    " beside the kleinian graph has odd weight " +
                                    std::to_string(s.xf->families[fi].weight()));

        if (!free_involution_exists(*s.y))
            return fail(id,
                        "(4) no label-preserving free involution exchanging the "
                        "two vertices of the kleinian graph");
    }
    return pass(id);
}

FilterReport run_battery(const GraphPair& pair) {
    PairStructure st = validate_pair(pair);
    bool cp1 = all_parallel(pair.map2);  // companion of map1
    bool cp2 = all_parallel(pair.map1);
    // The two-disjoint-cycle bound is applied only for companions with at
    // least three vertices: the two-vertex positive companion admits
    // realizable configurations whose families are two parallel co-loops.
    bool cyc1 = cp1 && pair.map2.vertex_count >= 3;
    bool cyc2 = cp2 && pair.map1.vertex_count >= 3;

    auto tag = [](FilterVerdict v, const char* side) {
        v.lemma_id += side;
        return v;
    };

    FilterReport rep;
    rep.verdicts.push_back(filter_parity(pair, st));
    rep.verdicts.push_back(filter_biparallel(pair, st));
    rep.verdicts.push_back(tag(filter_size_bounds(pair.map1, cp1), "/G1"));
    rep.verdicts.push_back(tag(filter_size_bounds(pair.map2, cp2), "/G2"));
    rep.verdicts.push_back(tag(filter_scharlemann_labels(pair.map1, &pair.map2.signs), "/G1"));
    rep.verdicts.push_back(tag(filter_scharlemann_labels(pair.map2, &pair.map1.signs), "/G2"));
    rep.verdicts.push_back(tag(filter_coloop_cycles(pair.map1, cyc1), "/G1"));
    rep.verdicts.push_back(tag(filter_coloop_cycles(pair.map2, cyc2), "/G2"));
    rep.verdicts.push_back(tag(filter_congruence(pair.map1), "/G1"));
    rep.verdicts.push_back(tag(filter_congruence(pair.map2), "/G2"));
    rep.verdicts.push_back(filter_sign_sum(pair));
    rep.verdicts.push_back(filter_distance(pair, st));
    rep.verdicts.push_back(filter_equidistance(pair, st));
    rep.verdicts.push_back(filter_jumping(pair, st));
    rep.verdicts.push_back(filter_kleinian(pair));

    std::sort(rep.verdicts.begin(), rep.verdicts.end(),
              [](const FilterVerdict& a, const FilterVerdict& b) {
                  return a.lemma_id < b.lemma_id;
              });
    rep.accepted = std::none_of(rep.verdicts.begin(), rep.verdicts.end(),
                                [](const FilterVerdict& v) {
                                    return v.status == FilterStatus::fail;
                                });
    return rep;
}

}  // namespace fg
