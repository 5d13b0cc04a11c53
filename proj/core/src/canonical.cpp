#include "fgraph/canonical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace fg {

CombinatorialMap apply_symmetry(const CombinatorialMap& m, const SymmetryElement& g) {
    int n = m.vertex_count;
    int mm = m.companion_count;
    auto ed = m.edge_darts();

    CombinatorialMap out;
    out.delta = m.delta;
    out.vertex_count = n;
    out.companion_count = mm;
    out.signs.assign(n, 1);
    out.rotation.resize(n);

    auto vperm = [&](int v) { return g.vertex_perm.empty() ? v : g.vertex_perm[v]; };
    auto eperm = [&](int e) { return g.edge_perm.empty() ? e : g.edge_perm[e]; };
    auto roff = [&](int v) { return g.rotation_offsets.empty() ? 0 : g.rotation_offsets[v]; };

    for (int v = 0; v < n; ++v) {
        int val = static_cast<int>(m.rotation[v].size());
        std::vector<Slot> rot = m.rotation[v];
        if (g.mirror) std::reverse(rot.begin(), rot.end());
        std::rotate(rot.begin(), rot.begin() + (roff(v) % val + val) % val, rot.end());
        for (Slot& s : rot) {
            int l = s.label;
            if (g.label_reflect) l = mm + 1 - l;
            l = (l - 1 + g.label_shift % mm + mm) % mm + 1;
            s.label = l;
            s.edge = eperm(s.edge);
        }
        out.rotation[vperm(v)] = std::move(rot);
        out.signs[vperm(v)] = g.sign_flip ? -m.signs[v] : m.signs[v];
    }

    for (Dart d : m.annulus_marks) {
        // mirroring conjugates the face permutation by the end-swap, so a
        // marked circuit is tracked through the opposite end of its dart
        if (g.mirror) {
            const Slot& s = m.at(d);
            d = ed[s.edge][1 - s.end];
        }
        int val = static_cast<int>(m.rotation[d.vertex].size());
        int k = d.slot;
        if (g.mirror) k = val - 1 - k;
        k = ((k - roff(d.vertex)) % val + val) % val;
        out.annulus_marks.push_back(Dart{vperm(d.vertex), k});
    }
    return out;
}

SymmetryElement random_symmetry(const CombinatorialMap& m, std::mt19937& rng) {
    SymmetryElement g;
    g.mirror = rng() & 1;
    g.sign_flip = rng() & 1;
    g.label_reflect = g.mirror != g.sign_flip;  // keeps the word ascending
    g.label_shift = static_cast<int>(rng() % m.companion_count);
    g.vertex_perm.resize(m.vertex_count);
    std::iota(g.vertex_perm.begin(), g.vertex_perm.end(), 0);
    std::shuffle(g.vertex_perm.begin(), g.vertex_perm.end(), rng);
    for (int v = 0; v < m.vertex_count; ++v)
        g.rotation_offsets.push_back(
            static_cast<int>(rng() % m.rotation[v].size()));
    g.edge_perm.resize(m.edge_count());
    std::iota(g.edge_perm.begin(), g.edge_perm.end(), 0);
    std::shuffle(g.edge_perm.begin(), g.edge_perm.end(), rng);
    return g;
}

namespace {

// Traversal code from an ordered seed list (one per component): vertices and
// edges renamed in discovery order, so the result only depends on the
// isomorphism class and the seeds.
std::string traversal_code(const CombinatorialMap& m,
                           const std::vector<std::array<Dart, 2>>& ed,
                           const std::vector<std::vector<char>>& disk_bit,
                           const std::vector<Dart>& seeds,
                           std::vector<Dart>* visited_out = nullptr) {
    int n = m.vertex_count;
    std::vector<int> anchor(n, -1), vid(n, -1);
    std::vector<int> eid(ed.size(), -1);
    std::vector<int> order;
    int next_edge = 0;
    size_t seed_pos = 0;
    std::string code;

    auto discover = [&](int v, int slot) {
        vid[v] = static_cast<int>(order.size());
        anchor[v] = slot;
        order.push_back(v);
    };
    discover(seeds[0].vertex, seeds[0].slot);
    ++seed_pos;

    for (size_t pi = 0; pi < order.size(); ++pi) {
        int v = order[pi];
        int val = static_cast<int>(m.rotation[v].size());
        code += m.signs[v] > 0 ? '+' : '-';
        for (int i = 0; i < val; ++i) {
            int k = (anchor[v] + i) % val;
            const Slot& s = m.rotation[v][k];
            if (visited_out) visited_out->push_back(Dart{v, k});
            if (eid[s.edge] == -1) eid[s.edge] = next_edge++;
            code += std::to_string(eid[s.edge]);
            code += ',';
            code += std::to_string(s.label);
            code += disk_bit[v][k] ? 'd' : 'a';
            code += ';';
            Dart other = ed[s.edge][1 - s.end];
            if (vid[other.vertex] == -1) discover(other.vertex, other.slot);
        }
        code += '|';
        if (pi + 1 == order.size() && seed_pos < seeds.size()) {
            discover(seeds[seed_pos].vertex, seeds[seed_pos].slot);
            ++seed_pos;
        }
    }
    return code;
}

std::vector<int> components(const CombinatorialMap& m,
                            const std::vector<std::array<Dart, 2>>& ed) {
    std::vector<int> comp(m.vertex_count, -1);
    int next = 0;
    for (int v0 = 0; v0 < m.vertex_count; ++v0) {
        if (comp[v0] != -1) continue;
        comp[v0] = next;
        std::vector<int> stack{v0};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Slot& s : m.rotation[v]) {
                int u = ed[s.edge][0].vertex == v ? ed[s.edge][1].vertex
                                                  : ed[s.edge][0].vertex;
                if (comp[u] == -1) {
                    comp[u] = next;
                    stack.push_back(u);
                }
            }
        }
        ++next;
    }
    return comp;
}

void best_over_seeds(const CombinatorialMap& m,
                     const std::vector<std::array<Dart, 2>>& ed,
                     const std::vector<std::vector<char>>& disk_bit,
                     const std::vector<int>& comp, int ncomp,
                     std::vector<Dart>& seeds, std::vector<char>& used,
                     std::string& best) {
    if (static_cast<int>(seeds.size()) == ncomp) {
        std::string code = traversal_code(m, ed, disk_bit, seeds);
        if (best.empty() || code < best) best = std::move(code);
        return;
    }
    for (int v = 0; v < m.vertex_count; ++v) {
        if (used[comp[v]]) continue;
        for (int k = 0; k < static_cast<int>(m.rotation[v].size()); ++k) {
            seeds.push_back(Dart{v, k});
            used[comp[v]] = 1;
            best_over_seeds(m, ed, disk_bit, comp, ncomp, seeds, used, best);
            used[comp[v]] = 0;
            seeds.pop_back();
        }
    }
}

}  // namespace

std::string canonical_code(const CombinatorialMap& m) {
    std::string best;
    for (int mirror = 0; mirror < 2; ++mirror)
        for (int flip = 0; flip < 2; ++flip)
            for (int shift = 0; shift < m.companion_count; ++shift) {
                SymmetryElement g;
                g.mirror = mirror;
                g.sign_flip = flip;
                g.label_reflect = mirror != flip;
                g.label_shift = shift;
                CombinatorialMap t = apply_symmetry(m, g);
                auto ed = t.edge_darts();
                FaceSet fs = trace_faces(t);
                std::vector<std::vector<char>> disk_bit(t.vertex_count);
                for (int v = 0; v < t.vertex_count; ++v) {
                    disk_bit[v].resize(t.rotation[v].size());
                    for (int k = 0; k < static_cast<int>(t.rotation[v].size()); ++k)
                        disk_bit[v][k] = fs.faces[fs.face_of[v][k]].disk;
                }
                auto comp = components(t, ed);
                int ncomp = comp.empty() ? 0
                                         : *std::max_element(comp.begin(), comp.end()) + 1;
                std::vector<Dart> seeds;
                std::vector<char> used(ncomp, 0);
                best_over_seeds(t, ed, disk_bit, comp, ncomp, seeds, used, best);
            }
    return best;
}

namespace {

std::vector<std::vector<char>> disk_bits(const CombinatorialMap& m) {
    FaceSet fs = trace_faces(m);
    std::vector<std::vector<char>> bits(m.vertex_count);
    for (int v = 0; v < m.vertex_count; ++v) {
        bits[v].resize(m.rotation[v].size());
        for (int k = 0; k < static_cast<int>(m.rotation[v].size()); ++k)
            bits[v][k] = fs.faces[fs.face_of[v][k]].disk;
    }
    return bits;
}

void all_seed_tuples(const CombinatorialMap& m, const std::vector<int>& comp,
                     int ncomp, std::vector<Dart>& seeds, std::vector<char>& used,
                     const std::function<void(const std::vector<Dart>&)>& fn) {
    if (static_cast<int>(seeds.size()) == ncomp) {
        fn(seeds);
        return;
    }
    for (int v = 0; v < m.vertex_count; ++v) {
        if (used[comp[v]]) continue;
        for (int k = 0; k < static_cast<int>(m.rotation[v].size()); ++k) {
            seeds.push_back(Dart{v, k});
            used[comp[v]] = 1;
            all_seed_tuples(m, comp, ncomp, seeds, used, fn);
            used[comp[v]] = 0;
            seeds.pop_back();
        }
    }
}

}  // namespace

std::vector<PointAuto> map_automorphisms(const CombinatorialMap& m) {
    int mm = m.companion_count;
    auto ed0 = m.edge_darts();
    auto bits0 = disk_bits(m);
    auto comp0 = components(m, ed0);
    int ncomp = comp0.empty() ? 0 : *std::max_element(comp0.begin(), comp0.end()) + 1;

    // reference traversal: seed each component at its lowest vertex, slot 0
    std::vector<Dart> ref_seeds;
    {
        std::vector<char> used(ncomp, 0);
        for (int v = 0; v < m.vertex_count; ++v)
            if (!used[comp0[v]]) {
                used[comp0[v]] = 1;
                ref_seeds.push_back(Dart{v, 0});
            }
    }
    std::vector<Dart> ref_darts;
    std::string C0 = traversal_code(m, ed0, bits0, ref_seeds, &ref_darts);

    std::vector<PointAuto> autos;
    auto have = [&](const PointAuto& a) {
        for (const PointAuto& b : autos)
            if (b.dart_image == a.dart_image) return true;
        return false;
    };

    for (int mirror = 0; mirror < 2; ++mirror)
        for (int flip = 0; flip < 2; ++flip)
            for (int shift = 0; shift < mm; ++shift) {
                SymmetryElement g;
                g.mirror = mirror;
                g.sign_flip = flip;
                g.label_reflect = mirror != flip;
                g.label_shift = shift;
                CombinatorialMap t = apply_symmetry(m, g);
                auto edt = t.edge_darts();
                auto bitst = disk_bits(t);
                auto compt = components(t, edt);

                // label action of g and its inverse
                std::vector<int> glab(mm + 1), glab_inv(mm + 1);
                for (int l = 1; l <= mm; ++l) {
                    int x = g.label_reflect ? mm + 1 - l : l;
                    x = (x - 1 + shift) % mm + 1;
                    glab[l] = x;
                    glab_inv[x] = l;
                }

                std::vector<Dart> seeds;
                std::vector<char> used(ncomp, 0);
                all_seed_tuples(t, compt, ncomp, seeds, used,
                                [&](const std::vector<Dart>& sd) {
                    std::vector<Dart> cand_darts;
                    std::string code = traversal_code(t, edt, bitst, sd, &cand_darts);
                    if (code != C0) return;
                    PointAuto a;
                    a.mirror = g.mirror;
                    a.dart_image.resize(m.vertex_count);
                    for (int v = 0; v < m.vertex_count; ++v)
                        a.dart_image[v].assign(m.rotation[v].size(), Dart{});
                    a.vertex_image.assign(m.vertex_count, -1);
                    a.label_image.assign(mm + 1, 0);
                    for (int l = 1; l <= mm; ++l) a.label_image[l] = glab_inv[l];
                    for (size_t s = 0; s < ref_darts.size(); ++s) {
                        Dart from = ref_darts[s];
                        Dart to = cand_darts[s];  // position in t
                        int val = static_cast<int>(m.rotation[to.vertex].size());
                        if (g.mirror) to.slot = val - 1 - to.slot;
                        a.dart_image[from.vertex][from.slot] = to;
                        a.vertex_image[from.vertex] = to.vertex;
                    }
                    if (!have(a)) autos.push_back(std::move(a));
                });
            }
    return autos;
}

}  // namespace fg
