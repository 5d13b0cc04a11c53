#include "fgraph/families.hpp"

#include <algorithm>
#include <map>

namespace fg {

namespace {

// Maximal cyclic runs of consecutive slots carrying edges of one family.
struct Run {
    int family;
    std::vector<int> slots;  // in rotation order
    int end_tag = -1;
};

std::vector<Run> vertex_runs(const CombinatorialMap& m, int v,
                             const std::vector<int>& family_of_edge) {
    const auto& rot = m.rotation[v];
    int n = static_cast<int>(rot.size());
    std::vector<Run> runs;
    for (int k = 0; k < n; ++k) {
        int f = family_of_edge[rot[k].edge];
        if (!runs.empty() && runs.back().family == f)
            runs.back().slots.push_back(k);
        else
            runs.push_back({f, {k}, -1});
    }
    // merge across the wrap
    if (runs.size() > 1 && runs.front().family == runs.back().family) {
        auto& first = runs.front();
        first.slots.insert(first.slots.begin(), runs.back().slots.begin(),
                           runs.back().slots.end());
        runs.pop_back();
    }
    // A loop family whose two blocks abut folds into one run of twice the
    // block length; split at the points where one edge meets itself.
    std::vector<Run> out;
    for (auto& r : runs) {
        size_t cut = 0;
        std::vector<Run> parts;
        for (size_t i = 0; i + 1 < r.slots.size(); ++i) {
            if (rot[r.slots[i]].edge == rot[r.slots[i + 1]].edge) {
                parts.push_back({r.family,
                                 {r.slots.begin() + cut, r.slots.begin() + i + 1},
                                 -1});
                cut = i + 1;
            }
        }
        parts.push_back({r.family, {r.slots.begin() + cut, r.slots.end()}, -1});
        // a fold at the wrap point joins the first and last parts
        if (parts.size() > 1) {
            int e_last = rot[parts.back().slots.back()].edge;
            int e_first = rot[parts.front().slots.front()].edge;
            if (e_last == e_first && parts.size() > 2) {
                parts.front().slots.insert(parts.front().slots.begin(),
                                           parts.back().slots.begin(),
                                           parts.back().slots.end());
                parts.pop_back();
            }
        }
        for (auto& p : parts) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

FamilyData compute_families(const CombinatorialMap& m) {
    auto ed = m.edge_darts();
    FaceSet fs = trace_faces(m);
    int E = m.edge_count();

    // bigon adjacency between parallel edges
    std::vector<std::vector<int>> adj(E);
    for (const Face& f : fs.faces) {
        if (!f.disk || f.size() != 2) continue;
        int e1 = m.at(f.darts[0]).edge, e2 = m.at(f.darts[1]).edge;
        if (e1 == e2) continue;
        adj[e1].push_back(e2);
        adj[e2].push_back(e1);
    }
    for (auto& a : adj)
        if (a.size() > 2)
            throw MapError("BigonChain", "edge parallel to more than two neighbours");

    FamilyData out;
    out.family_of_edge.assign(E, -1);
    for (int e0 = 0; e0 < E; ++e0) {
        if (out.family_of_edge[e0] != -1) continue;
        // collect the component and pick its endpoint of smallest edge id
        std::vector<int> comp{e0};
        std::vector<char> seen(E, 0);
        seen[e0] = 1;
        for (size_t i = 0; i < comp.size(); ++i)
            for (int nb : adj[comp[i]])
                if (!seen[nb]) {
                    seen[nb] = 1;
                    comp.push_back(nb);
                }
        int start = -1;
        for (int e : comp)
            if (adj[e].size() < 2 && (start == -1 || e < start)) start = e;
        if (start == -1)
            throw MapError("BigonChain", "family bigons form a closed cycle");
        Family fam;
        int id = static_cast<int>(out.families.size());
        int cur = start, prev = -1;
        while (cur != -1) {
            fam.edges.push_back(cur);
            out.family_of_edge[cur] = id;
            int next = -1;
            for (int nb : adj[cur])
                if (nb != prev) next = nb;
            prev = cur;
            cur = (next != -1 && out.family_of_edge[next] == -1) ? next : -1;
        }

        int v0 = ed[fam.edges[0]][0].vertex, v1 = ed[fam.edges[0]][1].vertex;
        if (v0 == v1) {
            fam.kind = Family::Kind::loop;
            fam.tail_vertex = fam.head_vertex = v0;
        } else {
            fam.tail_vertex = std::min(v0, v1);
            fam.head_vertex = std::max(v0, v1);
            fam.kind = m.signs[v0] == m.signs[v1] ? Family::Kind::positive
                                                  : Family::Kind::negative;
        }

        int mm = m.companion_count;
        bool coloop = true, constant = true;
        std::optional<int> s;
        for (int e : fam.edges) {
            Dart t = ed[e][0], h = ed[e][1];
            if (fam.kind != Family::Kind::loop && t.vertex != fam.tail_vertex)
                std::swap(t, h);
            int lt = m.label_at(t), lh = m.label_at(h);
            if (lt != lh) coloop = false;
            int d = ((lh - lt) % mm + mm) % mm;
            if (!s) s = d;
            else if (*s != d) constant = false;
        }
        fam.coloop = coloop;
        if (constant && fam.kind != Family::Kind::loop) fam.transition = s;
        out.families.push_back(std::move(fam));
    }

    // reduced graph: one slot per run, end tags fixed by the chain's first
    // edge (its end 0 marks the run tagged 0)
    ReducedGraph& red = out.reduced;
    red.skeleton.delta = m.delta;
    red.skeleton.vertex_count = m.vertex_count;
    red.skeleton.companion_count = 1;
    red.skeleton.signs = m.signs;
    red.skeleton.rotation.resize(m.vertex_count);
    red.weights.resize(out.families.size());
    for (size_t f = 0; f < out.families.size(); ++f)
        red.weights[f] = out.families[f].weight();

    std::vector<std::vector<int>> run_of_slot(m.vertex_count);
    for (int v = 0; v < m.vertex_count; ++v) {
        auto runs = vertex_runs(m, v, out.family_of_edge);
        run_of_slot[v].assign(m.rotation[v].size(), -1);
        for (size_t r = 0; r < runs.size(); ++r) {
            const Family& fam = out.families[runs[r].family];
            int first = fam.edges.front();
            // does this run contain end 0 of the chain's first edge?
            bool has_end0 = false, has_end1 = false;
            for (int k : runs[r].slots) {
                const Slot& sl = m.rotation[v][k];
                if (sl.edge == first && sl.end == 0) has_end0 = true;
                if (sl.edge == first && sl.end == 1) has_end1 = true;
                run_of_slot[v][k] = static_cast<int>(r);
            }
            int tag;
            if (fam.kind == Family::Kind::loop)
                tag = has_end0 ? 0 : 1;
            else
                tag = v == fam.tail_vertex ? 0 : 1;
            (void)has_end1;
            red.skeleton.rotation[v].push_back({runs[r].family, tag, 1});
        }
    }
    for (const Dart& mark : m.annulus_marks)
        red.skeleton.annulus_marks.push_back(
            Dart{mark.vertex, run_of_slot[mark.vertex][mark.slot]});

    return out;
}

int transition_number(const CombinatorialMap& m, const Family& f) {
    if (f.kind == Family::Kind::loop)
        throw MapError("LoopFamily", "transition is defined for non-loop families");
    auto ed = m.edge_darts();
    int mm = m.companion_count;
    std::optional<int> s;
    for (int e : f.edges) {
        Dart t = ed[e][0], h = ed[e][1];
        if (t.vertex != f.tail_vertex) std::swap(t, h);
        int d = ((m.label_at(h) - m.label_at(t)) % mm + mm) % mm;
        if (!s) s = d;
        else if (*s != d)
            throw MapError("MixedTransition",
                           "family members disagree on the label shift");
    }
    return *s;
}

}  // namespace fg
