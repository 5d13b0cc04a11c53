#include "fgraph/map.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fg {

int FaceSet::disk_count() const {
    return static_cast<int>(
        std::count_if(faces.begin(), faces.end(), [](const Face& f) { return f.disk; }));
}

int FaceSet::annulus_end_count() const {
    return static_cast<int>(faces.size()) - disk_count();
}

int CombinatorialMap::edge_count() const {
    int max_id = -1;
    for (const auto& rot : rotation)
        for (const auto& s : rot) max_id = std::max(max_id, s.edge);
    return max_id + 1;
}

std::vector<std::array<Dart, 2>> CombinatorialMap::edge_darts() const {
    std::vector<std::array<Dart, 2>> out(edge_count(), {Dart{}, Dart{}});
    for (int v = 0; v < vertex_count; ++v) {
        for (int k = 0; k < static_cast<int>(rotation[v].size()); ++k) {
            const Slot& s = rotation[v][k];
            if (s.edge < 0 || s.edge >= static_cast<int>(out.size()) || s.end < 0 || s.end > 1)
                throw MapError("BadEdgeId", "slot with malformed edge reference");
            Dart& d = out[s.edge][s.end];
            if (d.vertex != -1)
                throw MapError("EdgeEndReused",
                               "edge " + std::to_string(s.edge) + " end " +
                                   std::to_string(s.end) + " occurs twice");
            d = Dart{v, k};
        }
    }
    for (int e = 0; e < static_cast<int>(out.size()); ++e)
        for (int t = 0; t < 2; ++t)
            if (out[e][t].vertex == -1)
                throw MapError("MissingEdgeEnd",
                               "edge " + std::to_string(e) + " lacks end " + std::to_string(t));
    return out;
}

bool CombinatorialMap::edge_is_loop(int e) const {
    auto ed = edge_darts();
    return ed[e][0].vertex == ed[e][1].vertex;
}

int CombinatorialMap::edge_sign(int e) const {
    auto ed = edge_darts();
    return signs[ed[e][0].vertex] * signs[ed[e][1].vertex];
}

FaceSet trace_faces(const CombinatorialMap& m) {
    auto ed = m.edge_darts();
    FaceSet fs;
    fs.face_of.resize(m.vertex_count);
    for (int v = 0; v < m.vertex_count; ++v)
        fs.face_of[v].assign(m.rotation[v].size(), -1);

    auto alpha = [&](const Dart& d) {
        const Slot& s = m.at(d);
        return ed[s.edge][1 - s.end];
    };
    auto sigma = [&](const Dart& d) {
        int n = static_cast<int>(m.rotation[d.vertex].size());
        return Dart{d.vertex, (d.slot + 1) % n};
    };

    for (int v = 0; v < m.vertex_count; ++v) {
        for (int k = 0; k < static_cast<int>(m.rotation[v].size()); ++k) {
            if (fs.face_of[v][k] != -1) continue;
            Face f;
            int id = static_cast<int>(fs.faces.size());
            Dart d{v, k};
            do {
                f.darts.push_back(d);
                fs.face_of[d.vertex][d.slot] = id;
                d = sigma(alpha(d));
            } while (!(d == Dart{v, k}));
            fs.faces.push_back(std::move(f));
        }
    }
    for (const Dart& mark : m.annulus_marks) {
        if (mark.vertex < 0 || mark.vertex >= m.vertex_count ||
            mark.slot < 0 || mark.slot >= static_cast<int>(m.rotation[mark.vertex].size()))
            throw MapError("BadAnnulusMark", "annulus mark outside the rotation");
        fs.faces[fs.face_of[mark.vertex][mark.slot]].disk = false;
    }
    return fs;
}

std::vector<int> label_word(const CombinatorialMap& m, int vertex) {
    std::vector<int> w;
    const auto& rot = m.rotation[vertex];
    w.reserve(rot.size());
    if (m.signs[vertex] > 0) {
        for (const auto& s : rot) w.push_back(s.label);
    } else {
        for (auto it = rot.rbegin(); it != rot.rend(); ++it) w.push_back(it->label);
    }
    return w;
}

bool is_standard_label_word(const std::vector<int>& word, int m, int delta) {
    if (static_cast<int>(word.size()) != m * delta) return false;
    // Find the offset from the first label and check the arithmetic
    // progression mod m from there.
    for (int i = 0; i < static_cast<int>(word.size()); ++i) {
        int expect = (word[0] - 1 + i) % m + 1;
        if (word[i] != expect) return false;
    }
    return true;
}

namespace {

// Connected components over vertices joined by edges.
std::vector<int> vertex_components(const CombinatorialMap& m) {
    std::vector<int> comp(m.vertex_count, -1);
    auto ed = m.edge_darts();
    int next = 0;
    for (int v0 = 0; v0 < m.vertex_count; ++v0) {
        if (comp[v0] != -1) continue;
        comp[v0] = next;
        std::vector<int> stack{v0};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Slot& s : m.rotation[v]) {
                for (int t = 0; t < 2; ++t) {
                    int u = ed[s.edge][t].vertex;
                    if (comp[u] == -1) {
                        comp[u] = next;
                        stack.push_back(u);
                    }
                }
            }
        }
        ++next;
    }
    return comp;
}

}  // namespace

void validate_map(const CombinatorialMap& m) {
    if (m.delta != 4 && m.delta != 5)
        throw MapError("BadDelta", "delta must be 4 or 5");
    if (m.vertex_count < 1 || m.companion_count < 1)
        throw MapError("BadCounts", "need at least one vertex on each side");
    if (static_cast<int>(m.signs.size()) != m.vertex_count ||
        static_cast<int>(m.rotation.size()) != m.vertex_count)
        throw MapError("BadCounts", "signs/rotation size disagrees with vertex_count");
    for (int s : m.signs)
        if (s != 1 && s != -1) throw MapError("BadSign", "vertex signs must be +1 or -1");
    for (int v = 0; v < m.vertex_count; ++v) {
        if (static_cast<int>(m.rotation[v].size()) != m.valence())
            throw MapError("ValenceMismatch",
                           "vertex " + std::to_string(v) + " has " +
                               std::to_string(m.rotation[v].size()) + " slots, expected " +
                               std::to_string(m.valence()));
        for (const Slot& s : m.rotation[v])
            if (s.label < 1 || s.label > m.companion_count)
                throw MapError("BadLabel", "label outside 1..m at vertex " + std::to_string(v));
        if (!is_standard_label_word(label_word(m, v), m.companion_count, m.delta))
            throw MapError("LabelWord",
                           "labels at vertex " + std::to_string(v) +
                               " do not read as (1..m) repeated delta times");
    }
    auto ed = m.edge_darts();  // validates the edge pairing
    (void)ed;

    FaceSet fs = trace_faces(m);
    int n = m.vertex_count;
    int e = m.edge_count();
    int c = static_cast<int>(fs.faces.size());

    auto comp = vertex_components(m);
    int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;

    if (m.annulus_marks.empty()) {
        if (ncomp != 1)
            throw MapError("NonToral", "disconnected graph needs annulus designation");
        if (n - e + c != 0)
            throw MapError("NonToral", "capped Euler characteristic " +
                                           std::to_string(n - e + c) + ", expected 0");
    } else {
        // Each component must be a planar ribbon contributing one annulus.
        std::vector<int> cn(ncomp, 0), ce(ncomp, 0), cc(ncomp, 0), cmarks(ncomp, 0);
        for (int v = 0; v < n; ++v) cn[comp[v]]++;
        auto edarts = m.edge_darts();
        for (int i = 0; i < e; ++i) ce[comp[edarts[i][0].vertex]]++;
        for (const Face& f : fs.faces) {
            int k = comp[f.darts.front().vertex];
            cc[k]++;
            if (!f.disk) cmarks[k]++;
        }
        for (int k = 0; k < ncomp; ++k) {
            if (cn[k] - ce[k] + cc[k] != 2)
                throw MapError("NonToral",
                               "component with annulus designation is not planar");
            if (cmarks[k] != 2)
                throw MapError("NonToral",
                               "component must designate exactly two annulus ends");
        }
    }
    for (const Face& f : fs.faces)
        if (f.disk && f.size() == 1)
            throw MapError("Monogon", "disk face with a single edge side");
}

FaceSet validate_and_faces(const CombinatorialMap& m) {
    validate_map(m);
    return trace_faces(m);
}

int slot_distance(const CombinatorialMap& m, const Dart& p, const Dart& q) {
    if (p.vertex != q.vertex)
        throw MapError("BadDistance", "slot_distance requires slots of one vertex");
    int n = static_cast<int>(m.rotation[p.vertex].size());
    // measured along the direction induced by the vertex orientation, which
    // the stored order follows for positive vertices and opposes for
    // negative ones
    int d = m.signs[p.vertex] > 0 ? q.slot - p.slot : p.slot - q.slot;
    return (d % n + n) % n;
}

int sign_sum(const CombinatorialMap& m) {
    return std::accumulate(m.signs.begin(), m.signs.end(), 0);
}

}  // namespace fg
