#include "fgraph/scharlemann.hpp"

#include <algorithm>
#include <set>

namespace fg {

std::vector<ScharlemannCycle> find_scharlemann(const CombinatorialMap& m) {
    auto ed = m.edge_darts();
    FaceSet fs = trace_faces(m);
    FamilyData fd = compute_families(m);
    int mm = m.companion_count;

    auto labels_of = [&](int e) {
        return std::set<int>{m.label_at(ed[e][0]), m.label_at(ed[e][1])};
    };

    std::vector<ScharlemannCycle> out;
    for (int fi = 0; fi < static_cast<int>(fs.faces.size()); ++fi) {
        const Face& f = fs.faces[fi];
        if (!f.disk) continue;
        std::set<int> edges_set, labels;
        bool all_positive = true;
        for (const Dart& d : f.darts) {
            int e = m.at(d).edge;
            edges_set.insert(e);
            if (m.edge_sign(e) != 1) all_positive = false;
            labels.insert(m.label_at(ed[e][0]));
            labels.insert(m.label_at(ed[e][1]));
        }
        if (!all_positive || labels.size() > 2) continue;
        int i, j;
        if (labels.size() == 1) {
            if (mm != 1) continue;  // a single label only pairs with itself
            i = j = 1;
        } else {
            auto it = labels.begin();
            i = *it;
            j = *std::next(it);
            bool consecutive = (i % mm) + 1 == j || (j % mm) + 1 == i;
            if (!consecutive) continue;
            if ((j % mm) + 1 == i) std::swap(i, j);  // order as {i, i+1}
        }

        ScharlemannCycle sc;
        sc.face = fi;
        for (const Dart& d : f.darts) sc.edges.push_back(m.at(d).edge);
        sc.label_pair = {i, j};

        // Extended configuration: every cycle edge has a parallel neighbour
        // outside the cycle carrying the flanking label pair {i-1, i+2}.
        int lo = (i - 2 + mm) % mm + 1;
        int hi = j % mm + 1;
        std::set<int> flank{lo, hi};
        bool extended = true;
        for (int e : sc.edges) {
            const Family& fam = fd.families[fd.family_of_edge[e]];
            auto pos = std::find(fam.edges.begin(), fam.edges.end(), e);
            bool found = false;
            if (pos != fam.edges.begin() &&
                !edges_set.count(*(pos - 1)) && labels_of(*(pos - 1)) == flank)
                found = true;
            if (pos + 1 != fam.edges.end() &&
                !edges_set.count(*(pos + 1)) && labels_of(*(pos + 1)) == flank)
                found = true;
            if (!found) {
                extended = false;
                break;
            }
        }
        sc.extended = extended && mm > 2;
        out.push_back(std::move(sc));
    }
    return out;
}

}  // namespace fg
