#include "fgraph/shape.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace fg {

int ShapeDescriptor::valence() const {
    int s = std::accumulate(weights.begin(), weights.end(), 0);
    return two_vertex ? 2 * rho + s : 2 * s;
}

std::string ShapeDescriptor::str() const {
    std::ostringstream os;
    if (two_vertex) os << (sign_product > 0 ? '+' : '-');
    os << '(';
    if (two_vertex && rho > 0) os << rho << ';';
    for (size_t i = 0; i < weights.size(); ++i) {
        if (i) os << ',';
        os << weights[i];
    }
    os << ')';
    return os.str();
}

ShapeDescriptor parse_shape(const std::string& text) {
    ShapeDescriptor sh;
    size_t i = 0;
    auto fail = [&](const std::string& why) -> void {
        throw MapError("ShapeSyntax", why + " in '" + text + "'");
    };
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip_ws();
    int sign = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        sign = text[i] == '+' ? 1 : -1;
        ++i;
    }
    skip_ws();
    if (i >= text.size() || text[i] != '(') fail("expected '('");
    ++i;
    auto read_int = [&]() -> int {
        skip_ws();
        size_t j = i;
        while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
        if (j == i) fail("expected a number");
        int v = std::stoi(text.substr(i, j - i));
        i = j;
        skip_ws();
        return v;
    };
    std::vector<int> nums;
    bool has_rho = false;
    int rho = 0;
    nums.push_back(read_int());
    if (i < text.size() && text[i] == ';') {
        has_rho = true;
        rho = nums[0];
        nums.clear();
        ++i;
        nums.push_back(read_int());
    }
    while (i < text.size() && text[i] == ',') {
        ++i;
        nums.push_back(read_int());
    }
    if (i >= text.size() || text[i] != ')') fail("expected ')'");
    ++i;

    if (!has_rho && sign == 0 && nums.size() == 3) {
        sh.two_vertex = false;
        sh.sign_product = 1;
        sh.weights = nums;
    } else if (nums.size() == 4) {
        sh.two_vertex = true;
        sh.sign_product = sign == 0 ? -1 : sign;
        sh.rho = rho;
        sh.weights = nums;
    } else {
        fail("expected 3 loop weights or 4 family weights");
    }

    skip_ws();
    if (i < text.size() && text[i] == '@') {
        ++i;
        bool have_delta = false, have_m = false;
        while (i < text.size()) {
            skip_ws();
            size_t j = i;
            while (j < text.size() && (std::isalnum((unsigned char)text[j]))) ++j;
            std::string key = text.substr(i, j - i);
            i = j;
            skip_ws();
            if (i >= text.size() || text[i] != '=') fail("expected '=' after '" + key + "'");
            ++i;
            int val = read_int();
            if (key == "delta") { sh.delta = val; have_delta = true; }
            else if (key == "m") { sh.companion_count = val; have_m = true; }
            else if (key == "s1") sh.s1 = val;
            else fail("unknown option '" + key + "'");
            if (i < text.size() && (text[i] == ',' || text[i] == ';')) { ++i; continue; }
            break;
        }
        if (have_delta && !have_m) {
            if (sh.valence() % sh.delta != 0) fail("valence not divisible by delta");
            sh.companion_count = sh.valence() / sh.delta;
        } else if (have_m && !have_delta) {
            if (sh.valence() % sh.companion_count != 0) fail("valence not divisible by m");
            sh.delta = sh.valence() / sh.companion_count;
        }
        if (!have_delta && !have_m) infer_parameters(sh);
        skip_ws();
        if (i != text.size()) fail("trailing characters");
    } else {
        if (i != text.size()) fail("trailing characters");
        infer_parameters(sh);
    }
    return sh;
}

void infer_parameters(ShapeDescriptor& shape) {
    int val = shape.valence();
    std::vector<std::pair<int, int>> options;
    for (int d : {4, 5})
        if (val % d == 0 && val / d >= 1) options.push_back({d, val / d});
    if (options.empty())
        throw MapError("ValenceMismatch",
                       "valence " + std::to_string(val) + " fits neither delta=4 nor 5");
    if (options.size() > 1)
        throw MapError("ShapeSyntax",
                       "valence " + std::to_string(val) +
                           " is ambiguous, specify @delta=... or @m=...");
    shape.delta = options[0].first;
    shape.companion_count = options[0].second;
}

namespace detail {

const TwoVertexConvention kTwoVertexConvention = {{0, 1, 2, 3}, true, true};

namespace {

// Assign labels to every slot of the map from the standard label word:
// position k at a vertex of sign +1 carries ((off + k) mod m) + 1, at a
// vertex of sign -1 ((off - k) mod m) + 1.
void assign_labels(CombinatorialMap& m, const std::vector<int>& offsets) {
    int mm = m.companion_count;
    for (int v = 0; v < m.vertex_count; ++v) {
        for (int k = 0; k < (int)m.rotation[v].size(); ++k) {
            int raw = m.signs[v] > 0 ? offsets[v] + k : offsets[v] - k;
            m.rotation[v][k].label = ((raw % mm) + mm) % mm + 1;
        }
    }
}

// Mark annulus ends when the shape does not fill the torus: the circuits
// that are not bigons between consecutive members of one family.
void designate_annuli(CombinatorialMap& m,
                      const std::vector<std::vector<int>>& family_edges) {
    m.annulus_marks.clear();
    FaceSet fs = trace_faces(m);
    int chi = m.vertex_count - m.edge_count() + (int)fs.faces.size();
    if (chi == 0) return;  // cellular, nothing to designate

    std::vector<int> family_of(m.edge_count(), -1);
    for (int f = 0; f < (int)family_edges.size(); ++f)
        for (int e : family_edges[f]) family_of[e] = f;
    auto is_intended_bigon = [&](const Face& face) {
        if (face.size() != 2) return false;
        int e1 = m.at(face.darts[0]).edge, e2 = m.at(face.darts[1]).edge;
        if (e1 == e2) return false;
        return family_of[e1] == family_of[e2];
    };
    std::vector<const Face*> candidates;
    for (const Face& f : fs.faces)
        if (!is_intended_bigon(f)) candidates.push_back(&f);
    // Two leftover circuits bound the complement annulus directly. With more,
    // only the monogon circuits along the outermost loops are annulus ends;
    // the rest are honest disk faces. Validation rejects wrong designations.
    if ((int)candidates.size() > 2) {
        std::erase_if(candidates, [](const Face* f) { return f->size() != 1; });
    }
    for (const Face* f : candidates) m.annulus_marks.push_back(f->darts.front());
}

}  // namespace

CombinatorialMap build_one_vertex(const ShapeDescriptor& shape) {
    CombinatorialMap m;
    m.delta = shape.delta;
    m.vertex_count = 1;
    m.companion_count = shape.companion_count;
    m.signs = {1};

    std::vector<std::vector<int>> fam(3);
    int next = 0;
    for (int f = 0; f < 3; ++f)
        for (int t = 0; t < shape.weights[f]; ++t) fam[f].push_back(next++);

    std::vector<Slot> rot;
    for (int f = 0; f < 3; ++f)
        for (int e : fam[f]) rot.push_back({e, 0, 0});
    for (int f = 0; f < 3; ++f)
        for (auto it = fam[f].rbegin(); it != fam[f].rend(); ++it)
            rot.push_back({*it, 1, 0});
    m.rotation = {std::move(rot)};
    assign_labels(m, {0});
    designate_annuli(m, fam);
    return m;
}

CombinatorialMap build_two_vertex(const ShapeDescriptor& shape, int offset,
                                  const TwoVertexConvention& conv) {
    CombinatorialMap m;
    m.delta = shape.delta;
    m.vertex_count = 2;
    m.companion_count = shape.companion_count;
    m.signs = {1, shape.sign_product > 0 ? 1 : -1};

    int rho = shape.rho;
    std::vector<int> loops1(rho), loops2(rho);
    std::iota(loops1.begin(), loops1.end(), 0);
    std::iota(loops2.begin(), loops2.end(), rho);
    std::vector<std::vector<int>> fam(4);
    int next = 2 * rho;
    for (int f = 0; f < 4; ++f)
        for (int t = 0; t < shape.weights[f]; ++t) fam[f].push_back(next++);

    auto push_block = [](std::vector<Slot>& rot, const std::vector<int>& ids, int end,
                         bool rev) {
        if (!rev)
            for (int e : ids) rot.push_back({e, end, 0});
        else
            for (auto it = ids.rbegin(); it != ids.rend(); ++it) rot.push_back({*it, end, 0});
    };

    std::vector<Slot> r1, r2;
    // u1: loop first ends, A1, A2, loop second ends, A3, A4
    push_block(r1, loops1, 0, false);
    push_block(r1, fam[0], 0, false);
    push_block(r1, fam[1], 0, false);
    push_block(r1, loops1, 1, conv.loop_reverse);
    push_block(r1, fam[2], 0, false);
    push_block(r1, fam[3], 0, false);
    // u2: its own loops, then the non-loop families in convention order
    push_block(r2, loops2, 0, false);
    push_block(r2, fam[conv.perm[0]], 1, conv.u2_reverse);
    push_block(r2, fam[conv.perm[1]], 1, conv.u2_reverse);
    push_block(r2, loops2, 1, conv.loop_reverse);
    push_block(r2, fam[conv.perm[2]], 1, conv.u2_reverse);
    push_block(r2, fam[conv.perm[3]], 1, conv.u2_reverse);
    m.rotation = {std::move(r1), std::move(r2)};

    assign_labels(m, {0, offset});

    std::vector<std::vector<int>> all_fams = fam;
    for (int l : loops1) all_fams.push_back({l});
    for (int l : loops2) all_fams.push_back({l});
    // loops at one vertex form a single family
    std::vector<std::vector<int>> fams_for_annuli = {fam[0], fam[1], fam[2], fam[3],
                                                     loops1, loops2};
    designate_annuli(m, fams_for_annuli);
    return m;
}

}  // namespace detail

namespace {

// Transition of the family's members from vertex u1 to u2, or nullopt when
// the member label differences disagree (positive families).
std::optional<int> family_transition(const CombinatorialMap& m,
                                     const std::vector<std::array<Dart, 2>>& ed,
                                     int first_edge, int count) {
    std::optional<int> s;
    for (int e = first_edge; e < first_edge + count; ++e) {
        const Dart& t = ed[e][0];
        const Dart& h = ed[e][1];
        int diff = (((m.label_at(h) - m.label_at(t)) % m.companion_count) +
                    m.companion_count) % m.companion_count;
        if (!s) s = diff;
        else if (*s != diff) return std::nullopt;
    }
    return s;
}

}  // namespace

CombinatorialMap expand_shape(const ShapeDescriptor& shape) {
    for (int w : shape.weights)
        if (w < 0) throw MapError("ValenceMismatch", "negative family weight");
    if (shape.two_vertex && shape.rho < 0)
        throw MapError("ValenceMismatch", "negative loop weight");
    int val = shape.valence();
    if (val != shape.delta * shape.companion_count)
        throw MapError("ValenceMismatch",
                       "weights sum to valence " + std::to_string(val) + ", expected " +
                           std::to_string(shape.delta * shape.companion_count));
    if (!shape.two_vertex) {
        if (shape.weights.size() != 3)
            throw MapError("ShapeSyntax", "one-vertex shape needs 3 weights");
        CombinatorialMap m = detail::build_one_vertex(shape);
        validate_map(m);
        return m;
    }
    if (shape.weights.size() != 4)
        throw MapError("ShapeSyntax", "two-vertex shape needs 4 weights");

    int mm = shape.companion_count;
    int want_s1 = shape.s1.value_or(mm > 1 ? 1 : 0);

    // The relative label offset of u2 is the only label freedom; pick the
    // offset realizing the requested transition of the first nonzero family,
    // then check any explicitly constrained transitions.
    int first_nonzero = -1;
    for (int f = 0; f < 4; ++f)
        if (shape.weights[f] > 0) { first_nonzero = f; break; }

    for (int off = 0; off < mm; ++off) {
        // All-loop shapes have no transition to match; s1 names the offset.
        if (first_nonzero < 0 && shape.s1 && off != ((want_s1 % mm) + mm) % mm) continue;
        CombinatorialMap m =
            detail::build_two_vertex(shape, off, detail::kTwoVertexConvention);
        auto ed = m.edge_darts();
        if (first_nonzero >= 0) {
            int base = 2 * shape.rho;
            for (int f = 0; f < first_nonzero; ++f) base += shape.weights[f];
            auto s = family_transition(m, ed, base, shape.weights[first_nonzero]);
            if (s && ((*s - want_s1) % mm + mm) % mm != 0) continue;
            // Mixed member transitions (positive family, m > 2) cannot pin
            // the offset, so s1 names the offset directly as in the all-loop
            // case.
            if (!s && shape.s1 && off != ((want_s1 % mm) + mm) % mm) continue;
        }
        bool ok = true;
        if (!shape.transitions.empty()) {
            int base = 2 * shape.rho;
            for (int f = 0; f < 4 && ok; ++f) {
                if (f < (int)shape.transitions.size() && shape.transitions[f] &&
                    shape.weights[f] > 0) {
                    auto s = family_transition(m, ed, base, shape.weights[f]);
                    if (!s || ((*s - *shape.transitions[f]) % mm + mm) % mm != 0) ok = false;
                }
                base += shape.weights[f];
            }
        }
        if (!shape.start_offsets.empty()) {
            int base = 2 * shape.rho;
            for (int f = 0; f < 4 && ok; ++f) {
                if (f < (int)shape.start_offsets.size() && shape.start_offsets[f] &&
                    shape.weights[f] > 0) {
                    if (m.label_at(ed[base][0]) != *shape.start_offsets[f]) ok = false;
                }
                base += shape.weights[f];
            }
        }
        if (!ok) continue;
        validate_map(m);
        return m;
    }
    throw MapError("LabelConflict",
                   "no label offset realizes the requested transitions for " + shape.str());
}

}  // namespace fg
