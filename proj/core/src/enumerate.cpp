#include "fgraph/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "fgraph/canonical.hpp"
#include "fgraph/families.hpp"

namespace fg {

namespace {

// Cyclic normal form helpers for the display notation.

std::vector<int> max_dihedral(std::vector<int> seq) {
    if (seq.empty()) return seq;
    std::vector<int> best = seq;
    for (int refl = 0; refl < 2; ++refl) {
        for (size_t r = 0; r < seq.size(); ++r) {
            std::rotate(seq.begin(), seq.begin() + 1, seq.end());
            best = std::max(best, seq);
        }
        std::reverse(seq.begin(), seq.end());
    }
    return best;
}

std::string render(bool two_vertex, int sign_product, int rho, const std::vector<int>& w) {
    std::string out;
    if (two_vertex) out += sign_product > 0 ? '+' : '-';
    out += '(';
    if (two_vertex && rho > 0) out += std::to_string(rho) + ";";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    out += ')';
    return out;
}

}  // namespace

std::string normalize_shape(const ShapeDescriptor& shape) {
    if (!shape.two_vertex) return render(false, 1, 0, max_dihedral(shape.weights));
    if (shape.rho == 0) {
        // No loop blocks: zero-weight families have no position, so keep only
        // the nonzero cycle and pad.
        std::vector<int> nz;
        for (int w : shape.weights)
            if (w > 0) nz.push_back(w);
        nz = max_dihedral(nz);
        nz.resize(4, 0);
        return render(true, shape.sign_product, 0, nz);
    }
    // Loop blocks separate (a1,a2) from (a3,a4); the symmetries preserving
    // that structure are the half turn and the two reflections.
    const auto& a = shape.weights;
    std::vector<std::vector<int>> orbit = {
        {a[0], a[1], a[2], a[3]},
        {a[2], a[3], a[0], a[1]},
        {a[1], a[0], a[3], a[2]},
        {a[3], a[2], a[1], a[0]},
    };
    return render(true, shape.sign_product, shape.rho,
                  *std::max_element(orbit.begin(), orbit.end()));
}

std::string shape_of(const CombinatorialMap& m) {
    FamilyData fd = compute_families(m);
    ShapeDescriptor sh;
    sh.delta = m.delta;
    sh.companion_count = m.companion_count;

    // Families met along vertex 0, wrap-merged: each as (family index, loop?).
    std::vector<int> order;
    for (const Slot& s : m.rotation[0]) {
        int f = fd.family_of_edge[s.edge];
        if (order.empty() || order.back() != f) order.push_back(f);
    }
    if (order.size() > 1 && order.front() == order.back()) order.pop_back();

    if (m.vertex_count == 1) {
        sh.two_vertex = false;
        std::vector<int> seen;
        std::vector<int> w;
        for (int f : order)
            if (std::find(seen.begin(), seen.end(), f) == seen.end()) {
                seen.push_back(f);
                w.push_back(fd.families[f].weight());
            }
        w.resize(3, 0);
        sh.weights = w;
        return normalize_shape(sh);
    }

    sh.two_vertex = true;
    sh.sign_product = m.signs[0] * m.signs[1];
    int loop_fam = -1;
    for (size_t f = 0; f < fd.families.size(); ++f)
        if (fd.families[f].kind == Family::Kind::loop && fd.families[f].tail_vertex == 0)
            loop_fam = static_cast<int>(f);
    sh.rho = loop_fam < 0 ? 0 : fd.families[loop_fam].weight();

    std::vector<int> w;
    if (loop_fam < 0) {
        std::vector<int> seen;
        for (int f : order)
            if (fd.families[f].kind != Family::Kind::loop &&
                std::find(seen.begin(), seen.end(), f) == seen.end()) {
                seen.push_back(f);
                w.push_back(fd.families[f].weight());
            }
        w.resize(4, 0);
    } else {
        // Split the non-loop families by the gap between the two loop blocks.
        std::vector<std::vector<int>> gaps(2);
        int gap = -1;
        for (int f : order) {
            if (f == loop_fam) { ++gap; continue; }
            if (gap >= 0 && gap < 2 && fd.families[f].kind != Family::Kind::loop)
                gaps[gap].push_back(fd.families[f].weight());
        }
        for (auto& g : gaps) g.resize(2, 0);
        w = {gaps[0][0], gaps[0][1], gaps[1][0], gaps[1][1]};
    }
    sh.weights = w;
    return normalize_shape(sh);
}

std::vector<CombinatorialMap> enumerate_graphs(int delta, int n, int m, SignPattern signs) {
    if (n > 2 || m > 2 || n < 1 || m < 1)
        throw MapError("UnsupportedParameters",
                       "enumeration grammar covers n, m in {1, 2} only");
    std::vector<CombinatorialMap> out;
    std::set<std::string> seen;
    auto emit = [&](const ShapeDescriptor& sh) {
        CombinatorialMap map;
        try {
            map = expand_shape(sh);
            validate_map(map);
        } catch (const MapError&) {
            return;  // shape has no valid embedding with these labels
        }
        if (seen.insert(canonical_code(map)).second) out.push_back(std::move(map));
    };

    int val = delta * m;
    if (n == 1) {
        if (signs == SignPattern::antiparallel) return out;
        if (val % 2) return out;  // loops pair the slots
        int half = val / 2;
        for (int b1 = half; b1 >= 0; --b1)
            for (int b2 = half - b1; b2 >= 0; --b2) {
                ShapeDescriptor sh;
                sh.two_vertex = false;
                sh.delta = delta;
                sh.companion_count = m;
                sh.weights = {b1, b2, half - b1 - b2};
                emit(sh);
            }
        return out;
    }

    for (int sp : {1, -1}) {
        if (signs == SignPattern::parallel && sp < 0) continue;
        if (signs == SignPattern::antiparallel && sp > 0) continue;
        for (int rho = 0; 2 * rho <= val; ++rho) {
            int rest = val - 2 * rho;
            for (int a1 = rest; a1 >= 0; --a1)
                for (int a2 = rest - a1; a2 >= 0; --a2)
                    for (int a3 = rest - a1 - a2; a3 >= 0; --a3)
                        for (int s1 = 0; s1 < m; ++s1) {
                            ShapeDescriptor sh;
                            sh.two_vertex = true;
                            sh.sign_product = sp;
                            sh.rho = rho;
                            sh.delta = delta;
                            sh.companion_count = m;
                            sh.weights = {a1, a2, a3, rest - a1 - a2 - a3};
                            sh.s1 = s1;
                            emit(sh);
                        }
        }
    }
    return out;
}

namespace {

bool filter_matches(const std::string& lemma_id, const std::string& disabled) {
    return lemma_id == disabled ||
           (lemma_id.size() > disabled.size() &&
            lemma_id.compare(0, disabled.size(), disabled) == 0 &&
            lemma_id[disabled.size()] == '/');
}

bool is_disabled(const std::string& lemma_id, const std::vector<std::string>& disabled) {
    return std::any_of(disabled.begin(), disabled.end(),
                       [&](const std::string& d) { return filter_matches(lemma_id, d); });
}

bool accepted_under(const FilterReport& rep, const std::vector<std::string>& disabled) {
    return std::none_of(rep.verdicts.begin(), rep.verdicts.end(),
                        [&](const FilterVerdict& v) {
                            return v.status == FilterStatus::fail &&
                                   !is_disabled(v.lemma_id, disabled);
                        });
}

bool all_parallel_map(const CombinatorialMap& m) {
    for (int e = 0; e < m.edge_count(); ++e)
        if (m.edge_sign(e) < 0) return false;
    return true;
}

int thread_budget(int configured) {
    if (configured > 0) return configured;
    if (const char* env = std::getenv("FG_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

SurvivorList search(const SearchConfig& config_in) {
    SearchConfig config = config_in;
    if (config.n1 > config.n2) std::swap(config.n1, config.n2);
    SurvivorList result;
    result.config = config;

    auto left = enumerate_graphs(config.delta, config.n1, config.n2);
    auto right = config.n1 == config.n2
                     ? left
                     : enumerate_graphs(config.delta, config.n2, config.n1);

    // Candidate shape pairs, unordered when the two sides draw from one pool.
    std::vector<std::pair<int, int>> tasks;
    for (size_t i = 0; i < left.size(); ++i)
        for (size_t j = config.n1 == config.n2 ? i : 0; j < right.size(); ++j)
            tasks.push_back({static_cast<int>(i), static_cast<int>(j)});

    std::mutex mu;
    std::vector<SurvivorEntry> entries;
    const auto& dis = config.disabled;

    auto prefilter_fails = [&](const CombinatorialMap& m, const CombinatorialMap& other,
                               const char* side) {
        bool cp = all_parallel_map(other);
        bool cyc = cp && other.vertex_count >= 3;
        FilterVerdict v = filter_congruence(m);
        if (v.status == FilterStatus::fail && !is_disabled(v.lemma_id + side, dis)) return true;
        v = filter_coloop_cycles(m, cyc);
        if (v.status == FilterStatus::fail && !is_disabled(v.lemma_id + side, dis)) return true;
        v = filter_size_bounds(m, cp);
        if (v.status == FilterStatus::fail && !is_disabled(v.lemma_id + side, dis)) return true;
        return false;
    };

    auto process = [&](int ti) {
        const CombinatorialMap& m1 = left[tasks[ti].first];
        const CombinatorialMap& m2 = right[tasks[ti].second];
        if (m1.companion_count != m2.vertex_count || m2.companion_count != m1.vertex_count)
            return;
        if (prefilter_fails(m1, m2, "/G1") || prefilter_fails(m2, m1, "/G2")) return;
        auto pairings = enumerate_pairings(m1, m2);
        int index = 0;
        for (const GraphPair& p : pairings) {
            FilterReport rep = run_battery(p);
            if (!accepted_under(rep, dis)) { ++index; continue; }
            SurvivorEntry e;
            e.shape1 = shape_of(m1);
            e.shape2 = shape_of(m2);
            if (e.shape2 < e.shape1) std::swap(e.shape1, e.shape2);
            e.code = canonical_code(m1) + "|" + canonical_code(m2) + "|J" +
                     std::to_string(p.jumping_number) + "#" + std::to_string(index);
            e.pair = p;
            e.report = std::move(rep);
            std::lock_guard<std::mutex> lock(mu);
            entries.push_back(std::move(e));
            ++index;
        }
    };

    int nthreads = std::min<int>(thread_budget(config.threads),
                                 std::max<size_t>(tasks.size(), 1));
    if (nthreads <= 1) {
        for (size_t t = 0; t < tasks.size(); ++t) process(static_cast<int>(t));
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (size_t i = next++; i < tasks.size(); i = next++)
                    process(static_cast<int>(i));
            });
        for (auto& th : pool) th.join();
    }

    std::sort(entries.begin(), entries.end(),
              [](const SurvivorEntry& a, const SurvivorEntry& b) { return a.code < b.code; });
    entries.erase(std::unique(entries.begin(), entries.end(),
                              [](const SurvivorEntry& a, const SurvivorEntry& b) {
                                  return a.code == b.code;
                              }),
                  entries.end());
    result.entries = std::move(entries);
    return result;
}

FixtureDiff diff_fixture(const SurvivorList& survivors, const nlohmann::json& fixture) {
    if (!fixture.is_array())
        throw MapError("MalformedFixture", "fixture must be an array of shape pairs");
    auto key = [](std::string a, std::string b) {
        if (b < a) std::swap(a, b);
        return a + " / " + b;
    };
    std::set<std::string> want;
    for (const auto& row : fixture) {
        if (!row.is_object() || !row.contains("shape1") || !row.contains("shape2"))
            throw MapError("MalformedFixture", "fixture rows need shape1 and shape2");
        want.insert(key(row.at("shape1").get<std::string>(),
                        row.at("shape2").get<std::string>()));
    }
    std::set<std::string> have;
    for (const SurvivorEntry& e : survivors.entries) have.insert(key(e.shape1, e.shape2));

    FixtureDiff diff;
    for (const std::string& k : want)
        if (!have.count(k)) diff.missing.push_back(k);
    for (const std::string& k : have)
        if (!want.count(k)) diff.extra.push_back(k);
    return diff;
}

}  // namespace fg
