#pragma once

#include <string>
#include <vector>

#include "fgraph/map.hpp"
#include "fgraph/pairing.hpp"

namespace fg {

enum class FilterStatus { pass, fail, not_applicable };

// One named predicate's outcome. A fail always carries a witness that
// suffices to re-verify the violation against the input.
struct FilterVerdict {
    std::string lemma_id;
    FilterStatus status = FilterStatus::pass;
    std::string witness;
};

struct FilterReport {
    std::vector<FilterVerdict> verdicts;  // ordered by lemma_id
    bool accepted = true;                 // no fail verdict
};

const char* status_str(FilterStatus s);

// Pair predicates take the validated correspondence structure.
FilterVerdict filter_parity(const GraphPair& pair, const PairStructure& st);
FilterVerdict filter_biparallel(const GraphPair& pair, const PairStructure& st);
FilterVerdict filter_sign_sum(const GraphPair& pair);
FilterVerdict filter_distance(const GraphPair& pair, const PairStructure& st);
FilterVerdict filter_equidistance(const GraphPair& pair, const PairStructure& st);
FilterVerdict filter_jumping(const GraphPair& pair, const PairStructure& st);
// Needs only the two maps; callable on a pair with no point data.
FilterVerdict filter_kleinian(const GraphPair& pair);

// Single-map predicates; companion positivity means all companion vertices
// carry one sign. companion_signs, when available, refines the per-sign
// label count of the Scharlemann check.
FilterVerdict filter_size_bounds(const CombinatorialMap& m, bool companion_positive);
FilterVerdict filter_scharlemann_labels(const CombinatorialMap& m,
                                        const std::vector<int>* companion_signs = nullptr);
FilterVerdict filter_coloop_cycles(const CombinatorialMap& m, bool companion_positive);
FilterVerdict filter_congruence(const CombinatorialMap& m);

// Validate the pair and run every predicate on it and on both maps;
// accepted iff nothing fails. not_applicable never rejects.
FilterReport run_battery(const GraphPair& pair);

}  // namespace fg
