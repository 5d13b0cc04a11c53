#pragma once

#include <string>
#include <vector>

#include "fgraph/map.hpp"

namespace fg {

struct AbelianPresentation {
    std::vector<std::string> generators;
    std::vector<std::vector<long long>> relations;  // rows over the generators
};

struct InvariantFactors {
    int free_rank = 0;
    std::vector<long long> torsion;  // divisor chain, each >= 2

    friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

// Invariant factors of the cokernel of the matrix (columns = generators).
// The matrix may be empty (free group on its width).
InvariantFactors smith_normal_form(std::vector<std::vector<long long>> a, int width);

// Quotient of the presented group by the extra relations, over the integers
// (modulus 0) or over the field with two elements (modulus 2; the dimension
// is reported as free_rank).
InvariantFactors presentation_quotient(const AbelianPresentation& pres,
                                       const std::vector<std::vector<long long>>& extra,
                                       int modulus);

// p/q in lowest terms with q >= 0; q = 0 encodes the infinite slope 1/0.
struct SlopeFraction {
    long long p = 0;
    long long q = 1;

    friend bool operator==(const SlopeFraction&, const SlopeFraction&) = default;
};

SlopeFraction make_slope(long long p, long long q);
SlopeFraction parse_slope(const std::string& text);  // "p/q" or "p"
std::string slope_str(const SlopeFraction& s);

// minimal geometric intersection number |p q' - p' q|
long long slope_distance(const SlopeFraction& a, const SlopeFraction& b);

// the n-fold twist along a curve of linking number w: p/q -> (p - w^2 n q)/q
SlopeFraction twist_slope(const SlopeFraction& r0, long long w, long long n);

}  // namespace fg
