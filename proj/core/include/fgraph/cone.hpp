#pragma once

#include <numeric>

#include "fgraph/families.hpp"

namespace fg {

// Exact multiple of pi.
struct PiFraction {
    long long num = 0;
    long long den = 1;

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    friend bool operator==(const PiFraction&, const PiFraction&) = default;
};

// Per-vertex cone angle of the reduced map: each corner of a face with |s|
// sides contributes pi * (1 - 2/|s|). Asserts the flat-torus identity
// sum over vertices of (2 pi - theta(v)) = 0. Throws NonDiskFace when the
// reduced map has a non-disk face (capped Euler characteristic nonzero).
std::vector<PiFraction> cone_angle_audit(const ReducedGraph& reduced);

}  // namespace fg
