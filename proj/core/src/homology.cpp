#include "fgraph/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace fg {

namespace {

using Matrix = std::vector<std::vector<long long>>;

long long checked_mul(long long a, long long b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN)
        throw MapError("Overflow", "integer overflow in matrix reduction");
    return static_cast<long long>(r);
}

long long checked_sub(long long a, long long b) {
    __int128 r = static_cast<__int128>(a) - b;
    if (r > INT64_MAX || r < INT64_MIN)
        throw MapError("Overflow", "integer overflow in matrix reduction");
    return static_cast<long long>(r);
}

}  // namespace

InvariantFactors smith_normal_form(Matrix a, int width) {
    int rows = static_cast<int>(a.size());
    for (const auto& r : a)
        if (static_cast<int>(r.size()) != width)
            throw MapError("WidthMismatch", "relation row width disagrees");

    std::vector<long long> diag;
    int top = 0, left = 0;
    while (top < rows && left < width) {
        // find the entry of smallest absolute value in the working block
        int pr = -1, pc = -1;
        long long best = 0;
        for (int i = top; i < rows; ++i)
            for (int j = left; j < width; ++j) {
                long long v = a[i][j] < 0 ? -a[i][j] : a[i][j];
                if (v != 0 && (pr == -1 || v < best)) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (pr == -1) break;
        std::swap(a[top], a[pr]);
        for (int i = top; i < rows; ++i) std::swap(a[i][left], a[i][pc]);

        bool reduced = false;
        while (!reduced) {
            reduced = true;
            for (int i = top + 1; i < rows; ++i) {
                long long q = a[i][left] / a[top][left];
                if (q != 0)
                    for (int j = left; j < width; ++j)
                        a[i][j] = checked_sub(a[i][j], checked_mul(q, a[top][j]));
                if (a[i][left] != 0) {
                    std::swap(a[top], a[i]);
                    reduced = false;
                }
            }
            for (int j = left + 1; j < width; ++j) {
                long long q = a[top][j] / a[top][left];
                if (q != 0)
                    for (int i = top; i < rows; ++i)
                        a[i][j] = checked_sub(a[i][j], checked_mul(q, a[i][left]));
                if (a[top][j] != 0) {
                    for (int i = top; i < rows; ++i) std::swap(a[i][left], a[i][j]);
                    reduced = false;
                }
            }
            if (reduced) {
                // ensure the pivot divides the rest of the block
                long long p = a[top][left];
                for (int i = top + 1; i < rows && reduced; ++i)
                    for (int j = left + 1; j < width && reduced; ++j)
                        if (a[i][j] % p != 0) {
                            for (int jj = left; jj < width; ++jj)
                                a[top][jj] = checked_sub(a[top][jj], -a[i][jj]);
                            reduced = false;
                        }
            }
        }
        diag.push_back(a[top][left] < 0 ? -a[top][left] : a[top][left]);
        ++top;
        ++left;
    }

    // enforce the divisibility chain
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j) {
            long long g = std::gcd(diag[i], diag[j]);
            long long l = g == 0 ? 0 : diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }

    InvariantFactors out;
    out.free_rank = width - static_cast<int>(diag.size());
    for (long long d : diag)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

InvariantFactors presentation_quotient(const AbelianPresentation& pres,
                                       const Matrix& extra, int modulus) {
    int width = static_cast<int>(pres.generators.size());
    Matrix a = pres.relations;
    for (const auto& r : extra) a.push_back(r);
    for (const auto& r : a)
        if (static_cast<int>(r.size()) != width)
            throw MapError("WidthMismatch", "relation row width disagrees");

    if (modulus == 0) return smith_normal_form(std::move(a), width);
    if (modulus != 2)
        throw MapError("WidthMismatch", "only modulus 0 or 2 is supported");

    // rank over the two-element field
    for (auto& r : a)
        for (auto& x : r) x = ((x % 2) + 2) % 2;
    int rank = 0;
    for (int col = 0; col < width && rank < static_cast<int>(a.size()); ++col) {
        int pr = -1;
        for (int i = rank; i < static_cast<int>(a.size()); ++i)
            if (a[i][col]) { pr = i; break; }
        if (pr == -1) continue;
        std::swap(a[rank], a[pr]);
        for (int i = 0; i < static_cast<int>(a.size()); ++i)
            if (i != rank && a[i][col])
                for (int j = 0; j < width; ++j) a[i][j] ^= a[rank][j];
        ++rank;
    }
    InvariantFactors out;
    out.free_rank = width - rank;  // dimension over the field
    return out;
}

SlopeFraction make_slope(long long p, long long q) {
    if (p == 0 && q == 0)
        throw MapError("BadSlope", "0/0 is not a slope");
    if (q < 0) { p = -p; q = -q; }
    if (q == 0) return {1, 0};
    long long g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) { p /= g; q /= g; }
    return {p, q};
}

SlopeFraction parse_slope(const std::string& text) {
    size_t bar = text.find('/');
    try {
        if (bar == std::string::npos) return make_slope(std::stoll(text), 1);
        return make_slope(std::stoll(text.substr(0, bar)),
                          std::stoll(text.substr(bar + 1)));
    } catch (const std::logic_error&) {
        throw MapError("BadSlope", "cannot parse slope '" + text + "'");
    }
}

std::string slope_str(const SlopeFraction& s) {
    if (s.q == 0) return "inf";
    if (s.q == 1) return std::to_string(s.p);
    return std::to_string(s.p) + "/" + std::to_string(s.q);
}

long long slope_distance(const SlopeFraction& a, const SlopeFraction& b) {
    long long d = checked_sub(checked_mul(a.p, b.q), checked_mul(b.p, a.q));
    return d < 0 ? -d : d;
}

SlopeFraction twist_slope(const SlopeFraction& r0, long long w, long long n) {
    long long shift = checked_mul(checked_mul(w, w), checked_mul(n, r0.q));
    return make_slope(checked_sub(r0.p, shift), r0.q);
}

}  // namespace fg
