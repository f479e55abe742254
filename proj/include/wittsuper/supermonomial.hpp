#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <vector>

#include "wittsuper/errors.hpp"
#include "wittsuper/rational.hpp"

namespace wittsuper {

// Signature of the superalgebra A_{m,n}: m even variables t_1..t_m and n odd
// variables xi_1..xi_n.  The unified index range is 1..m+n, with xi_j aliased
// to t_{m+j} and d/d(xi_j) to d_{m+j}.
struct Signature {
    int m = 0;
    int n = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
    int total() const { return m + n; }
    bool is_even_index(int i) const { return i >= 1 && i <= m; }
    bool is_odd_index(int i) const { return i > m && i <= m + n; }
    void check_index(int i) const {
        if (i < 1 || i > m + n) fail(ErrorKind::IndexOutOfRange, "direction index " + std::to_string(i));
    }
};

inline void check_same_signature(const Signature& a, const Signature& b) {
    if (!(a == b))
        fail(ErrorKind::SignatureMismatch, "(" + std::to_string(a.m) + "," + std::to_string(a.n) + ") vs (" +
                                               std::to_string(b.m) + "," + std::to_string(b.n) + ")");
}

using OddSet = std::vector<int>;  // strictly increasing subset of {1..n}

inline bool is_sorted_strict(const OddSet& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

inline long inversions(const std::vector<int>& seq) {
    long inv = 0;
    for (size_t a = 0; a < seq.size(); ++a)
        for (size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b]) ++inv;
    return inv;
}

// tau(I,J): number of inversions of the concatenated sequence (sorted I,
// sorted J).  tau({},{}) = 0.  Requires I and J disjoint.
inline long tau(const OddSet& I, const OddSet& J) {
    for (int i : I)
        if (std::binary_search(J.begin(), J.end(), i))
            fail(ErrorKind::OverlappingSets, "tau on overlapping odd sets");
    long inv = 0;
    for (int i : I)
        for (int j : J)
            if (i > j) ++inv;
    return inv;
}

// Merges two disjoint odd sets, returning the sign (-1)^tau(I,J) of
// xi_I xi_J = sign * xi_{I u J}, or 0 if the sets overlap.
inline int merge_odd(const OddSet& I, const OddSet& J, OddSet& out) {
    out.clear();
    out.reserve(I.size() + J.size());
    long inv = 0;
    size_t a = 0, b = 0;
    while (a < I.size() && b < J.size()) {
        if (I[a] == J[b]) return 0;
        if (I[a] < J[b]) {
            out.push_back(I[a++]);
        } else {
            inv += static_cast<long>(I.size() - a);
            out.push_back(J[b++]);
        }
    }
    while (a < I.size()) out.push_back(I[a++]);
    while (b < J.size()) out.push_back(J[b++]);
    return (inv % 2 == 0) ? 1 : -1;
}

// Monomial t^alpha xi_I.  Exponents may be negative only in Laurent contexts;
// the owning polynomial enforces that.
struct SuperMonomial {
    std::vector<int> alpha;  // length m
    OddSet odd;              // subset of {1..n}

    int parity() const { return static_cast<int>(odd.size()) & 1; }
    long even_degree() const { return std::accumulate(alpha.begin(), alpha.end(), 0L); }
    long degree() const { return even_degree() + static_cast<long>(odd.size()); }
    bool is_one() const {
        return odd.empty() && std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 0; });
    }

    friend auto operator<=>(const SuperMonomial&, const SuperMonomial&) = default;
};

// Product of monomials; returns the sign (+1/-1) or 0 when the odd parts
// collide.
inline int mul_monomial(const SuperMonomial& x, const SuperMonomial& y, SuperMonomial& out) {
    out.alpha.resize(x.alpha.size());
    for (size_t i = 0; i < x.alpha.size(); ++i) out.alpha[i] = x.alpha[i] + y.alpha[i];
    return merge_odd(x.odd, y.odd, out.odd);
}

// d_i applied to a monomial.  For even i the coefficient is alpha_i; for odd
// i = m + j the variable xi_j is removed with sign (-1)^{#(odd entries < j)}.
// Returns the rational coefficient (0 if the derivative vanishes).
inline Rational derive_monomial(const Signature& sig, int i, const SuperMonomial& x, SuperMonomial& out) {
    sig.check_index(i);
    if (i <= sig.m) {
        int e = x.alpha[i - 1];
        if (e == 0) return Rational(0);
        out = x;
        out.alpha[i - 1] = e - 1;
        return Rational(e);
    }
    int j = i - sig.m;
    auto it = std::lower_bound(x.odd.begin(), x.odd.end(), j);
    if (it == x.odd.end() || *it != j) return Rational(0);
    out = x;
    size_t pos = static_cast<size_t>(it - x.odd.begin());
    out.odd.erase(out.odd.begin() + static_cast<long>(pos));
    return (pos % 2 == 0) ? Rational(1) : Rational(-1);
}

}  // namespace wittsuper
