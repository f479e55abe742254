#pragma once

#include <string>
#include <vector>

#include "wittsuper/rational.hpp"
#include "wittsuper/vectorfield.hpp"

namespace wittsuper {

// Weights live in h* with coordinates in the eps basis.  Non-integral shifts
// are represented by concrete non-integer rationals; all arithmetic on
// weights adds integer vectors only, so integral and shifted lattices never
// mix.
using Weight = std::vector<Rational>;
using Root = std::vector<int>;

inline Weight add(const Weight& w, const Root& a, int k = 1) {
    Weight out = w;
    for (size_t i = 0; i < out.size(); ++i) out[i] += Rational(a[i]) * k;
    return out;
}

inline Rational pairing(const Weight& w, const Root& a) {
    Rational s(0);
    for (size_t i = 0; i < w.size(); ++i) s += w[i] * a[i];
    return s;
}

inline Root negate(const Root& a) {
    Root out = a;
    for (int& x : out) x = -x;
    return out;
}

inline Root add_roots(const Root& a, const Root& b) {
    Root out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

inline bool is_zero_root(const Root& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

inline Root eps(int i, int m) {
    Root r(m, 0);
    r[i - 1] = 1;
    return r;
}

inline std::string root_to_string(const Root& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

inline std::string weight_to_string(const Weight& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += rat_to_string(w[i]);
    }
    return s + ")";
}

struct RootSystem {
    int m = 0;
    int cap = 0;
    std::vector<Root> delta;         // Delta up to coordinate-sum cap
    std::vector<Root> delta_prime;   // {eps_i - eps_j, +-eps_i}
    std::vector<Root> delta_dprime;  // {eps_i - eps_j}
};

// Roots of W_{m,n} w.r.t. h: all nonzero alpha with either every coordinate
// >= 0, or exactly one coordinate equal to -1 and the rest >= 0; truncated to
// coordinate-sum <= cap.
RootSystem root_set(int m, int cap);

inline bool in_delta_shape(const Root& a) {
    int negs = 0;
    for (int x : a) {
        if (x < -1) return false;
        if (x == -1) ++negs;
    }
    return negs <= 1 && !is_zero_root(a);
}

// The canonical sl_{m+1} inside W_{m,0}:
//   d_i -> t_i d_i, e_{eps_i - eps_j} -> t_i d_j,
//   e_{eps_i} -> -t_i sum_j t_j d_j, e_{-eps_i} -> d_i.
struct SlBasisElement {
    std::string label;
    Root root;  // weight of the element (zero for Cartan)
    VectorField field;
};
std::vector<SlBasisElement> sl_embedding(int m);

}  // namespace wittsuper
