#pragma once

#include <optional>
#include <vector>

#include "wittsuper/rational.hpp"

namespace wittsuper {

// Linear constraint  a . x >= b  (or  a . x = b  when eq).
struct LinCon {
    std::vector<Rational> a;
    Rational b;
    bool eq = false;
};

// Exact Fourier-Motzkin feasibility over the rationals.
bool lp_feasible(std::vector<LinCon> cons, size_t nvars);

// Projection of the feasible set onto variable `keep` (one-dimensional).
struct Interval {
    bool feasible = false;
    bool lo_inf = false, hi_inf = false;
    Rational lo, hi;  // valid when the matching *_inf flag is false
};
Interval lp_project_interval(std::vector<LinCon> cons, size_t nvars, size_t keep);

// Whether cone_{R+}(U) intersects cone_{R+}(V) in a nonzero vector.
// Generators are columns given as integer vectors of common length dim.
bool cones_intersect_nontrivially(const std::vector<std::vector<int>>& U,
                                  const std::vector<std::vector<int>>& V, size_t dim);

}  // namespace wittsuper
