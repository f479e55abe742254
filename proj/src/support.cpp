#include "wittsuper/support.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace wittsuper {

bool ShiftedCone::network_class() const {
    return std::all_of(free_gens.begin(), free_gens.end(), is_network_vector) &&
           std::all_of(plus_gens.begin(), plus_gens.end(), is_network_vector);
}

namespace {

// Columns of the constraint matrix for one cone: plus gens (p >= 0) and both
// signs of each free gen.  Returns the variable count.
size_t cone_columns(const ShiftedCone& c, std::vector<const Root*>& plus_cols, std::vector<const Root*>& free_cols) {
    for (const Root& g : c.plus_gens) plus_cols.push_back(&g);
    for (const Root& g : c.free_gens) free_cols.push_back(&g);
    return plus_cols.size() + 2 * free_cols.size();
}

std::vector<LinCon> cone_equations(const ShiftedCone& c, const std::vector<Rational>& rhs, size_t extra_vars) {
    std::vector<const Root*> plus_cols, free_cols;
    size_t nv = cone_columns(c, plus_cols, free_cols) + extra_vars;
    size_t m = c.base.size();
    std::vector<LinCon> cons;
    for (size_t d = 0; d < m; ++d) {
        LinCon e;
        e.a.assign(nv, Rational(0));
        for (size_t j = 0; j < plus_cols.size(); ++j) e.a[j] = (*plus_cols[j])[d];
        for (size_t j = 0; j < free_cols.size(); ++j) {
            e.a[plus_cols.size() + 2 * j] = (*free_cols[j])[d];
            e.a[plus_cols.size() + 2 * j + 1] = -(*free_cols[j])[d];
        }
        e.b = rhs[d];
        e.eq = true;
        cons.push_back(std::move(e));
    }
    for (size_t j = 0; j < nv - extra_vars + 0; ++j) {
        LinCon p;
        p.a.assign(nv, Rational(0));
        p.a[j] = 1;
        p.b = 0;
        cons.push_back(std::move(p));
    }
    return cons;
}

bool integral_vector(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return is_integer(r); });
}

// Bounded search for  sum p_j plus_j = d (mod lattice(free)), p_j in [0,cap].
bool bounded_plus_search(const ShiftedCone& c, const std::vector<Integer>& d, int cap) {
    std::vector<Integer> cur = d;
    std::function<bool(size_t)> rec = [&](size_t j) -> bool {
        if (j == c.plus_gens.size()) {
            Root target(cur.size());
            for (size_t i = 0; i < cur.size(); ++i) {
                if (cur[i] > std::numeric_limits<int>::max() || cur[i] < std::numeric_limits<int>::min())
                    return false;
                target[i] = static_cast<int>(cur[i]);
            }
            return lattice_member(c.free_gens, target);
        }
        for (int k = 0; k <= cap; ++k) {
            if (rec(j + 1)) return true;
            for (size_t i = 0; i < cur.size(); ++i) cur[i] -= c.plus_gens[j][i];
        }
        for (size_t i = 0; i < cur.size(); ++i) cur[i] += Integer(cap + 1) * c.plus_gens[j][i];
        return false;
    };
    return rec(0);
}

}  // namespace

bool lattice_member(const std::vector<Root>& gens, const Root& target) {
    if (gens.empty()) return is_zero_root(target);
    size_t m = target.size();
    std::vector<std::vector<Integer>> cols;
    for (const Root& g : gens) cols.emplace_back(g.begin(), g.end());
    std::vector<Integer> d(target.begin(), target.end());
    std::vector<std::pair<size_t, std::vector<Integer>>> pivots;  // (row, column)
    std::vector<std::vector<Integer>> active = cols;
    for (size_t r = 0; r < m; ++r) {
        // gcd-eliminate row r across active columns
        while (true) {
            size_t best = active.size();
            for (size_t j = 0; j < active.size(); ++j) {
                if (active[j][r] == 0) continue;
                if (best == active.size() || abs(active[j][r]) < abs(active[best][r])) best = j;
            }
            if (best == active.size()) break;
            bool others = false;
            for (size_t j = 0; j < active.size(); ++j) {
                if (j == best || active[j][r] == 0) continue;
                others = true;
                Integer q = active[j][r] / active[best][r];
                for (size_t i = 0; i < m; ++i) active[j][i] -= q * active[best][i];
            }
            if (!others) {
                pivots.emplace_back(r, active[best]);
                active.erase(active.begin() + static_cast<long>(best));
                break;
            }
        }
    }
    for (size_t r = 0; r < m; ++r) {
        auto it = std::find_if(pivots.begin(), pivots.end(), [&](const auto& p) { return p.first == r; });
        if (it == pivots.end()) {
            if (d[r] != 0) return false;
            continue;
        }
        const auto& col = it->second;
        if (d[r] % col[r] != 0) return false;
        Integer x = d[r] / col[r];
        for (size_t i = 0; i < m; ++i) d[i] -= x * col[i];
    }
    return std::all_of(d.begin(), d.end(), [](const Integer& v) { return v == 0; });
}

Tri cone_member(const ShiftedCone& c, const Weight& w, int search_cap) {
    if (w.size() != c.base.size()) fail(ErrorKind::SizeMismatch, "weight arity vs cone");
    std::vector<Rational> rhs(w.size());
    for (size_t i = 0; i < w.size(); ++i) rhs[i] = w[i] - c.base[i];
    if (!integral_vector(rhs)) return Tri::No;
    std::vector<const Root*> plus_cols, free_cols;
    size_t nv = cone_columns(c, plus_cols, free_cols);
    bool rationally = lp_feasible(cone_equations(c, rhs, 0), nv);
    if (!rationally) return Tri::No;
    if (c.network_class()) return Tri::Yes;
    std::vector<Integer> d;
    for (const Rational& r : rhs) d.push_back(numerator(r));
    if (bounded_plus_search(c, d, search_cap)) return Tri::Yes;
    return Tri::Undecided;
}

Tri support_member(const SupportSet& s, const Weight& w, int search_cap) {
    bool undecided = false;
    for (const ShiftedCone& c : s.components) {
        Tri t = cone_member(c, w, search_cap);
        if (t == Tri::Yes) return Tri::Yes;
        if (t == Tri::Undecided) undecided = true;
    }
    return undecided ? Tri::Undecided : Tri::No;
}

bool support_member_exact(const SupportSet& s, const Weight& w) {
    Tri t = support_member(s, w);
    if (t == Tri::Undecided)
        fail(ErrorKind::UndecidedWithinWindow, "membership of " + weight_to_string(w) + " undecided");
    return t == Tri::Yes;
}

std::optional<ZInterval> cone_line_interval(const ShiftedCone& c, const Weight& lam, const Root& alpha) {
    if (!c.network_class() || !is_network_vector(alpha)) return std::nullopt;
    ZInterval out;
    std::vector<Rational> rhs(lam.size());
    for (size_t i = 0; i < lam.size(); ++i) rhs[i] = lam[i] - c.base[i];
    if (!integral_vector(rhs)) return out;  // empty
    // variables: [cone vars..., q+, q-]
    std::vector<const Root*> plus_cols, free_cols;
    size_t base_nv = cone_columns(c, plus_cols, free_cols);
    size_t nv = base_nv + 2;
    std::vector<LinCon> cons = cone_equations(c, rhs, 2);
    for (size_t d = 0; d < lam.size(); ++d) {
        cons[d].a[base_nv] = Rational(-alpha[d]);
        cons[d].a[base_nv + 1] = Rational(alpha[d]);
    }
    // project onto q = q+ - q-: introduce explicit variable via substitution:
    // use q+ as the projected variable and pin q- = 0 (q unrestricted is
    // already covered by the +- split, so project q+ - q- instead).
    // Simplest exact route: add variable q with equality q = q+ - q-.
    for (auto& e : cons) e.a.push_back(Rational(0));
    LinCon link;
    link.a.assign(nv + 1, Rational(0));
    link.a[base_nv] = 1;
    link.a[base_nv + 1] = -1;
    link.a[nv] = -1;
    link.b = 0;
    link.eq = true;
    cons.push_back(std::move(link));
    Interval iv = lp_project_interval(std::move(cons), nv + 1, nv);
    if (!iv.feasible) return out;
    out.empty = false;
    out.lo_inf = iv.lo_inf;
    out.hi_inf = iv.hi_inf;
    if (!iv.lo_inf) out.lo = ceil_int(iv.lo);
    if (!iv.hi_inf) out.hi = floor_int(iv.hi);
    if (!out.lo_inf && !out.hi_inf && out.lo > out.hi) out.empty = true;
    return out;
}

Tri cone_recedes(const ShiftedCone& c, const Root& alpha, int search_cap) {
    std::vector<Rational> rhs(alpha.begin(), alpha.end());
    std::vector<const Root*> plus_cols, free_cols;
    size_t nv = cone_columns(c, plus_cols, free_cols);
    if (!lp_feasible(cone_equations(c, rhs, 0), nv)) return Tri::No;
    if (c.network_class() && is_network_vector(alpha)) return Tri::Yes;
    std::vector<Integer> d(alpha.begin(), alpha.end());
    if (bounded_plus_search(c, d, search_cap)) return Tri::Yes;
    return Tri::Undecided;
}

Tri monoid_member(const std::vector<Root>& gens, const Root& target, int search_cap) {
    ShiftedCone c;
    c.base.assign(target.size(), Rational(0));
    c.plus_gens = gens;
    Weight w(target.size());
    for (size_t i = 0; i < target.size(); ++i) w[i] = target[i];
    return cone_member(c, w, search_cap);
}

std::vector<Weight> enumerate_box(const SupportSet& s, const Weight& center, int R) {
    std::set<Weight> found;
    for (const ShiftedCone& c : s.components) {
        size_t m = center.size();
        std::vector<Integer> lo(m), hi(m);
        bool empty = false;
        for (size_t i = 0; i < m; ++i) {
            lo[i] = ceil_int(center[i] - R - c.base[i]);
            hi[i] = floor_int(center[i] + R - c.base[i]);
            if (lo[i] > hi[i]) empty = true;
        }
        if (empty) continue;
        std::vector<Integer> z = lo;
        while (true) {
            Weight w(m);
            for (size_t i = 0; i < m; ++i) w[i] = c.base[i] + Rational(z[i]);
            if (cone_member(c, w) == Tri::Yes) found.insert(w);
            size_t i = 0;
            while (i < m) {
                if (z[i] < hi[i]) {
                    ++z[i];
                    break;
                }
                z[i] = lo[i];
                ++i;
            }
            if (i == m) break;
        }
    }
    return std::vector<Weight>(found.begin(), found.end());
}

}  // namespace wittsuper
