#include "wittsuper/lp.hpp"

#include <algorithm>
#include <map>

namespace wittsuper {

namespace {

// Normalize an inequality a.x >= b by the gcd of numerators/denominators so
// duplicates collapse.
void normalize(std::vector<Rational>& a, Rational& b) {
    Integer num_gcd = 0, den_lcm = 1;
    auto fold = [&](const Rational& r) {
        if (r == 0) return;
        num_gcd = gcd(num_gcd, numerator(r) < 0 ? Integer(-numerator(r)) : numerator(r));
        Integer d = denominator(r);
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    };
    for (const Rational& r : a) fold(r);
    fold(b);
    if (num_gcd == 0) return;
    Rational f(den_lcm, num_gcd);
    for (Rational& r : a) r *= f;
    b *= f;
}

struct Ineq {
    std::vector<Rational> a;
    Rational b;
    bool operator<(const Ineq& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

// Expand equalities, dedupe.
std::vector<Ineq> to_ineqs(std::vector<LinCon> cons) {
    std::vector<Ineq> out;
    for (auto& c : cons) {
        normalize(c.a, c.b);
        out.push_back({c.a, c.b});
        if (c.eq) {
            std::vector<Rational> neg = c.a;
            for (Rational& r : neg) r = -r;
            out.push_back({neg, -c.b});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Ineq& x, const Ineq& y) { return x.a == y.a && x.b == y.b; }),
              out.end());
    return out;
}

// Eliminate variable k from the system; returns false immediately when a
// contradictory ground constraint appears.
bool eliminate(std::vector<Ineq>& sys, size_t k) {
    std::vector<Ineq> zero, pos, neg;
    for (auto& c : sys) {
        if (c.a[k] == 0)
            zero.push_back(std::move(c));
        else if (c.a[k] > 0)
            pos.push_back(std::move(c));
        else
            neg.push_back(std::move(c));
    }
    for (const Ineq& p : pos)
        for (const Ineq& n : neg) {
            // p: a.x >= b with a_k > 0  ->  x_k >= (b - rest)/a_k
            // n: a.x >= b with a_k < 0  ->  x_k <= ...
            // combine: a_k(n-row scaled) + ...; standard positive combination
            Rational cp = p.a[k], cn = -n.a[k];
            Ineq comb;
            comb.a.resize(p.a.size());
            for (size_t j = 0; j < p.a.size(); ++j) comb.a[j] = p.a[j] * cn + n.a[j] * cp;
            comb.b = p.b * cn + n.b * cp;
            comb.a[k] = 0;
            normalize(comb.a, comb.b);
            bool all_zero = std::all_of(comb.a.begin(), comb.a.end(), [](const Rational& r) { return r == 0; });
            if (all_zero) {
                if (comb.b > 0) return false;  // 0 >= b > 0
                continue;
            }
            zero.push_back(std::move(comb));
        }
    std::sort(zero.begin(), zero.end());
    zero.erase(std::unique(zero.begin(), zero.end(),
                           [](const Ineq& x, const Ineq& y) { return x.a == y.a && x.b == y.b; }),
               zero.end());
    sys = std::move(zero);
    return true;
}

bool ground_consistent(const std::vector<Ineq>& sys) {
    for (const Ineq& c : sys) {
        bool all_zero = std::all_of(c.a.begin(), c.a.end(), [](const Rational& r) { return r == 0; });
        if (all_zero && c.b > 0) return false;
    }
    return true;
}

}  // namespace

bool lp_feasible(std::vector<LinCon> cons, size_t nvars) {
    std::vector<Ineq> sys = to_ineqs(std::move(cons));
    if (!ground_consistent(sys)) return false;
    for (size_t k = 0; k < nvars; ++k) {
        if (!eliminate(sys, k)) return false;
        if (!ground_consistent(sys)) return false;
    }
    return true;
}

Interval lp_project_interval(std::vector<LinCon> cons, size_t nvars, size_t keep) {
    std::vector<Ineq> sys = to_ineqs(std::move(cons));
    Interval out;
    if (!ground_consistent(sys)) return out;
    for (size_t k = 0; k < nvars; ++k) {
        if (k == keep) continue;
        if (!eliminate(sys, k)) return out;
        if (!ground_consistent(sys)) return out;
    }
    out.feasible = true;
    out.lo_inf = out.hi_inf = true;
    for (const Ineq& c : sys) {
        if (c.a[keep] == 0) {
            if (c.b > 0) out.feasible = false;
            continue;
        }
        Rational bound = c.b / c.a[keep];
        if (c.a[keep] > 0) {  // x >= bound
            if (out.lo_inf || bound > out.lo) {
                out.lo = bound;
                out.lo_inf = false;
            }
        } else {  // x <= bound
            if (out.hi_inf || bound < out.hi) {
                out.hi = bound;
                out.hi_inf = false;
            }
        }
    }
    if (!out.lo_inf && !out.hi_inf && out.lo > out.hi) out.feasible = false;
    return out;
}

bool cones_intersect_nontrivially(const std::vector<std::vector<int>>& U,
                                  const std::vector<std::vector<int>>& V, size_t dim) {
    if (U.empty() || V.empty()) return false;
    size_t p = U.size(), q = V.size();
    size_t nvars = p + q;
    auto base_cons = [&]() {
        std::vector<LinCon> cons;
        // Ua - Vb = 0
        for (size_t d = 0; d < dim; ++d) {
            LinCon c;
            c.a.assign(nvars, Rational(0));
            for (size_t j = 0; j < p; ++j) c.a[j] = U[j][d];
            for (size_t j = 0; j < q; ++j) c.a[p + j] = -V[j][d];
            c.b = 0;
            c.eq = true;
            cons.push_back(std::move(c));
        }
        for (size_t j = 0; j < nvars; ++j) {
            LinCon c;
            c.a.assign(nvars, Rational(0));
            c.a[j] = 1;
            c.b = 0;
            cons.push_back(std::move(c));
        }
        return cons;
    };
    // Nonzero iff some coordinate of Ua can be pushed to +-1.
    for (size_t d = 0; d < dim; ++d) {
        for (int sign : {1, -1}) {
            std::vector<LinCon> cons = base_cons();
            LinCon c;
            c.a.assign(nvars, Rational(0));
            for (size_t j = 0; j < p; ++j) c.a[j] = Rational(sign * U[j][d]);
            c.b = 1;
            cons.push_back(std::move(c));
            if (lp_feasible(std::move(cons), nvars)) return true;
        }
    }
    return false;
}

}  // namespace wittsuper
