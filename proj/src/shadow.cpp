#include "wittsuper/shadow.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "wittsuper/linalg.hpp"

namespace wittsuper {

namespace {

struct LineSummary {
    bool bounded_above = true;
    bool bounded_below = true;
};

// Exact path: union of per-component integer intervals.
std::optional<LineSummary> line_summary_exact(const SupportSet& S, const Weight& lam, const Root& alpha) {
    LineSummary out;
    for (const ShiftedCone& c : S.components) {
        auto iv = cone_line_interval(c, lam, alpha);
        if (!iv) return std::nullopt;
        if (iv->empty) continue;
        if (iv->hi_inf) out.bounded_above = false;
        if (iv->lo_inf) out.bounded_below = false;
    }
    return out;
}

// Fallback path per the stated decision procedure: window enumeration plus a
// recession certificate; disagreement raises UndecidedWithinWindow.
LineSummary line_summary_window(const SupportSet& S, const Weight& lam, const Root& alpha, int window) {
    LineSummary out;
    std::vector<long> members;
    bool any_undecided = false;
    for (long q = -window; q <= window; ++q) {
        Tri t = support_member(S, add(lam, alpha, static_cast<int>(q)));
        if (t == Tri::Yes) members.push_back(q);
        if (t == Tri::Undecided) any_undecided = true;
    }
    auto receding = [&](const Root& dir) {
        for (long q : members) {
            Weight w = add(lam, alpha, static_cast<int>(q));
            for (const ShiftedCone& c : S.components) {
                if (cone_member(c, w) != Tri::Yes) continue;
                if (cone_recedes(c, dir) == Tri::Yes) return true;
            }
        }
        return false;
    };
    bool up = receding(alpha);
    bool down = receding(negate(alpha));
    out.bounded_above = !up;
    out.bounded_below = !down;
    // Honesty: members hugging the window edge without a certificate means
    // enumeration and recession disagree.
    if (!members.empty()) {
        if (!up && members.back() == window)
            fail(ErrorKind::UndecidedWithinWindow,
                 "direction " + root_to_string(alpha) + " reaches the window edge without a recession certificate");
        if (!down && members.front() == -window)
            fail(ErrorKind::UndecidedWithinWindow,
                 "direction " + root_to_string(alpha) + " reaches the window edge without a recession certificate");
    }
    if (any_undecided)
        fail(ErrorKind::UndecidedWithinWindow, "membership undecided along " + root_to_string(alpha));
    return out;
}

LineSummary line_summary(const SupportSet& S, const Weight& lam, const Root& alpha, int window) {
    if (auto s = line_summary_exact(S, lam, alpha)) return *s;
    return line_summary_window(S, lam, alpha, window);
}

// lam + Z_+ alpha subset of S?
bool ray_contained(const SupportSet& S, const Weight& lam, const Root& alpha, int window) {
    // Exact: the union of integer intervals must cover [0, inf).
    bool exact_ok = true;
    struct Iv {
        Integer lo, hi;
        bool lo_inf, hi_inf;
    };
    std::vector<Iv> ivs;
    for (const ShiftedCone& c : S.components) {
        auto iv = cone_line_interval(c, lam, alpha);
        if (!iv) {
            exact_ok = false;
            break;
        }
        if (!iv->empty) ivs.push_back({iv->lo, iv->hi, iv->lo_inf, iv->hi_inf});
    }
    if (exact_ok) {
        // sweep from 0 upward: need every integer >= 0 covered
        Integer next = 0;
        bool progress = true;
        while (progress) {
            progress = false;
            for (const auto& iv : ivs) {
                bool lo_ok = iv.lo_inf || iv.lo <= next;
                if (!lo_ok) continue;
                if (iv.hi_inf) return true;
                if (iv.hi >= next) {
                    next = iv.hi + 1;
                    progress = true;
                }
            }
        }
        return false;
    }
    // window fallback: all of [0, window] must be members and the ray must
    // recede inside some component touching it.
    for (int q = 0; q <= window; ++q)
        if (support_member(S, add(lam, alpha, q)) != Tri::Yes) return false;
    for (const ShiftedCone& c : S.components)
        if (cone_member(c, add(lam, alpha, window)) == Tri::Yes && cone_recedes(c, alpha) == Tri::Yes) return true;
    fail(ErrorKind::UndecidedWithinWindow, "ray containment undecided along " + root_to_string(alpha));
}

}  // namespace

DirectionClass classify_direction(const SupportSet& S, const Weight& lam, const Root& alpha, int window) {
    if (support_member(S, lam) != Tri::Yes)
        fail(ErrorKind::WeightNotInSupport, weight_to_string(lam) + " not in the support");
    LineSummary s = line_summary(S, lam, alpha, window);
    if (s.bounded_above && s.bounded_below) return DirectionClass::Finite;
    if (s.bounded_above) return DirectionClass::Plus;
    if (s.bounded_below) return DirectionClass::Minus;
    return DirectionClass::Infinite;
}

const std::vector<Root>* ShadowPartition::part_of(const Root& a) const {
    auto has = [&](const std::vector<Root>& v) { return std::find(v.begin(), v.end(), a) != v.end(); };
    if (has(plus)) return &plus;
    if (has(minus)) return &minus;
    if (has(finite)) return &finite;
    if (has(infinite)) return &infinite;
    return nullptr;
}

ShadowPartition shadow(const SupportSet& S, const Weight& lam, int window) {
    if (support_member(S, lam) != Tri::Yes)
        fail(ErrorKind::WeightNotInSupport, weight_to_string(lam) + " not in the support");
    RootSystem rs = root_set(S.m, 1);
    ShadowPartition out;
    out.m = S.m;
    for (const Root& a : rs.delta_prime) {
        switch (classify_direction(S, lam, a, window)) {
            case DirectionClass::Plus: out.plus.push_back(a); break;
            case DirectionClass::Minus: out.minus.push_back(a); break;
            case DirectionClass::Finite: out.finite.push_back(a); break;
            case DirectionClass::Infinite: out.infinite.push_back(a); break;
        }
    }
    for (const Root& a : rs.delta_prime)
        if (ray_contained(S, lam, a, window)) out.gamma_gens.push_back(a);
    // Reformulation through the Gamma monoid must agree with the direction
    // classes; a mismatch is evidence against S being a simple-module support.
    for (const Root& a : rs.delta_prime) {
        Tri fwd = monoid_member(out.gamma_gens, a);
        Tri bwd = monoid_member(out.gamma_gens, negate(a));
        if (fwd == Tri::Undecided || bwd == Tri::Undecided) {
            out.gamma_consistent = false;
            out.diagnostics.push_back("gamma membership undecided for " + root_to_string(a));
            continue;
        }
        bool plus_g = fwd == Tri::No && bwd == Tri::Yes;
        bool minus_g = fwd == Tri::Yes && bwd == Tri::No;
        bool inf_g = fwd == Tri::Yes && bwd == Tri::Yes;
        bool fin_g = fwd == Tri::No && bwd == Tri::No;
        const std::vector<Root>* cls = out.part_of(a);
        bool match = (cls == &out.plus && plus_g) || (cls == &out.minus && minus_g) ||
                     (cls == &out.infinite && inf_g) || (cls == &out.finite && fin_g);
        if (!match) {
            out.gamma_consistent = false;
            out.diagnostics.push_back("gamma reformulation disagrees at " + root_to_string(a));
        }
    }
    return out;
}

std::vector<Root> k_lambda(const SupportSet& S, const Weight& lam) {
    if (support_member(S, lam) != Tri::Yes)
        fail(ErrorKind::WeightNotInSupport, weight_to_string(lam) + " not in the support");
    RootSystem rs = root_set(S.m, 1);
    std::vector<Root> out;
    for (const Root& a : rs.delta_prime)
        if (!support_member_exact(S, add(lam, a))) out.push_back(a);
    return out;
}

ExtremalResult is_extremal(const SupportSet& S, const Weight& lam, int window) {
    ExtremalResult res;
    res.window = window;
    std::vector<Root> Kl = k_lambda(S, lam);
    std::set<Root> Kset(Kl.begin(), Kl.end());
    for (const Weight& mu : enumerate_box(S, lam, window)) {
        std::vector<Root> Km = k_lambda(S, mu);
        if (Km.size() <= Kset.size()) continue;
        bool contains = std::all_of(Kl.begin(), Kl.end(), [&](const Root& a) {
            return std::find(Km.begin(), Km.end(), a) != Km.end();
        });
        if (contains) {
            res.extremal = false;
            res.witness = mu;
            return res;
        }
    }
    res.extremal = true;
    return res;
}

ClosureReport check_closure_lemmas(const SupportSet& S, const Weight& lam, int window) {
    ClosureReport rep;
    RootSystem rs = root_set(S.m, 1);
    std::vector<Root> Kl = k_lambda(S, lam);
    auto in_k = [&](const Root& a) { return std::find(Kl.begin(), Kl.end(), a) != Kl.end(); };
    auto in_dp = [&](const Root& a) {
        return std::find(rs.delta_prime.begin(), rs.delta_prime.end(), a) != rs.delta_prime.end();
    };
    for (const Root& a : rs.delta_prime)
        for (const Root& b : rs.delta_prime) {
            Root ab = add_roots(a, b);
            if (!in_dp(ab)) continue;
            if (in_k(a) && in_k(b) && !in_k(ab)) {
                rep.closure_k = false;
                rep.counterexamples.push_back("K: " + root_to_string(a) + "+" + root_to_string(b));
            }
            if (!in_k(a) && !in_k(b) && in_k(ab)) {
                rep.closure_kbar = false;
                rep.counterexamples.push_back("Kbar: " + root_to_string(a) + "+" + root_to_string(b));
            }
        }
    // K_lam = Delta'^+ u {alpha in Delta'^F : (lam,alpha) >= 0}
    ShadowPartition sh = shadow(S, lam, window);
    std::set<Root> expected(sh.plus.begin(), sh.plus.end());
    for (const Root& a : sh.finite)
        if (pairing(lam, a) >= 0) expected.insert(a);
    std::set<Root> actual(Kl.begin(), Kl.end());
    if (expected != actual) {
        rep.lemma9_match = false;
        rep.counterexamples.push_back("K_lambda formula mismatch");
    }
    // The K_lam-derived subdivision must be a parabolic decomposition of
    // Delta': projected +/- parts triangular.
    std::set<Root> kminus, kzero;
    for (const Root& a : rs.delta_prime) {
        bool ka = in_k(a), kna = in_k(negate(a));
        if (ka && kna) kzero.insert(a);
        if (!ka && !kna) kzero.insert(a);
        if (!ka && kna) kminus.insert(a);
    }
    std::set<Root> kplus;
    for (const Root& a : rs.delta_prime)
        if (in_k(a) && !in_k(negate(a))) kplus.insert(a);
    // Project modulo span(kzero) and test the triangular-cone condition on
    // the images, exactly.
    RowSpace zspan(static_cast<size_t>(S.m));
    for (const Root& z : kzero) zspan.insert(std::vector<Rational>(z.begin(), z.end()));
    auto project = [&](const Root& a) { return zspan.reduced(std::vector<Rational>(a.begin(), a.end())); };
    auto scaled_int = [&](const std::vector<Rational>& v) {
        Integer lcm = 1;
        for (const Rational& r : v) {
            Integer d = denominator(r);
            lcm = lcm / gcd(lcm, d) * d;
        }
        std::vector<int> out;
        for (const Rational& r : v) out.push_back(static_cast<int>(numerator(r) * (lcm / denominator(r))));
        return out;
    };
    bool ok = true;
    std::vector<std::vector<int>> pplus, pminus;
    for (const Root& a : kplus) {
        auto v = project(a);
        if (std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; })) ok = false;
        pplus.push_back(scaled_int(v));
    }
    for (const Root& a : kminus) {
        auto v = project(a);
        if (std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; })) ok = false;
        pminus.push_back(scaled_int(v));
    }
    if (ok && !pplus.empty() && !pminus.empty()) {
        std::vector<std::vector<int>> U, V;
        for (const auto& v : pplus) U.push_back(v);
        for (const auto& v : pminus) {
            std::vector<int> nv = v;
            for (int& x : nv) x = -x;
            U.push_back(nv);
        }
        for (const auto& v : pminus) V.push_back(v);
        for (const auto& v : pplus) {
            std::vector<int> nv = v;
            for (int& x : nv) x = -x;
            V.push_back(nv);
        }
        // triangular: <-P u M>_{R+} /\ <-M u P>_{R+} = {0} on the images
        if (cones_intersect_nontrivially(V, U, static_cast<size_t>(S.m))) ok = false;
    }
    rep.corollary1_parabolic = ok;
    if (!rep.corollary1_parabolic) rep.counterexamples.push_back("Corollary parabolic check failed");
    return rep;
}

ParabolicDecomposition parabolic_decomposition(const ShadowPartition& sh, const Weight& lam,
                                               const std::vector<Root>& tri_plus,
                                               const std::vector<Root>& tri_minus, int cap) {
    // validate the triangular split of {alpha in Delta'^F : (lam,alpha)=0}
    std::set<Root> f0;
    for (const Root& a : sh.finite)
        if (pairing(lam, a) == 0) f0.insert(a);
    std::set<Root> given(tri_plus.begin(), tri_plus.end());
    for (const Root& a : tri_minus) {
        if (given.count(a)) fail(ErrorKind::InvalidTriangularSplit, "tri parts overlap");
        given.insert(a);
    }
    if (given != f0) fail(ErrorKind::InvalidTriangularSplit, "tri parts do not partition Delta'^{F,0}");
    std::vector<std::vector<int>> U, V;
    for (const Root& a : tri_plus) U.push_back(negate(a));
    for (const Root& a : tri_minus) U.push_back(a);
    for (const Root& a : tri_minus) V.push_back(negate(a));
    for (const Root& a : tri_plus) V.push_back(a);
    if (!U.empty() && cones_intersect_nontrivially(U, V, static_cast<size_t>(sh.m)))
        fail(ErrorKind::InvalidTriangularSplit, "split is not triangular");

    RootSystem rs = root_set(sh.m, cap);
    std::vector<Root> up = sh.plus;  // ^lam Delta'^+
    for (const Root& a : sh.finite)
        if (pairing(lam, a) > 0) up.push_back(a);
    for (const Root& a : tri_plus) up.push_back(a);
    std::vector<Root> gens_plus = up;
    for (const Root& a : sh.infinite) gens_plus.push_back(a);

    ParabolicDecomposition out;
    for (const Root& a : rs.delta) {
        if (lattice_member(sh.infinite, a)) {
            out.zero.push_back(a);
            continue;
        }
        Tri t = monoid_member(gens_plus, a);
        if (t == Tri::Undecided)
            fail(ErrorKind::UndecidedWithinWindow, "monoid membership undecided for " + root_to_string(a));
        if (t == Tri::Yes)
            out.plus.push_back(a);
        else
            out.minus.push_back(a);
    }
    return out;
}

LeviSpec levi_shape(const ShadowPartition& sh, int n) {
    RootSystem rs = root_set(sh.m, 1);
    std::set<Root> dd(rs.delta_dprime.begin(), rs.delta_dprime.end());
    for (const Root& a : sh.finite)
        if (!dd.count(a))
            fail(ErrorKind::InconsistentShadow, "Delta'^F not inside Delta''");
    for (const Root& a : sh.finite)
        for (const Root& b : sh.infinite) {
            Rational p(0);
            for (int i = 0; i < sh.m; ++i) p += Rational(a[i]) * b[i];
            if (p != 0)
                fail(ErrorKind::InconsistentShadow,
                     "Delta'^F and Delta'^I not orthogonal: " + root_to_string(a) + "," + root_to_string(b));
        }
    std::set<Root> inf(sh.infinite.begin(), sh.infinite.end());
    LeviSpec spec;
    spec.n = n;
    std::vector<int> rest;
    for (int i = 1; i <= sh.m; ++i) {
        if (inf.count(eps(i, sh.m)))
            ++spec.q;
        else
            rest.push_back(i);
    }
    // connected components of the graph on `rest` with edges where
    // eps_i - eps_j is an infinite direction
    std::map<int, int> comp;
    for (int i : rest) comp[i] = i;
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (int i : rest)
        for (int j : rest) {
            if (i >= j) continue;
            Root r = add_roots(eps(i, sh.m), negate(eps(j, sh.m)));
            if (inf.count(r)) comp[find(i)] = find(j);
        }
    std::map<int, std::vector<int>> blocks;
    for (int i : rest) blocks[find(i)].push_back(i);
    for (auto& [root_idx, members] : blocks) {
        std::sort(members.begin(), members.end());
        spec.k_blocks.push_back(members);
    }
    std::sort(spec.k_blocks.begin(), spec.k_blocks.end());
    return spec;
}

}  // namespace wittsuper
