#pragma once

#include <optional>

#include "wittsuper/lp.hpp"
#include "wittsuper/weight.hpp"

namespace wittsuper {

// One shifted lattice cone  base + sum Z free_i + sum Z_+ plus_j.
struct ShiftedCone {
    Weight base;
    std::vector<Root> free_gens;
    std::vector<Root> plus_gens;

    // Generators with at most one +1 and one -1 entry (all entries in
    // {-1,0,1}) give a network (totally unimodular) constraint matrix, so
    // integer feasibility coincides with rational feasibility and everything
    // below is exactly decidable.
    bool network_class() const;
};

struct SupportSet {
    int m = 0;
    std::vector<ShiftedCone> components;

    bool network_class() const {
        return std::all_of(components.begin(), components.end(),
                           [](const ShiftedCone& c) { return c.network_class(); });
    }
};

inline bool is_network_vector(const Root& g) {
    int pos = 0, neg = 0;
    for (int x : g) {
        if (x > 1 || x < -1) return false;
        if (x == 1) ++pos;
        if (x == -1) ++neg;
    }
    return pos <= 1 && neg <= 1;
}

enum class Tri { Yes, No, Undecided };

// w in cone?
Tri cone_member(const ShiftedCone& c, const Weight& w, int search_cap = 24);
Tri support_member(const SupportSet& s, const Weight& w, int search_cap = 24);
// Throwing wrapper; Undecided raises UndecidedWithinWindow.
bool support_member_exact(const SupportSet& s, const Weight& w);

// Integer q range with lam + q*alpha in the cone: exact for network-class
// cones (empty/interval/half-line/line).
struct ZInterval {
    bool empty = true;
    bool lo_inf = false, hi_inf = false;
    Integer lo = 0, hi = 0;
};
std::optional<ZInterval> cone_line_interval(const ShiftedCone& c, const Weight& lam, const Root& alpha);

// alpha a recession direction of the cone (alpha = F c + P p with p >= 0)?
Tri cone_recedes(const ShiftedCone& c, const Root& alpha, int search_cap = 24);

// Z_+-monoid membership: target = sum Z_+ gens.  Exact when everything is
// network-class; Undecided otherwise beyond the search cap.
Tri monoid_member(const std::vector<Root>& gens, const Root& target, int search_cap = 24);

// Lattice membership: target in sum Z gens (always exact, via HNF).
bool lattice_member(const std::vector<Root>& gens, const Root& target);

// Enumerate support points within the L-inf box of radius R around center.
std::vector<Weight> enumerate_box(const SupportSet& s, const Weight& center, int R);

}  // namespace wittsuper
