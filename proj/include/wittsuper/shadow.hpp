#pragma once

#include <map>
#include <string>

#include "wittsuper/support.hpp"

namespace wittsuper {

enum class DirectionClass { Plus, Minus, Finite, Infinite };

inline const char* to_string(DirectionClass d) {
    switch (d) {
        case DirectionClass::Plus: return "plus";
        case DirectionClass::Minus: return "minus";
        case DirectionClass::Finite: return "finite";
        case DirectionClass::Infinite: return "infinite";
    }
    return "?";
}

// Classification of n_alpha^lam = {q : lam + q alpha in S}:
//   bounded only from above -> Plus, only from below -> Minus,
//   both -> Finite, neither -> Infinite.
// Exact for network-class supports; otherwise window enumeration plus
// recession certificates, raising UndecidedWithinWindow when they disagree.
DirectionClass classify_direction(const SupportSet& S, const Weight& lam, const Root& alpha, int window = 12);

struct ShadowPartition {
    int m = 0;
    std::vector<Root> plus, minus, finite, infinite;       // partition of Delta'
    std::vector<Root> gamma_gens;                          // {a in Delta' : lam + Z_+ a in S}
    bool gamma_consistent = true;                          // direction classes match the Gamma reformulation
    std::vector<std::string> diagnostics;

    const std::vector<Root>* part_of(const Root& a) const;
};

ShadowPartition shadow(const SupportSet& S, const Weight& lam, int window = 12);

// K_lam = {alpha in Delta' : lam + alpha not in S}.
std::vector<Root> k_lambda(const SupportSet& S, const Weight& lam);

struct ExtremalResult {
    bool extremal = false;
    int window = 0;  // certificate radius
    Weight witness;  // a mu with K_lam strictly contained in K_mu, when not extremal
};
ExtremalResult is_extremal(const SupportSet& S, const Weight& lam, int window = 6);

struct ClosureReport {
    bool closure_k = true;        // alpha,beta in K_lam => alpha+beta in K_lam
    bool closure_kbar = true;     // same for the complement
    bool lemma9_match = true;     // K_lam = Delta'^+ u {alpha in Delta'^F : (lam,alpha) >= 0}
    bool corollary1_parabolic = true;
    std::vector<std::string> counterexamples;
    bool all() const { return closure_k && closure_kbar && lemma9_match && corollary1_parabolic; }
};
ClosureReport check_closure_lemmas(const SupportSet& S, const Weight& lam, int window = 6);

struct ParabolicDecomposition {
    std::vector<Root> plus, zero, minus;  // partition of the capped Delta
};

// tri splits {alpha in Delta'^F : (lam,alpha) = 0} into tri_plus/tri_minus.
ParabolicDecomposition parabolic_decomposition(const ShadowPartition& sh, const Weight& lam,
                                               const std::vector<Root>& tri_plus,
                                               const std::vector<Root>& tri_minus, int cap);

struct LeviSpec {
    int q = 0;
    int n = 0;
    std::vector<std::vector<int>> k_blocks;  // connected components of the remaining indices
};

LeviSpec levi_shape(const ShadowPartition& sh, int n = 0);

}  // namespace wittsuper
