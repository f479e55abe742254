#pragma once

#include "wittsuper/shadow.hpp"
#include "wittsuper/window.hpp"

namespace wittsuper {

// Input tag for the gl-module side of a tensor module.
enum class MTagKind { NonFundamental, Fundamental, Trivial, Str, PiStr };

struct MTag {
    MTagKind kind = MTagKind::Trivial;
    // Fundamental payload (also filled by normalization of the aliases):
    ModuleDescriptor base;  // over K_{n,m}
    Rational level;
    // Delta''-side shadow for symbolic non-fundamental M (defaults to the
    // all-finite shadow of a finite-dimensional module).
    std::optional<ShadowPartition> m_shadow;

    static MTag non_fundamental() { return MTag{MTagKind::NonFundamental, {}, Rational(0), std::nullopt}; }
    static MTag fundamental(ModuleDescriptor base, Rational level) {
        return MTag{MTagKind::Fundamental, std::move(base), std::move(level), std::nullopt};
    }
    static MTag trivial() { return MTag{MTagKind::Trivial, {}, Rational(0), std::nullopt}; }
    static MTag str() { return MTag{MTagKind::Str, {}, Rational(0), std::nullopt}; }
    static MTag pi_str() { return MTag{MTagKind::PiStr, {}, Rational(0), std::nullopt}; }
};

// Resolves the alias tags into concrete fundamental data for gl_{m,n}:
// trivial = A[0], Str = A^sigma[m-n] (plus parity for Pi(Str)).
MTag normalize_mtag(const MTag& tag, Signature gl);

bool mtag_is_trivial(const MTag& normalized, Signature gl);
bool mtag_is_str_like(const MTag& normalized, Signature gl);

struct SimplicityVerdict {
    std::string case_tag;  // Simple | UniqueSimpleSubmodule | NotSimpleTrivialPair
    bool simple = false;
    std::string rule;  // which table row fired
    // UniqueSimpleSubmodule payload:
    Rational adjacent_level;
    std::optional<Weight> lambda_prime;  // full H_{n,m}-weight, lex-smallest
    std::string detail;
};

SimplicityVerdict simplicity_classify(const ModuleDescriptor& P, const MTag& M);

// (Delta''^I_P u Delta''^-_P) subset (Delta''^F_V u Delta''^-_V)
bool hc_condition(const ModuleDescriptor& P1, const ShadowPartition& v1_shadow);
// finite-dimensional V side
ShadowPartition all_finite_shadow(int m);

// F2 simplicity: simple iff S nontrivial, or S trivial and F(P,M) simple.
bool module_is_trivial(const FinDimModule& S);
SimplicityVerdict f2_simplicity(const FinDimModule& S, const SimplicityVerdict& f_verdict);

struct MainVerdict {
    int case_id = 0;  // 1 = simple F(P,M), 2 = diff image, 3 = trivial
    std::string description;
    bool hc = false;
    SimplicityVerdict simplicity;
};
MainVerdict main_theorem_classify(const ModuleDescriptor& P, const MTag& M);

// ---- window evidence -------------------------------------------------

struct DiffEvidence {
    bool nonzero = false, proper = false, invariant = true;
    long image_rank = 0, window_dim = 0;
    long invariance_checks = 0, skipped_boundary = 0;
};
// src = F(P, P'[level]), dst = F(P, P'[level+1]) over the box; invariance of
// the image under all W basis elements of degree <= deg_cap.
DiffEvidence diff_image_evidence(const ModuleDescriptor& P, const ModuleDescriptor& base, const Rational& level,
                                 const Box& box, int deg_cap);

struct ReachEvidence {
    int starts = 0;
    int predicted_spaces = 0;
    bool all_reached = true;
};
ReachEvidence reachability_evidence(const WindowModule& win, int deg_cap, int num_starts, unsigned seed);

// window oracle for the P = sum_s d_s P table (states with exponents within
// `radius`; every inner state must be hit by some derivative)
bool derivative_sum_full_window(const ModuleDescriptor& P, int radius);

// all W_{m,n} basis elements with monomial degree <= cap
std::vector<VectorField> w_basis_elements(Signature sig, int cap);

// locate the lex-smallest weight of P' at the adjacent level with nonzero
// diff image (window search)
std::optional<Weight> locate_lambda_prime(const ModuleDescriptor& P, const ModuleDescriptor& base,
                                          const Rational& level, const Box& box);

}  // namespace wittsuper
