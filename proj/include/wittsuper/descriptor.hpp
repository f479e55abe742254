#pragma once

#include <optional>
#include <string>

#include "wittsuper/support.hpp"
#include "wittsuper/weyl.hpp"

namespace wittsuper {

// Factor types of a simple weight K-module, one per even coordinate:
//   Polynomial       C[t]            exponents Z_+
//   LaurentShift     t^s C[t^+-1]    exponents s + Z, s not in Z
//   LaurentQuotient  C[t^+-1]/C[t]   exponents -1 - Z_+
// The odd part is always C[xi_1] ox ... ox C[xi_n].
enum class FactorType { Polynomial, LaurentShift, LaurentQuotient };

struct EvenFactor {
    FactorType type = FactorType::Polynomial;
    Rational shift;  // LaurentShift only; must not be an integer

    friend bool operator==(const EvenFactor&, const EvenFactor&) = default;
};

// Basis state of a descriptor-realized module: integer offsets k per even
// coordinate plus the odd subset.  The actual exponent is
//   Polynomial: k (k >= 0), LaurentShift: shift + k, LaurentQuotient: -1 - k (k >= 0).
struct PState {
    std::vector<int> k;
    OddSet odd;

    friend auto operator<=>(const PState&, const PState&) = default;
};

struct ModuleDescriptor {
    Signature sig;  // K_{sig.m, sig.n}
    std::vector<EvenFactor> factors;
    bool parity_flag = false;  // tensor with the parity-change

    static ModuleDescriptor A(Signature sig, bool parity = false) {
        ModuleDescriptor d;
        d.sig = sig;
        d.factors.assign(static_cast<size_t>(sig.m), EvenFactor{});
        d.parity_flag = parity;
        return d;
    }
    static ModuleDescriptor A_sigma_type(Signature sig, bool extra_parity = false) {
        ModuleDescriptor d;
        d.sig = sig;
        d.factors.assign(static_cast<size_t>(sig.m), EvenFactor{FactorType::LaurentQuotient, Rational(0)});
        d.parity_flag = ((sig.n & 1) != 0) != extra_parity;
        return d;
    }

    void validate() const {
        if (static_cast<int>(factors.size()) != sig.m) fail(ErrorKind::BadInput, "descriptor arity");
        for (const EvenFactor& f : factors)
            if (f.type == FactorType::LaurentShift && is_integer(f.shift))
                fail(ErrorKind::BadInput, "LaurentShift requires a non-integral shift");
    }

    bool is_all_polynomial() const {
        return std::all_of(factors.begin(), factors.end(),
                           [](const EvenFactor& f) { return f.type == FactorType::Polynomial; });
    }
    bool is_all_laurent_quotient() const {
        return std::all_of(factors.begin(), factors.end(),
                           [](const EvenFactor& f) { return f.type == FactorType::LaurentQuotient; });
    }

    Rational exponent(int coord, int k) const {
        const EvenFactor& f = factors[static_cast<size_t>(coord)];
        switch (f.type) {
            case FactorType::Polynomial: return Rational(k);
            case FactorType::LaurentShift: return f.shift + k;
            case FactorType::LaurentQuotient: return Rational(-1 - k);
        }
        return Rational(0);
    }
    bool offset_valid(int coord, int k) const {
        return factors[static_cast<size_t>(coord)].type == FactorType::LaurentShift || k >= 0;
    }
    // Offsets k with exponent in [lo, hi]; nullopt when empty.
    std::optional<std::pair<Integer, Integer>> offsets_in(int coord, const Rational& lo, const Rational& hi) const;

    int state_parity(const PState& s) const {
        return (static_cast<int>(s.odd.size()) + (parity_flag ? 1 : 0)) & 1;
    }
    // h-weight (even coordinates) of a state.
    Weight h_weight(const PState& s) const {
        Weight w(static_cast<size_t>(sig.m));
        for (int c = 0; c < sig.m; ++c) w[static_cast<size_t>(c)] = exponent(c, s.k[static_cast<size_t>(c)]);
        return w;
    }
    // Full H-weight over all m+n Euler operators.
    Weight full_weight(const PState& s) const {
        Weight w = h_weight(s);
        for (int j = 1; j <= sig.n; ++j)
            w.push_back(std::binary_search(s.odd.begin(), s.odd.end(), j) ? Rational(1) : Rational(0));
        return w;
    }

    // supp as a product cone (single component, network-class).
    SupportSet support() const;

    // d restricted to one factor is onto for Polynomial and LaurentShift.
    bool factor_derivative_onto(int coord) const {
        return factors[static_cast<size_t>(coord)].type != FactorType::LaurentQuotient;
    }
    // P = sum_s d_s P holds iff some tensor factor has onto derivative (the
    // odd factors never do).
    bool derivative_sum_full() const {
        for (int c = 0; c < sig.m; ++c)
            if (factor_derivative_onto(c)) return true;
        return false;
    }

    std::string to_string() const;

    friend bool operator==(const ModuleDescriptor&, const ModuleDescriptor&) = default;
};

// Generator actions on a state; return the coefficient (0 = annihilated).
Rational apply_t(const ModuleDescriptor& d, int coord, PState& s);    // multiply by t_{coord+1}
Rational apply_d(const ModuleDescriptor& d, int coord, PState& s);    // d/dt_{coord+1}
Rational apply_xi(const ModuleDescriptor& d, int j, PState& s);       // multiply by xi_j
Rational apply_dxi(const ModuleDescriptor& d, int j, PState& s);      // d/dxi_j

// Action of a normal-ordered Weyl monomial on a state (single output path).
std::optional<std::pair<PState, Rational>> apply_weyl_monomial(const ModuleDescriptor& d, const WeylMonomial& w,
                                                               const PState& s);

// sigma(t_i) = d_i, sigma(d_i) = (-1)^{|t_i|+1} t_i transported to descriptors:
// Polynomial <-> LaurentQuotient, shift s -> -1-s, parity shifted by n mod 2.
ModuleDescriptor sigma_twist(const ModuleDescriptor& d);

}  // namespace wittsuper
