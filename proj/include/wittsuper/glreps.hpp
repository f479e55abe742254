#pragma once

#include <optional>

#include "wittsuper/descriptor.hpp"
#include "wittsuper/glword.hpp"

namespace wittsuper {

// column -> (row -> coeff)
using ColMat = std::map<int, std::map<int, Rational>>;

// Concrete realization data when the module is an E-eigenspace of a
// descriptor-realized K_{n,m} module; needed by the diff operator.
struct FundRealization {
    ModuleDescriptor base;  // over K_{n,m}
    Rational level;
    std::vector<PState> states;  // per basis index
};

// Finite-dimensional weight module over gl_{m,n}: ordered basis with weights
// over the full even Cartan (all E_{ii}), parities, and exact sparse action
// matrices per matrix unit.
struct FinDimModule {
    Signature gl;
    std::vector<Weight> weights;  // each of length m+n
    std::vector<int> parities;
    std::map<std::pair<int, int>, ColMat> action;
    std::vector<int> kac_top;  // generating top copy (Kac modules only)
    std::optional<FundRealization> fund;

    int dim() const { return static_cast<int>(weights.size()); }

    void add_entry(int i, int j, int row, int col, const Rational& c) {
        if (c == 0) return;
        auto& m = action[{i, j}][col][row];
        m += c;
        if (m == 0) {
            action[{i, j}][col].erase(row);
            if (action[{i, j}][col].empty()) action[{i, j}].erase(col);
            if (action[{i, j}].empty()) action.erase({i, j});
        }
    }

    std::map<int, Rational> act_unit(int i, int j, int basis_index) const {
        auto it = action.find({i, j});
        if (it == action.end()) return {};
        auto jt = it->second.find(basis_index);
        if (jt == it->second.end()) return {};
        return jt->second;
    }

    std::map<int, Rational> act_word(const GlWord& w, int basis_index) const {
        std::map<int, Rational> cur{{basis_index, Rational(1)}};
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            std::map<int, Rational> next;
            for (const auto& [b, c] : cur)
                for (const auto& [r, e] : act_unit(it->first, it->second, b)) {
                    next[r] += c * e;
                    if (next[r] == 0) next.erase(r);
                }
            cur = std::move(next);
        }
        return cur;
    }

    // action([E_ab,E_cd]) = matrix super-commutator, exactly, on all pairs.
    bool check_brackets(std::string* firstfail = nullptr) const;
    // diagonal action matches the recorded weights
    bool check_weights(std::string* firstfail = nullptr) const;
};

// 1-dimensional module x.1 = str(x).
FinDimModule str_module(Signature gl, bool parity = false);

// Kac module K(V) on Lambda(gl^-1) ox V for a gl^0 module V (even, killed by
// gl^1 after extension).
FinDimModule kac_module(const FinDimModule& V);

struct SimpleTopResult {
    FinDimModule module;
    bool sweep_exhaustive = true;  // weight spaces of dim > 3 degrade the sweep
    int radical_dim = 0;
};
SimpleTopResult simple_top(const FinDimModule& K);

// E-eigenspace P'[level] of a descriptor-realized K_{n,m} module, as a
// gl_{m,n} module via E_{ij} -> t'_i d'_j with
// (t'_1..t'_{m+n}) = (xi_1..xi_m, t_1..t_n).
// Concrete only for base = A or of A^sigma type; anything else raises.
FinDimModule realize_fundamental(const ModuleDescriptor& base, const Rational& level, Signature gl);

bool fundamental_is_finite(const ModuleDescriptor& base);

// A 1-dimensional gl^0 = gl_m + gl_n module of the given Cartan weight.
FinDimModule gl0_character(Signature gl, const Weight& wt);

// The natural gl_m module C^m placed as a gl^0=gl_{m,0} module (n = 0 slots
// untouched); used by fixtures.
FinDimModule gl0_natural_even(Signature gl);

}  // namespace wittsuper
