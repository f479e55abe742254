#pragma once

#include "wittsuper/glreps.hpp"
#include "wittsuper/linalg.hpp"
#include "wittsuper/pi.hpp"

namespace wittsuper {

// Basis key of a realized tensor module: P-state, M index, optional S index.
struct WinKey {
    PState p;
    int mi = 0;
    int si = -1;

    friend auto operator<=>(const WinKey&, const WinKey&) = default;
};

using WinVec = std::map<WinKey, Rational>;

inline void winvec_add(WinVec& v, const WinKey& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = v.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) v.erase(it);
    }
}

using Box = std::vector<std::pair<Rational, Rational>>;  // per even coordinate

// Weight window over F(P,M) or, with S, over the three-factor module.  The
// basis is the complete set of weight vectors inside the box; operators are
// applied exactly and may carry vectors outside the box (keys stay
// representable), so identity checks never truncate.
class WindowModule {
  public:
    WindowModule(ModuleDescriptor P, FinDimModule M, std::optional<FinDimModule> S, Box box,
                 long budget = 200000);

    const ModuleDescriptor& P() const { return P_; }
    const FinDimModule& M() const { return M_; }
    bool has_S() const { return S_.has_value(); }
    const FinDimModule& S() const { return *S_; }
    const Box& box() const { return box_; }

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<WinKey>& basis() const { return basis_; }
    std::optional<int> index_of(const WinKey& k) const {
        auto it = index_.find(k);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    // h-weight of a key (P exponents plus the first even coordinates of the
    // M weight); S never moves the h_q-weight.
    Weight h_weight(const WinKey& k) const;
    int parity(const WinKey& k) const;
    bool weight_in_box(const Weight& w) const;
    const std::map<Weight, std::vector<int>>& spaces() const { return spaces_; }

    WinVec apply(const KGlElement& op, const WinKey& k) const;
    WinVec apply(const KGlElement& op, const WinVec& v) const;
    // action through the first pi homomorphism
    WinVec apply_field_op(const VectorField& x, const WinKey& k) const;
    WinVec apply_field_op(const VectorField& x, const WinVec& v) const;
    // action of an Ubar element through the second pi
    WinVec apply_env(const EnvElement& e, const WinKey& k) const;
    WinVec apply_env(const EnvElement& e, const WinVec& v) const;

  private:
    ModuleDescriptor P_;
    FinDimModule M_;
    std::optional<FinDimModule> S_;
    Box box_;
    std::vector<WinKey> basis_;
    std::map<WinKey, int> index_;
    std::map<Weight, std::vector<int>> spaces_;
};

// diff = sum_i d_i ox xi'_i - sum_l d_{m+l} ox t'_l between adjacent
// fundamental windows over the same P: src has M = P'[lev], dst M = P'[lev+1].
WinVec apply_diff(const WindowModule& src, const WindowModule& dst, const WinKey& k);
WinVec apply_diff(const WindowModule& src, const WindowModule& dst, const WinVec& v);

// Per-weight-space image of diff inside the dst window: weight -> span.
std::map<Weight, RowSpace> diff_image_spaces(const WindowModule& src, const WindowModule& dst);

// dense coordinates of a WinVec on a weight space of `win` (throws on keys
// outside the space)
std::vector<Rational> coordinates_on_space(const WindowModule& win, const Weight& w, const WinVec& v);

}  // namespace wittsuper
