#include "wittsuper/descriptor.hpp"

namespace wittsuper {

std::optional<std::pair<Integer, Integer>> ModuleDescriptor::offsets_in(int coord, const Rational& lo,
                                                                        const Rational& hi) const {
    const EvenFactor& f = factors[static_cast<size_t>(coord)];
    Integer klo, khi;
    switch (f.type) {
        case FactorType::Polynomial:
            klo = ceil_int(lo);
            if (klo < 0) klo = 0;
            khi = floor_int(hi);
            break;
        case FactorType::LaurentShift:
            klo = ceil_int(lo - f.shift);
            khi = floor_int(hi - f.shift);
            break;
        case FactorType::LaurentQuotient:
            // exponent -1-k in [lo,hi]  <=>  k in [-1-hi, -1-lo]
            klo = ceil_int(Rational(-1) - hi);
            if (klo < 0) klo = 0;
            khi = floor_int(Rational(-1) - lo);
            break;
    }
    if (klo > khi) return std::nullopt;
    return std::make_pair(klo, khi);
}

SupportSet ModuleDescriptor::support() const {
    SupportSet s;
    s.m = sig.m;
    ShiftedCone c;
    c.base.resize(static_cast<size_t>(sig.m));
    for (int i = 0; i < sig.m; ++i) {
        const EvenFactor& f = factors[static_cast<size_t>(i)];
        switch (f.type) {
            case FactorType::Polynomial:
                c.base[static_cast<size_t>(i)] = 0;
                c.plus_gens.push_back(eps(i + 1, sig.m));
                break;
            case FactorType::LaurentShift:
                c.base[static_cast<size_t>(i)] = f.shift;
                c.free_gens.push_back(eps(i + 1, sig.m));
                break;
            case FactorType::LaurentQuotient:
                c.base[static_cast<size_t>(i)] = -1;
                c.plus_gens.push_back(negate(eps(i + 1, sig.m)));
                break;
        }
    }
    s.components.push_back(std::move(c));
    return s;
}

std::string ModuleDescriptor::to_string() const {
    std::string out = parity_flag ? "Pi:" : "";
    for (int i = 0; i < sig.m; ++i) {
        if (i) out += ",";
        const EvenFactor& f = factors[static_cast<size_t>(i)];
        switch (f.type) {
            case FactorType::Polynomial: out += "poly"; break;
            case FactorType::LaurentShift: out += "laurent(" + rat_to_string(f.shift) + ")"; break;
            case FactorType::LaurentQuotient: out += "lquot"; break;
        }
    }
    if (sig.m == 0) out += "-";
    out += "|n=" + std::to_string(sig.n);
    return out;
}

Rational apply_t(const ModuleDescriptor& d, int coord, PState& s) {
    const EvenFactor& f = d.factors[static_cast<size_t>(coord)];
    int& k = s.k[static_cast<size_t>(coord)];
    switch (f.type) {
        case FactorType::Polynomial:
        case FactorType::LaurentShift:
            ++k;
            return Rational(1);
        case FactorType::LaurentQuotient:
            if (k == 0) return Rational(0);  // lands in C[t], killed in the quotient
            --k;
            return Rational(1);
    }
    return Rational(0);
}

Rational apply_d(const ModuleDescriptor& d, int coord, PState& s) {
    const EvenFactor& f = d.factors[static_cast<size_t>(coord)];
    int& k = s.k[static_cast<size_t>(coord)];
    switch (f.type) {
        case FactorType::Polynomial: {
            if (k == 0) return Rational(0);
            Rational c(k);
            --k;
            return c;
        }
        case FactorType::LaurentShift: {
            Rational c = f.shift + k;
            --k;
            return c;
        }
        case FactorType::LaurentQuotient: {
            Rational c(-1 - k);
            ++k;
            return c;
        }
    }
    return Rational(0);
}

Rational apply_xi(const ModuleDescriptor& d, int j, PState& s) {
    (void)d;
    auto it = std::lower_bound(s.odd.begin(), s.odd.end(), j);
    if (it != s.odd.end() && *it == j) return Rational(0);
    size_t pos = static_cast<size_t>(it - s.odd.begin());
    s.odd.insert(it, j);
    return (pos % 2 == 0) ? Rational(1) : Rational(-1);
}

Rational apply_dxi(const ModuleDescriptor& d, int j, PState& s) {
    (void)d;
    auto it = std::lower_bound(s.odd.begin(), s.odd.end(), j);
    if (it == s.odd.end() || *it != j) return Rational(0);
    size_t pos = static_cast<size_t>(it - s.odd.begin());
    s.odd.erase(it);
    return (pos % 2 == 0) ? Rational(1) : Rational(-1);
}

std::optional<std::pair<PState, Rational>> apply_weyl_monomial(const ModuleDescriptor& d, const WeylMonomial& w,
                                                               const PState& s) {
    PState cur = s;
    Rational coeff(1);
    // annihilators right to left: dxi_J then d^beta
    for (auto it = w.J.rbegin(); it != w.J.rend(); ++it) {
        coeff *= apply_dxi(d, *it, cur);
        if (coeff == 0) return std::nullopt;
    }
    for (int c = d.sig.m - 1; c >= 0; --c)
        for (int rep = 0; rep < w.beta[static_cast<size_t>(c)]; ++rep) {
            coeff *= apply_d(d, c, cur);
            if (coeff == 0) return std::nullopt;
        }
    // creators right to left: xi_I then t^alpha
    for (auto it = w.I.rbegin(); it != w.I.rend(); ++it) {
        coeff *= apply_xi(d, *it, cur);
        if (coeff == 0) return std::nullopt;
    }
    for (int c = d.sig.m - 1; c >= 0; --c)
        for (int rep = 0; rep < w.alpha[static_cast<size_t>(c)]; ++rep) {
            coeff *= apply_t(d, c, cur);
            if (coeff == 0) return std::nullopt;
        }
    return std::make_pair(cur, coeff);
}

ModuleDescriptor sigma_twist(const ModuleDescriptor& d) {
    ModuleDescriptor out = d;
    for (EvenFactor& f : out.factors) {
        switch (f.type) {
            case FactorType::Polynomial:
                f.type = FactorType::LaurentQuotient;
                f.shift = 0;
                break;
            case FactorType::LaurentQuotient:
                f.type = FactorType::Polynomial;
                f.shift = 0;
                break;
            case FactorType::LaurentShift: f.shift = Rational(-1) - f.shift; break;
        }
    }
    if (d.sig.n & 1) out.parity_flag = !out.parity_flag;
    return out;
}

}  // namespace wittsuper
