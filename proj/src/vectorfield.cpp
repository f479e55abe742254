#include "wittsuper/vectorfield.hpp"

namespace wittsuper {

VectorField bracket_w(const VectorField& x, const VectorField& y) {
    check_same_signature(x.signature(), y.signature());
    const Signature& sig = x.signature();
    VectorField out(sig);
    SuperMonomial d, prod;
    for (const auto& [tx, cx] : x.terms()) {
        int px = VectorField::term_parity(sig, tx);
        for (const auto& [ty, cy] : y.terms()) {
            int py = VectorField::term_parity(sig, ty);
            Rational c = cx * cy;
            // f d_i(g) d_j
            Rational k = derive_monomial(sig, tx.dir, ty.mono, d);
            if (k != 0) {
                int s = mul_monomial(tx.mono, d, prod);
                if (s != 0) out.add_term(prod, ty.dir, c * k * s);
            }
            // - (-1)^{|x||y|} g d_j(f) d_i
            k = derive_monomial(sig, ty.dir, tx.mono, d);
            if (k != 0) {
                int s = mul_monomial(ty.mono, d, prod);
                if (s != 0) {
                    Rational coeff = c * k * s;
                    if ((px & py) == 0) coeff = -coeff;
                    out.add_term(prod, tx.dir, coeff);
                }
            }
        }
    }
    return out;
}

WTildeElement bracket_tilde(const WTildeElement& x, const WTildeElement& y) {
    check_same_signature(x.w.signature(), y.w.signature());
    const Signature& sig = x.w.signature();
    WTildeElement out(sig);
    out.a = SuperPolynomial(sig, x.a.context());
    out.w = bracket_w(x.w, y.w);
    // [x_W, b] = x_W(b)
    out.a += apply_field(x.w, y.a);
    // [a, y_W] = -(-1)^{|a||y_W|} y_W(a), term by homogeneous term.
    for (const auto& [ty, cy] : y.w.terms()) {
        int py = VectorField::term_parity(sig, ty);
        VectorField single = VectorField::basis(sig, ty.mono, ty.dir, cy);
        for (const auto& [xa, ca] : x.a.terms()) {
            SuperPolynomial part =
                apply_field(single, SuperPolynomial::monomial(sig, xa, ca, x.a.context()));
            int pa = xa.parity();
            if ((pa & py) == 0) part *= Rational(-1);
            out.a += part;
        }
    }
    return out;
}

}  // namespace wittsuper
