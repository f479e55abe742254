#include "wittsuper/kgl.hpp"

namespace wittsuper {

KGlElement kgl_mul(const KGlElement& a, const KGlElement& b) {
    KGlElement out(a.ksig(), a.glsig(), a.kksig());
    for (const auto& [ka, ca] : a.terms()) {
        const auto& [wa, ua, xa] = ka;
        int pu = (gl_word_parity(a.glsig(), ua)) & 1;  // k-part is even
        for (const auto& [kb, cb] : b.terms()) {
            const auto& [wb, ub, xb] = kb;
            // (w ox u ox x)(w' ox u' ox x') = (-1)^{|u||w'|} ww' ox uu' ox xx'
            Rational c = ca * cb;
            if (pu && wb.parity()) c = -c;
            WeylElement wprod = weyl_mul(WeylElement::word(a.ksig(), wa), WeylElement::word(a.ksig(), wb));
            GlWord ucat = ua;
            ucat.insert(ucat.end(), ub.begin(), ub.end());
            UglElement uprod = gl_normalize(a.glsig(), ucat, Rational(1));
            GlWord xcat = xa;
            xcat.insert(xcat.end(), xb.begin(), xb.end());
            UglElement xprod = gl_normalize(a.kksig(), xcat, Rational(1));
            for (const auto& [w, cw] : wprod.words())
                for (const auto& [u, cu] : uprod.words())
                    for (const auto& [x, cx] : xprod.words()) out.add({w, u, x}, c * cw * cu * cx);
        }
    }
    return out;
}

KGlElement kgl_bracket(const KGlElement& a, const KGlElement& b) {
    KGlElement out = kgl_mul(a, b);
    // term-by-term signs: both arguments decompose into homogeneous pieces
    for (const auto& [ka, ca] : a.terms()) {
        KGlElement ea(a.ksig(), a.glsig(), a.kksig());
        ea.add(ka, ca);
        int pa = a.term_parity(ka);
        for (const auto& [kb, cb] : b.terms()) {
            KGlElement eb(b.ksig(), b.glsig(), b.kksig());
            eb.add(kb, cb);
            int pb = b.term_parity(kb);
            KGlElement ba = kgl_mul(eb, ea);
            if (pa && pb)
                out += ba;
            else
                out -= ba;
        }
    }
    return out;
}

}  // namespace wittsuper
