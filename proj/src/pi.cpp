#include "wittsuper/pi.hpp"

namespace wittsuper {

KGlElement pi_w(const VectorField& x) {
    const Signature sig = x.signature();
    KGlElement out(sig, sig);
    for (const auto& [t, c] : x.terms()) {
        WeylElement head = WeylElement::field_word(sig, t.mono, t.dir, Rational(1));
        for (const auto& [w, cw] : head.words()) out.add({w, {}, {}}, c * cw);
        int isz = static_cast<int>(t.mono.odd.size());
        for (int s = 1; s <= sig.total(); ++s) {
            SuperMonomial ds;
            Rational k = derive_monomial(sig, s, t.mono, ds);
            if (k == 0) continue;
            Rational coeff = c * k;
            if (s > sig.m && ((isz - 1) & 1)) coeff = -coeff;
            WeylMonomial w{ds.alpha, ds.odd, std::vector<int>(static_cast<size_t>(sig.m), 0), {}};
            out.add({w, {{s, t.dir}}, {}}, coeff);
        }
    }
    return out;
}

KGlElement pi_second(const EnvAlphabet& alph, const EnvLetter& letter) {
    const Signature ksig = pi2_ksig(alph), glsig = pi2_glsig(alph), kksig = pi2_kksig(alph);
    KGlElement out(ksig, glsig, kksig);
    switch (letter.kind) {
        case LetterKind::A: {
            WeylMonomial w{letter.mono.alpha, letter.mono.odd, std::vector<int>(static_cast<size_t>(alph.q), 0), {}};
            out.add({w, {}, {}}, Rational(1));
            return out;
        }
        case LetterKind::KA: {
            WeylMonomial w{letter.mono.alpha, letter.mono.odd, std::vector<int>(static_cast<size_t>(alph.q), 0), {}};
            out.add({w, {}, {letter.kx}}, Rational(1));
            return out;
        }
        case LetterKind::W: {
            WeylElement head = WeylElement::field_word(ksig, letter.mono, letter.dir, Rational(1));
            for (const auto& [w, cw] : head.words()) out.add({w, {}, {}}, cw);
            int isz = static_cast<int>(letter.mono.odd.size());
            for (int s = 1; s <= alph.q + alph.n; ++s) {
                SuperMonomial ds;
                Rational k = derive_monomial(ksig, s, letter.mono, ds);
                if (k == 0) continue;
                Rational coeff = k;
                if (s > alph.q && ((isz - 1) & 1)) coeff = -coeff;
                WeylMonomial w{ds.alpha, ds.odd, std::vector<int>(static_cast<size_t>(alph.q), 0), {}};
                out.add({w, {{s, letter.dir}}, {}}, coeff);
            }
            return out;
        }
    }
    fail(ErrorKind::AlphabetError, "unknown letter kind");
}

KGlElement pi_second(const EnvElement& e) {
    const EnvAlphabet& alph = e.alphabet();
    KGlElement out(pi2_ksig(alph), pi2_glsig(alph), pi2_kksig(alph));
    for (const auto& [word, c] : e.words()) {
        KGlElement prod(pi2_ksig(alph), pi2_glsig(alph), pi2_kksig(alph));
        prod.add({WeylMonomial{std::vector<int>(static_cast<size_t>(alph.q), 0),
                               {},
                               std::vector<int>(static_cast<size_t>(alph.q), 0),
                               {}},
                  {},
                  {}},
                 c);
        for (const EnvLetter& l : word) prod = kgl_mul(prod, pi_second(alph, l));
        out += prod;
    }
    return out;
}

}  // namespace wittsuper
