#pragma once

#include <tuple>

#include "wittsuper/glword.hpp"
#include "wittsuper/weyl.hpp"

namespace wittsuper {

// Element of K ox U(gl) ox U(k).  The third slot is used by the second pi
// homomorphism; for the first one it stays empty (k-part = the empty word).
// The k factor is always even, so only the U(gl) parity enters tensor signs.
class KGlElement {
  public:
    using Key = std::tuple<WeylMonomial, GlWord, GlWord>;

    KGlElement() = default;
    KGlElement(Signature ksig, Signature glsig, Signature kksig = Signature{0, 0})
        : ksig_(ksig), glsig_(glsig), kksig_(kksig) {}

    static KGlElement term(Signature ksig, Signature glsig, const WeylMonomial& w, const GlWord& u,
                           const Rational& c, Signature kksig = Signature{0, 0}, const GlWord& k = {}) {
        KGlElement e(ksig, glsig, kksig);
        e.add(Key{w, u, k}, c);
        return e;
    }

    const Signature& ksig() const { return ksig_; }
    const Signature& glsig() const { return glsig_; }
    const Signature& kksig() const { return kksig_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Key& key, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    KGlElement& operator+=(const KGlElement& o) {
        check_shapes(o);
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    KGlElement& operator-=(const KGlElement& o) {
        check_shapes(o);
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    KGlElement& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }
    friend KGlElement operator+(KGlElement a, const KGlElement& b) { return a += b; }
    friend KGlElement operator-(KGlElement a, const KGlElement& b) { return a -= b; }
    friend bool operator==(const KGlElement& a, const KGlElement& b) { return a.terms_ == b.terms_; }

    int term_parity(const Key& key) const {
        return (std::get<0>(key).parity() + gl_word_parity(glsig_, std::get<1>(key))) & 1;
    }

  private:
    void check_shapes(const KGlElement& o) const {
        check_same_signature(ksig_, o.ksig_);
        check_same_signature(glsig_, o.glsig_);
        check_same_signature(kksig_, o.kksig_);
    }

    Signature ksig_{}, glsig_{}, kksig_{};
    std::map<Key, Rational> terms_;
};

KGlElement kgl_mul(const KGlElement& a, const KGlElement& b);

// Super-commutator in K ox U(gl) ox U(k).
KGlElement kgl_bracket(const KGlElement& a, const KGlElement& b);

}  // namespace wittsuper
