#pragma once

#include <map>

#include "wittsuper/superpoly.hpp"

namespace wittsuper {

struct FieldTerm {
    SuperMonomial mono;
    int dir = 1;  // 1..m+n

    friend auto operator<=>(const FieldTerm&, const FieldTerm&) = default;
};

// Element of W_{m,n}: a finite sum of basis terms t^alpha xi_I d_i.  Parity
// of a term is (|I| + [i > m]) mod 2.  Canonical form on construction.
class VectorField {
  public:
    VectorField() = default;
    explicit VectorField(Signature sig) : sig_(sig) {}

    static VectorField basis(Signature sig, const SuperMonomial& x, int dir, const Rational& c = Rational(1)) {
        VectorField v(sig);
        v.add_term(x, dir, c);
        return v;
    }

    const Signature& signature() const { return sig_; }
    const std::map<FieldTerm, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const SuperMonomial& x, int dir, const Rational& c) {
        if (c == 0) return;
        sig_.check_index(dir);
        if (static_cast<int>(x.alpha.size()) != sig_.m) fail(ErrorKind::SignatureMismatch, "monomial arity");
        for (int a : x.alpha)
            if (a < 0) fail(ErrorKind::BadInput, "negative exponent in W_{m,n}");
        if (!is_sorted_strict(x.odd) || (!x.odd.empty() && x.odd.back() > sig_.n))
            fail(ErrorKind::BadInput, "bad odd set");
        FieldTerm key{x, dir};
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    VectorField& operator+=(const VectorField& o) {
        check_same_signature(sig_, o.sig_);
        for (const auto& [t, c] : o.terms_) add_term(t.mono, t.dir, c);
        return *this;
    }
    VectorField& operator-=(const VectorField& o) {
        check_same_signature(sig_, o.sig_);
        for (const auto& [t, c] : o.terms_) add_term(t.mono, t.dir, -c);
        return *this;
    }
    VectorField& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [t, v] : terms_) v *= c;
        return *this;
    }
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(VectorField a, const Rational& c) { return a *= c; }
    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }

    bool is_homogeneous(int* parity_out = nullptr) const {
        int p = -1;
        for (const auto& [t, c] : terms_) {
            int tp = term_parity(sig_, t);
            if (p == -1)
                p = tp;
            else if (p != tp)
                return false;
        }
        if (parity_out) *parity_out = (p == -1 ? 0 : p);
        return true;
    }

    static int term_parity(const Signature& sig, const FieldTerm& t) {
        return (t.mono.parity() + (t.dir > sig.m ? 1 : 0)) & 1;
    }

    long max_degree() const {
        long d = 0;
        for (const auto& [t, c] : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

  private:
    Signature sig_{};
    std::map<FieldTerm, Rational> terms_;
};

// x(f): each term g d_i acts by g * (d_i f).
inline SuperPolynomial apply_field(const VectorField& x, const SuperPolynomial& f) {
    check_same_signature(x.signature(), f.signature());
    SuperPolynomial out(f.signature(), f.context());
    for (const auto& [t, c] : x.terms()) {
        SuperPolynomial df = derive(f, t.dir);
        if (df.is_zero()) continue;
        SuperPolynomial g = SuperPolynomial::monomial(f.signature(), t.mono, c, f.context());
        out += mul(g, df);
    }
    return out;
}

// Super-commutator of derivations:
//   [f d_i, g d_j] = f d_i(g) d_j - (-1)^{|f d_i||g d_j|} g d_j(f) d_i
// extended bilinearly over (homogeneous) basis terms.
VectorField bracket_w(const VectorField& x, const VectorField& y);

// Element of the extended algebra W~ = W (+) A with
// [a,a'] = 0, [x,a] = x(a), W-part via bracket_w.
struct WTildeElement {
    VectorField w;
    SuperPolynomial a;

    explicit WTildeElement(Signature sig) : w(sig), a(sig) {}
    WTildeElement(VectorField wpart, SuperPolynomial apart) : w(std::move(wpart)), a(std::move(apart)) {
        check_same_signature(w.signature(), a.signature());
    }
};

WTildeElement bracket_tilde(const WTildeElement& x, const WTildeElement& y);

}  // namespace wittsuper
