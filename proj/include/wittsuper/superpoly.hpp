#pragma once

#include <map>
#include <string>

#include "wittsuper/supermonomial.hpp"

namespace wittsuper {

enum class EvenContext { Polynomial, Laurent };

// Element of A_{m,n} (polynomial context) or the Laurent variant; a finite
// map monomial -> nonzero rational.  Canonical on construction: zero
// coefficients pruned, so structural equality is mathematical equality.
class SuperPolynomial {
  public:
    SuperPolynomial() = default;
    SuperPolynomial(Signature sig, EvenContext ctx = EvenContext::Polynomial) : sig_(sig), ctx_(ctx) {}

    static SuperPolynomial monomial(Signature sig, const SuperMonomial& x, const Rational& c,
                                    EvenContext ctx = EvenContext::Polynomial) {
        SuperPolynomial p(sig, ctx);
        p.add_term(x, c);
        return p;
    }
    static SuperPolynomial one(Signature sig, EvenContext ctx = EvenContext::Polynomial) {
        return monomial(sig, SuperMonomial{std::vector<int>(sig.m, 0), {}}, Rational(1), ctx);
    }
    // t_i for i <= m, xi_{i-m} otherwise.
    static SuperPolynomial variable(Signature sig, int i, EvenContext ctx = EvenContext::Polynomial) {
        sig.check_index(i);
        SuperMonomial x{std::vector<int>(sig.m, 0), {}};
        if (i <= sig.m)
            x.alpha[i - 1] = 1;
        else
            x.odd = {i - sig.m};
        return monomial(sig, x, Rational(1), ctx);
    }

    const Signature& signature() const { return sig_; }
    EvenContext context() const { return ctx_; }
    const std::map<SuperMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const SuperMonomial& x, const Rational& c) {
        if (c == 0) return;
        validate_monomial(x);
        auto [it, inserted] = terms_.emplace(x, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SuperPolynomial& operator+=(const SuperPolynomial& o) {
        check_compatible(o);
        for (const auto& [x, c] : o.terms_) add_term(x, c);
        return *this;
    }
    SuperPolynomial& operator-=(const SuperPolynomial& o) {
        check_compatible(o);
        for (const auto& [x, c] : o.terms_) add_term(x, -c);
        return *this;
    }
    SuperPolynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [x, v] : terms_) v *= c;
        return *this;
    }

    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(SuperPolynomial a, const Rational& c) { return a *= c; }

    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }

    long max_degree() const {
        long d = 0;
        for (const auto& [x, c] : terms_) d = std::max(d, x.degree());
        return d;
    }

  private:
    void validate_monomial(const SuperMonomial& x) const {
        if (static_cast<int>(x.alpha.size()) != sig_.m) fail(ErrorKind::SignatureMismatch, "monomial arity");
        if (!is_sorted_strict(x.odd)) fail(ErrorKind::BadInput, "odd set not strictly increasing");
        if (!x.odd.empty() && (x.odd.front() < 1 || x.odd.back() > sig_.n))
            fail(ErrorKind::IndexOutOfRange, "odd variable index");
        if (ctx_ == EvenContext::Polynomial)
            for (int a : x.alpha)
                if (a < 0) fail(ErrorKind::BadInput, "negative exponent in polynomial context");
    }
    void check_compatible(const SuperPolynomial& o) const {
        check_same_signature(sig_, o.sig_);
        if (ctx_ != o.ctx_) fail(ErrorKind::SignatureMismatch, "mixed polynomial/Laurent contexts");
    }

    Signature sig_{};
    EvenContext ctx_ = EvenContext::Polynomial;
    std::map<SuperMonomial, Rational> terms_;
};

// Bilinear product with xi_I xi_J = (-1)^{tau(I,J)} xi_{I u J} (zero when the
// odd parts overlap); even variables commute with everything.
inline SuperPolynomial mul(const SuperPolynomial& f, const SuperPolynomial& g) {
    check_same_signature(f.signature(), g.signature());
    if (f.context() != g.context()) fail(ErrorKind::SignatureMismatch, "mixed polynomial/Laurent contexts");
    SuperPolynomial out(f.signature(), f.context());
    SuperMonomial prod;
    for (const auto& [x, cx] : f.terms())
        for (const auto& [y, cy] : g.terms()) {
            int s = mul_monomial(x, y, prod);
            if (s != 0) out.add_term(prod, cx * cy * s);
        }
    return out;
}

// The super-derivation d_i extended linearly.
inline SuperPolynomial derive(const SuperPolynomial& f, int i) {
    SuperPolynomial out(f.signature(), f.context());
    SuperMonomial d;
    for (const auto& [x, c] : f.terms()) {
        Rational k = derive_monomial(f.signature(), i, x, d);
        if (k != 0) out.add_term(d, c * k);
    }
    return out;
}

}  // namespace wittsuper
