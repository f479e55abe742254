#pragma once

#include <map>
#include <vector>

#include "wittsuper/superpoly.hpp"

namespace wittsuper {

// Normal-ordered word of the Weyl superalgebra K_{m,n}:
//   t^alpha xi_I d^beta dxi_J
// with xi_I and dxi_J ascending.  All creation letters stand left of all
// annihilation letters.
struct WeylMonomial {
    std::vector<int> alpha;  // t exponents, length m, >= 0
    OddSet I;                // xi factors
    std::vector<int> beta;   // d/dt exponents, length m, >= 0
    OddSet J;                // d/dxi factors

    int parity() const { return static_cast<int>(I.size() + J.size()) & 1; }
    long degree() const {
        long d = static_cast<long>(I.size() + J.size());
        for (int a : alpha) d += a;
        for (int b : beta) d += b;
        return d;
    }
    bool is_one() const {
        auto zero = [](const std::vector<int>& v) {
            return std::all_of(v.begin(), v.end(), [](int a) { return a == 0; });
        };
        return I.empty() && J.empty() && zero(alpha) && zero(beta);
    }

    friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
};

class WeylElement {
  public:
    WeylElement() = default;
    explicit WeylElement(Signature sig) : sig_(sig) {}

    static WeylElement word(Signature sig, const WeylMonomial& w, const Rational& c = Rational(1)) {
        WeylElement e(sig);
        e.add(w, c);
        return e;
    }
    static WeylElement one(Signature sig) {
        return word(sig, WeylMonomial{std::vector<int>(sig.m, 0), {}, std::vector<int>(sig.m, 0), {}});
    }
    // Multiplication operator by the monomial t^alpha xi_I.
    static WeylElement creation(Signature sig, const SuperMonomial& x, const Rational& c = Rational(1)) {
        WeylMonomial w{x.alpha, x.odd, std::vector<int>(sig.m, 0), {}};
        return word(sig, w, c);
    }
    // The derivation d_i (i in 1..m+n).
    static WeylElement partial(Signature sig, int i) {
        sig.check_index(i);
        WeylMonomial w{std::vector<int>(sig.m, 0), {}, std::vector<int>(sig.m, 0), {}};
        if (i <= sig.m)
            w.beta[i - 1] = 1;
        else
            w.J = {i - sig.m};
        return word(sig, w);
    }
    // t^alpha xi_I d_i as a single normal-ordered word.
    static WeylElement field_word(Signature sig, const SuperMonomial& x, int dir, const Rational& c = Rational(1));

    const Signature& signature() const { return sig_; }
    const std::map<WeylMonomial, Rational>& words() const { return words_; }
    bool is_zero() const { return words_.empty(); }

    void add(const WeylMonomial& w, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = words_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) words_.erase(it);
        }
    }

    WeylElement& operator+=(const WeylElement& o) {
        check_same_signature(sig_, o.sig_);
        for (const auto& [w, c] : o.words_) add(w, c);
        return *this;
    }
    WeylElement& operator-=(const WeylElement& o) {
        check_same_signature(sig_, o.sig_);
        for (const auto& [w, c] : o.words_) add(w, -c);
        return *this;
    }
    WeylElement& operator*=(const Rational& c) {
        if (c == 0) {
            words_.clear();
            return *this;
        }
        for (auto& [w, v] : words_) v *= c;
        return *this;
    }
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend WeylElement operator*(WeylElement a, const Rational& c) { return a *= c; }
    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.sig_ == b.sig_ && a.words_ == b.words_;
    }

    // Homogeneous iff every word has the same parity.
    bool is_homogeneous(int* parity_out = nullptr) const {
        int p = -1;
        for (const auto& [w, c] : words_) {
            if (p == -1)
                p = w.parity();
            else if (p != w.parity())
                return false;
        }
        if (parity_out) *parity_out = (p == -1 ? 0 : p);
        return true;
    }

  private:
    Signature sig_{};
    std::map<WeylMonomial, Rational> words_;
};

// Internal letter form used by the rewriting engine; exposed for the
// confluence property test (reduction along different scan orders).
namespace weyl_detail {
enum class LetterClass : int { T = 0, Xi = 1, Dt = 2, Dxi = 3 };
struct Letter {
    LetterClass cls;
    int idx;  // 1-based within its class
    friend auto operator<=>(const Letter&, const Letter&) = default;
};
std::vector<Letter> to_letters(const WeylMonomial& w);
// scan_from_back selects the other reduction strategy for the confluence check.
WeylElement normalize_letters(Signature sig, const std::vector<Letter>& letters, const Rational& coeff,
                              bool scan_from_back = false);
}  // namespace weyl_detail

// Normal-ordered product via the super-commutation rules
// [d_i, t_j] = delta_ij (anticommutator for odd pairs).
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);

// Action on A_{m,n} or its Laurent variant (annihilators differentiate,
// creators multiply).
SuperPolynomial weyl_apply(const WeylElement& a, const SuperPolynomial& f);

}  // namespace wittsuper
