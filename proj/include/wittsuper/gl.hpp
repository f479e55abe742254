#pragma once

#include <map>
#include <utility>

#include "wittsuper/rational.hpp"
#include "wittsuper/supermonomial.hpp"

namespace wittsuper {

// Element of gl_{m,n} as a sparse matrix over matrix units E_{i,j},
// i,j in 1..m+n.  Parity of E_{i,j} is ([i>m]+[j>m]) mod 2.
class GlElement {
  public:
    GlElement() = default;
    explicit GlElement(Signature sig) : sig_(sig) {}

    static GlElement unit(Signature sig, int i, int j, const Rational& c = Rational(1)) {
        GlElement x(sig);
        x.add(i, j, c);
        return x;
    }

    const Signature& signature() const { return sig_; }
    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    void add(int i, int j, const Rational& c) {
        if (c == 0) return;
        sig_.check_index(i);
        sig_.check_index(j);
        auto [it, inserted] = entries_.emplace(std::make_pair(i, j), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) entries_.erase(it);
        }
    }

    GlElement& operator+=(const GlElement& o) {
        check_size(o);
        for (const auto& [ij, c] : o.entries_) add(ij.first, ij.second, c);
        return *this;
    }
    GlElement& operator-=(const GlElement& o) {
        check_size(o);
        for (const auto& [ij, c] : o.entries_) add(ij.first, ij.second, -c);
        return *this;
    }
    friend GlElement operator+(GlElement a, const GlElement& b) { return a += b; }
    friend GlElement operator-(GlElement a, const GlElement& b) { return a -= b; }
    friend bool operator==(const GlElement& a, const GlElement& b) {
        return a.sig_ == b.sig_ && a.entries_ == b.entries_;
    }

    int unit_parity(int i, int j) const { return ((i > sig_.m ? 1 : 0) + (j > sig_.m ? 1 : 0)) & 1; }

  private:
    void check_size(const GlElement& o) const {
        if (!(sig_ == o.sig_)) fail(ErrorKind::SizeMismatch, "gl sizes differ");
    }

    Signature sig_{};
    std::map<std::pair<int, int>, Rational> entries_;
};

// Super-commutator [E_ab, E_cd] = d_bc E_ad - (-1)^{|E_ab||E_cd|} d_da E_cb.
inline GlElement bracket_gl(const GlElement& x, const GlElement& y) {
    if (!(x.signature() == y.signature())) fail(ErrorKind::SizeMismatch, "gl sizes differ");
    GlElement out(x.signature());
    for (const auto& [ab, cx] : x.entries())
        for (const auto& [cd, cy] : y.entries()) {
            const auto [a, b] = ab;
            const auto [c, d] = cd;
            Rational coeff = cx * cy;
            if (b == c) out.add(a, d, coeff);
            if (d == a) {
                int sign = (x.unit_parity(a, b) & y.unit_parity(c, d)) ? 1 : -1;
                out.add(c, b, coeff * sign);
            }
        }
    return out;
}

// Supertrace: sum of even diagonal entries minus sum of odd ones.
inline Rational str(const GlElement& x) {
    Rational s(0);
    for (const auto& [ij, c] : x.entries()) {
        if (ij.first != ij.second) continue;
        if (ij.first <= x.signature().m)
            s += c;
        else
            s -= c;
    }
    return s;
}

}  // namespace wittsuper
