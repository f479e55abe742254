#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wittsuper/gl.hpp"

namespace wittsuper {

// PBW word in U(gl): a sequence of matrix-unit letters, normal form sorted
// ascending by (row, col).
using GlLetter = std::pair<int, int>;
using GlWord = std::vector<GlLetter>;

inline int gl_letter_parity(const Signature& sig, const GlLetter& l) {
    return ((l.first > sig.m ? 1 : 0) + (l.second > sig.m ? 1 : 0)) & 1;
}

inline int gl_word_parity(const Signature& sig, const GlWord& w) {
    int p = 0;
    for (const auto& l : w) p ^= gl_letter_parity(sig, l);
    return p;
}

class UglElement {
  public:
    UglElement() = default;
    explicit UglElement(Signature sig) : sig_(sig) {}

    static UglElement one(Signature sig) { return word(sig, {}); }
    static UglElement word(Signature sig, const GlWord& w, const Rational& c = Rational(1)) {
        UglElement e(sig);
        e.add(w, c);
        return e;
    }

    const Signature& signature() const { return sig_; }
    const std::map<GlWord, Rational>& words() const { return words_; }
    bool is_zero() const { return words_.empty(); }

    void add(const GlWord& w, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = words_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) words_.erase(it);
        }
    }
    UglElement& operator+=(const UglElement& o) {
        check_same_signature(sig_, o.sig_);
        for (const auto& [w, c] : o.words_) add(w, c);
        return *this;
    }
    UglElement& operator-=(const UglElement& o) {
        check_same_signature(sig_, o.sig_);
        for (const auto& [w, c] : o.words_) add(w, -c);
        return *this;
    }
    UglElement& operator*=(const Rational& c) {
        if (c == 0) {
            words_.clear();
            return *this;
        }
        for (auto& [w, v] : words_) v *= c;
        return *this;
    }
    friend bool operator==(const UglElement& a, const UglElement& b) {
        return a.sig_ == b.sig_ && a.words_ == b.words_;
    }

  private:
    Signature sig_{};
    std::map<GlWord, Rational> words_;
};

// PBW straightening of a letter sequence.
UglElement gl_normalize(Signature sig, const GlWord& letters, const Rational& coeff);

inline UglElement ugl_mul(const UglElement& a, const UglElement& b) {
    check_same_signature(a.signature(), b.signature());
    UglElement out(a.signature());
    for (const auto& [wa, ca] : a.words())
        for (const auto& [wb, cb] : b.words()) {
            GlWord cat = wa;
            cat.insert(cat.end(), wb.begin(), wb.end());
            out += gl_normalize(a.signature(), cat, ca * cb);
        }
    return out;
}

}  // namespace wittsuper
