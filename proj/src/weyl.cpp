#include "wittsuper/weyl.hpp"

namespace wittsuper {
namespace weyl_detail {

std::vector<Letter> to_letters(const WeylMonomial& w) {
    std::vector<Letter> out;
    for (size_t i = 0; i < w.alpha.size(); ++i)
        for (int k = 0; k < w.alpha[i]; ++k) out.push_back({LetterClass::T, static_cast<int>(i) + 1});
    for (int j : w.I) out.push_back({LetterClass::Xi, j});
    for (size_t i = 0; i < w.beta.size(); ++i)
        for (int k = 0; k < w.beta[i]; ++k) out.push_back({LetterClass::Dt, static_cast<int>(i) + 1});
    for (int j : w.J) out.push_back({LetterClass::Dxi, j});
    return out;
}

namespace {

bool is_odd_letter(const Letter& l) { return l.cls == LetterClass::Xi || l.cls == LetterClass::Dxi; }

WeylMonomial from_sorted(Signature sig, const std::vector<Letter>& letters) {
    WeylMonomial w{std::vector<int>(sig.m, 0), {}, std::vector<int>(sig.m, 0), {}};
    for (const Letter& l : letters) {
        switch (l.cls) {
            case LetterClass::T: ++w.alpha[l.idx - 1]; break;
            case LetterClass::Xi: w.I.push_back(l.idx); break;
            case LetterClass::Dt: ++w.beta[l.idx - 1]; break;
            case LetterClass::Dxi: w.J.push_back(l.idx); break;
        }
    }
    return w;
}

}  // namespace

WeylElement normalize_letters(Signature sig, const std::vector<Letter>& letters, const Rational& coeff,
                              bool scan_from_back) {
    WeylElement out(sig);
    if (coeff == 0) return out;
    struct Item {
        std::vector<Letter> w;
        Rational c;
    };
    std::vector<Item> work;
    work.push_back({letters, coeff});
    while (!work.empty()) {
        Item item = std::move(work.back());
        work.pop_back();
        auto& w = item.w;
        // Find a violating adjacent pair; equal odd letters annihilate.
        long pos = -1;
        bool dead = false;
        auto scan = [&](size_t p) -> bool {
            const Letter &x = w[p], &y = w[p + 1];
            if (x == y && is_odd_letter(x)) {
                dead = true;
                return true;
            }
            if (y < x) {
                pos = static_cast<long>(p);
                return true;
            }
            return false;
        };
        if (!w.empty()) {
            if (scan_from_back) {
                for (size_t p = w.size() - 1; p-- > 0;)
                    if (scan(p)) break;
            } else {
                for (size_t p = 0; p + 1 < w.size(); ++p)
                    if (scan(p)) break;
            }
        }
        if (dead) continue;
        if (pos < 0) {
            std::vector<Letter> sorted = w;
            std::sort(sorted.begin(), sorted.end());
            out.add(from_sorted(sig, sorted), item.c);
            continue;
        }
        const Letter x = w[pos], y = w[pos + 1];
        // Contraction [d,t] = 1 (same index, annihilator meeting its creator).
        bool contracts = (x.cls == LetterClass::Dt && y.cls == LetterClass::T && x.idx == y.idx) ||
                         (x.cls == LetterClass::Dxi && y.cls == LetterClass::Xi && x.idx == y.idx);
        if (contracts) {
            Item shorter;
            shorter.w.reserve(w.size() - 2);
            shorter.w.insert(shorter.w.end(), w.begin(), w.begin() + pos);
            shorter.w.insert(shorter.w.end(), w.begin() + pos + 2, w.end());
            shorter.c = item.c;
            work.push_back(std::move(shorter));
        }
        int sign = (is_odd_letter(x) && is_odd_letter(y)) ? -1 : 1;
        std::swap(w[pos], w[pos + 1]);
        item.c *= sign;
        work.push_back(std::move(item));
    }
    return out;
}

}  // namespace weyl_detail

WeylElement WeylElement::field_word(Signature sig, const SuperMonomial& x, int dir, const Rational& c) {
    sig.check_index(dir);
    WeylMonomial w{x.alpha, x.odd, std::vector<int>(sig.m, 0), {}};
    if (dir <= sig.m)
        w.beta[dir - 1] = 1;
    else
        w.J = {dir - sig.m};
    return word(sig, w, c);
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
    check_same_signature(a.signature(), b.signature());
    WeylElement out(a.signature());
    for (const auto& [wa, ca] : a.words()) {
        auto la = weyl_detail::to_letters(wa);
        for (const auto& [wb, cb] : b.words()) {
            auto lb = weyl_detail::to_letters(wb);
            std::vector<weyl_detail::Letter> cat = la;
            cat.insert(cat.end(), lb.begin(), lb.end());
            out += weyl_detail::normalize_letters(a.signature(), cat, ca * cb);
        }
    }
    return out;
}

SuperPolynomial weyl_apply(const WeylElement& a, const SuperPolynomial& f) {
    check_same_signature(a.signature(), f.signature());
    const Signature& sig = a.signature();
    SuperPolynomial out(sig, f.context());
    for (const auto& [w, c] : a.words()) {
        SuperPolynomial cur = f;
        // Annihilators first, right to left.
        for (auto it = w.J.rbegin(); it != w.J.rend() && !cur.is_zero(); ++it) cur = derive(cur, sig.m + *it);
        for (int i = sig.m; i >= 1 && !cur.is_zero(); --i)
            for (int k = 0; k < w.beta[i - 1] && !cur.is_zero(); ++k) cur = derive(cur, i);
        if (cur.is_zero()) continue;
        SuperPolynomial creation =
            SuperPolynomial::monomial(sig, SuperMonomial{w.alpha, w.I}, Rational(1), f.context());
        out += mul(creation, cur) * c;
    }
    return out;
}

}  // namespace wittsuper
