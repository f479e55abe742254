#include "wittsuper/glword.hpp"

namespace wittsuper {

UglElement gl_normalize(Signature sig, const GlWord& letters, const Rational& coeff) {
    UglElement out(sig);
    if (coeff == 0) return out;
    struct Item {
        GlWord w;
        Rational c;
    };
    std::vector<Item> work{{letters, coeff}};
    while (!work.empty()) {
        Item item = std::move(work.back());
        work.pop_back();
        GlWord& w = item.w;
        long pos = -1;
        bool dead = false;
        for (size_t p = 0; p + 1 < w.size(); ++p) {
            if (w[p] == w[p + 1] && gl_letter_parity(sig, w[p])) {
                // odd matrix unit squared: E_ab E_ab = [E_ab,E_ab]/2 = 0
                dead = true;
                break;
            }
            if (w[p + 1] < w[p]) {
                pos = static_cast<long>(p);
                break;
            }
        }
        if (dead) continue;
        if (pos < 0) {
            out.add(w, item.c);
            continue;
        }
        const auto [a, b] = w[pos];
        const auto [c, d] = w[pos + 1];
        int px = gl_letter_parity(sig, w[pos]);
        int py = gl_letter_parity(sig, w[pos + 1]);
        int sign = (px && py) ? -1 : 1;
        // bracket term(s): [E_ab, E_cd] = d_bc E_ad - (-1)^{pq} d_da E_cb
        auto emit_bracket = [&](const GlLetter& l, const Rational& bc) {
            Item shorter;
            shorter.w.reserve(w.size() - 1);
            shorter.w.insert(shorter.w.end(), w.begin(), w.begin() + pos);
            shorter.w.push_back(l);
            shorter.w.insert(shorter.w.end(), w.begin() + pos + 2, w.end());
            shorter.c = item.c * bc;
            work.push_back(std::move(shorter));
        };
        if (b == c) emit_bracket({a, d}, Rational(1));
        if (d == a) emit_bracket({c, b}, Rational(-sign));
        std::swap(w[pos], w[pos + 1]);
        item.c *= sign;
        work.push_back(std::move(item));
    }
    return out;
}

}  // namespace wittsuper
