#include "wittsuper/env.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wittsuper/linalg.hpp"

namespace wittsuper {

std::vector<std::pair<int, int>> levi_k_basis(const std::vector<std::vector<int>>& blocks) {
    std::vector<std::pair<int, int>> out;
    for (const auto& blk : blocks)
        for (int i : blk)
            for (int j : blk) out.push_back({i, j});
    std::sort(out.begin(), out.end());
    return out;
}

void EnvElement::add(const EnvWord& w, const Rational& c) {
    if (c == 0) return;
    if (word_degree(w) > alph_.degree_cap)
        fail(ErrorKind::DegreeCapExceeded, "word degree " + std::to_string(word_degree(w)) + " exceeds cap " +
                                               std::to_string(alph_.degree_cap));
    auto [it, inserted] = words_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) words_.erase(it);
    }
}

EnvElement& EnvElement::operator+=(const EnvElement& o) {
    if (!(alph_ == o.alph_)) fail(ErrorKind::AlphabetError, "mixed alphabets");
    for (const auto& [w, c] : o.words_) add(w, c);
    return *this;
}
EnvElement& EnvElement::operator-=(const EnvElement& o) {
    if (!(alph_ == o.alph_)) fail(ErrorKind::AlphabetError, "mixed alphabets");
    for (const auto& [w, c] : o.words_) add(w, -c);
    return *this;
}

EnvLetter a_letter(const EnvAlphabet& alph, const SuperMonomial& mono) {
    if (!alph.ubar) fail(ErrorKind::AlphabetError, "A-letters only exist in Ubar");
    if (static_cast<int>(mono.alpha.size()) != alph.q) fail(ErrorKind::AlphabetError, "A-letter arity");
    return EnvLetter{LetterKind::A, mono, {0, 0}, 0};
}

EnvLetter ka_letter(const EnvAlphabet& alph, const std::pair<int, int>& kx, const SuperMonomial& mono) {
    if (!alph.k_allows(kx))
        fail(ErrorKind::AlphabetError,
             "k element E(" + std::to_string(kx.first) + "," + std::to_string(kx.second) + ") not in the alphabet");
    if (static_cast<int>(mono.alpha.size()) != alph.q) fail(ErrorKind::AlphabetError, "KA-letter arity");
    return EnvLetter{LetterKind::KA, mono, kx, 0};
}

EnvLetter w_letter(const EnvAlphabet& alph, const SuperMonomial& mono, int local_dir) {
    if (local_dir < 1 || local_dir > alph.q + alph.n) fail(ErrorKind::IndexOutOfRange, "W-letter direction");
    if (static_cast<int>(mono.alpha.size()) != alph.q) fail(ErrorKind::AlphabetError, "W-letter arity");
    return EnvLetter{LetterKind::W, mono, {0, 0}, local_dir};
}

std::vector<std::pair<EnvLetter, Rational>> letter_bracket(const EnvAlphabet& alph, const EnvLetter& x,
                                                           const EnvLetter& y) {
    const Signature sig = alph.wsig();
    std::vector<std::pair<EnvLetter, Rational>> out;
    auto emitA = [&](const SuperPolynomial& p) {
        for (const auto& [mono, c] : p.terms()) out.push_back({a_letter(alph, mono), c});
    };
    if (x.kind == LetterKind::W && y.kind == LetterKind::W) {
        VectorField b = bracket_w(VectorField::basis(sig, x.mono, x.dir), VectorField::basis(sig, y.mono, y.dir));
        for (const auto& [t, c] : b.terms()) out.push_back({w_letter(alph, t.mono, t.dir), c});
        return out;
    }
    if (x.kind == LetterKind::W && y.kind == LetterKind::A) {
        emitA(apply_field(VectorField::basis(sig, x.mono, x.dir),
                          SuperPolynomial::monomial(sig, y.mono, Rational(1))));
        return out;
    }
    if (x.kind == LetterKind::A && y.kind == LetterKind::W) {
        // [a, w] = -(-1)^{|a||w|} w(a)
        SuperPolynomial wa = apply_field(VectorField::basis(sig, y.mono, y.dir),
                                         SuperPolynomial::monomial(sig, x.mono, Rational(1)));
        int s = (x.parity(alph) & y.parity(alph)) ? 1 : -1;
        emitA(wa * Rational(s));
        return out;
    }
    if (x.kind == LetterKind::W && y.kind == LetterKind::KA) {
        SuperPolynomial wg = apply_field(VectorField::basis(sig, x.mono, x.dir),
                                         SuperPolynomial::monomial(sig, y.mono, Rational(1)));
        for (const auto& [mono, c] : wg.terms()) out.push_back({ka_letter(alph, y.kx, mono), c});
        return out;
    }
    if (x.kind == LetterKind::KA && y.kind == LetterKind::W) {
        // [x ox g, w] = -(-1)^{|x ox g||w|} x ox w(g)
        SuperPolynomial wg = apply_field(VectorField::basis(sig, y.mono, y.dir),
                                         SuperPolynomial::monomial(sig, x.mono, Rational(1)));
        int s = (x.parity(alph) & y.parity(alph)) ? 1 : -1;
        for (const auto& [mono, c] : wg.terms()) out.push_back({ka_letter(alph, x.kx, mono), c * s});
        return out;
    }
    if (x.kind == LetterKind::KA && y.kind == LetterKind::KA) {
        // [u ox f, v ox g] = [u,v] ox fg  (u, v even)
        SuperMonomial prod;
        int s = mul_monomial(x.mono, y.mono, prod);
        if (s == 0) return out;
        auto [a, b] = x.kx;
        auto [c, d] = y.kx;
        if (b == c) out.push_back({ka_letter(alph, {a, d}, prod), Rational(s)});
        if (d == a) out.push_back({ka_letter(alph, {c, b}, prod), Rational(-s)});
        return out;
    }
    // [A,A] = [A,KA] = 0
    return out;
}

EnvElement normal_order(const EnvElement& e) {
    const EnvAlphabet& alph = e.alphabet();
    EnvElement out(alph);
    struct Item {
        EnvWord w;
        Rational c;
    };
    std::vector<Item> work;
    for (const auto& [w, c] : e.words()) work.push_back({w, c});
    while (!work.empty()) {
        Item item = std::move(work.back());
        work.pop_back();
        EnvWord& w = item.w;
        // drop unit A-letters
        {
            auto it = std::remove_if(w.begin(), w.end(), [](const EnvLetter& l) {
                return l.kind == LetterKind::A && l.mono.is_one();
            });
            w.erase(it, w.end());
        }
        // find the first rewrite position
        long merge_pos = -1, swap_pos = -1, square_pos = -1;
        for (size_t p = 0; p + 1 < w.size(); ++p) {
            const EnvLetter &x = w[p], &y = w[p + 1];
            if (alph.ubar && x.kind == LetterKind::A && y.kind == LetterKind::A) {
                merge_pos = static_cast<long>(p);
                break;
            }
            if (x == y && x.parity(alph)) {
                square_pos = static_cast<long>(p);
                break;
            }
            if (y < x) {
                swap_pos = static_cast<long>(p);
                break;
            }
        }
        if (merge_pos >= 0) {
            size_t p = static_cast<size_t>(merge_pos);
            SuperMonomial prod;
            int s = mul_monomial(w[p].mono, w[p + 1].mono, prod);
            if (s == 0) continue;
            Item next;
            next.w.reserve(w.size() - 1);
            next.w.insert(next.w.end(), w.begin(), w.begin() + merge_pos);
            next.w.push_back(a_letter(alph, prod));
            next.w.insert(next.w.end(), w.begin() + merge_pos + 2, w.end());
            next.c = item.c * s;
            work.push_back(std::move(next));
            continue;
        }
        if (square_pos >= 0) {
            size_t p = static_cast<size_t>(square_pos);
            auto br = letter_bracket(alph, w[p], w[p + 1]);
            for (const auto& [l, c] : br) {
                Item next;
                next.w.reserve(w.size() - 1);
                next.w.insert(next.w.end(), w.begin(), w.begin() + square_pos);
                next.w.push_back(l);
                next.w.insert(next.w.end(), w.begin() + square_pos + 2, w.end());
                next.c = item.c * c / 2;
                work.push_back(std::move(next));
            }
            continue;
        }
        if (swap_pos >= 0) {
            size_t p = static_cast<size_t>(swap_pos);
            auto br = letter_bracket(alph, w[p], w[p + 1]);
            for (const auto& [l, c] : br) {
                Item next;
                next.w.reserve(w.size() - 1);
                next.w.insert(next.w.end(), w.begin(), w.begin() + swap_pos);
                next.w.push_back(l);
                next.w.insert(next.w.end(), w.begin() + swap_pos + 2, w.end());
                next.c = item.c * c;
                work.push_back(std::move(next));
            }
            int sign = (w[p].parity(alph) & w[p + 1].parity(alph)) ? -1 : 1;
            std::swap(w[p], w[p + 1]);
            item.c *= sign;
            work.push_back(std::move(item));
            continue;
        }
        out.add(w, item.c);
    }
    return out;
}

EnvElement env_mul(const EnvElement& a, const EnvElement& b) {
    if (!(a.alphabet() == b.alphabet())) fail(ErrorKind::AlphabetError, "mixed alphabets");
    EnvElement cat(a.alphabet());
    for (const auto& [wa, ca] : a.words())
        for (const auto& [wb, cb] : b.words()) {
            EnvWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            cat.add(w, ca * cb);
        }
    return normal_order(cat);
}

namespace {
int word_parity(const EnvAlphabet& alph, const EnvWord& w) {
    int p = 0;
    for (const EnvLetter& l : w) p ^= l.parity(alph);
    return p;
}
}  // namespace

EnvElement env_bracket(const EnvElement& a, const EnvElement& b) {
    if (!(a.alphabet() == b.alphabet())) fail(ErrorKind::AlphabetError, "mixed alphabets");
    EnvElement cat(a.alphabet());
    for (const auto& [wa, ca] : a.words())
        for (const auto& [wb, cb] : b.words()) {
            EnvWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            cat.add(w, ca * cb);
            EnvWord v = wb;
            v.insert(v.end(), wa.begin(), wa.end());
            int sign = (word_parity(a.alphabet(), wa) & word_parity(a.alphabet(), wb)) ? 1 : -1;
            cat.add(v, ca * cb * sign);
        }
    return normal_order(cat);
}

namespace {
SuperMonomial shifted(const std::vector<int>& alpha, const OddSet& I, int j, int amount) {
    SuperMonomial x{alpha, I};
    x.alpha[static_cast<size_t>(j - 1)] += amount;
    return x;
}
}  // namespace

EnvElement build_omega(const EnvAlphabet& alph, const std::vector<int>& alpha, const std::vector<int>& beta,
                       const OddSet& I, const OddSet& J, int r, int j, int d_local, int d2_local) {
    if (j < 1 || j > alph.q) fail(ErrorKind::IndexOutOfRange, "omega needs j in 1..q");
    if (r < 0) fail(ErrorKind::BadInput, "omega needs r >= 0");
    EnvElement out(alph);
    for (int i = 0; i <= r; ++i) {
        Rational c = binomial(r, i);
        if (i & 1) c = -c;
        EnvWord w{w_letter(alph, shifted(alpha, I, j, r - i), d_local),
                  w_letter(alph, shifted(beta, J, j, i), d2_local)};
        out.add(w, c);
    }
    return out;
}

EnvElement build_omega_bar(const EnvAlphabet& alph, const std::vector<int>& alpha, const std::vector<int>& beta,
                           const OddSet& I, const std::pair<int, int>& kx, int r, int j) {
    if (j < 1 || j > alph.q) fail(ErrorKind::IndexOutOfRange, "omegabar needs j in 1..q");
    if (r < 0) fail(ErrorKind::BadInput, "omegabar needs r >= 0");
    EnvElement out(alph);
    for (int i = 0; i <= r; ++i) {
        Rational c = binomial(r, i);
        if (i & 1) c = -c;
        EnvWord w{ka_letter(alph, kx, shifted(alpha, I, j, r - i)),
                  w_letter(alph, shifted(beta, {}, j, i), j)};
        out.add(w, c);
    }
    return out;
}

std::vector<OddSet> subsets_of(const OddSet& I) {
    std::vector<OddSet> out;
    size_t k = I.size();
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
        OddSet s;
        for (size_t b = 0; b < k; ++b)
            if (mask & (size_t{1} << b)) s.push_back(I[b]);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational binom_rows(const std::vector<int>& alpha, const std::vector<int>& beta) {
    Rational c(1);
    for (size_t i = 0; i < alpha.size(); ++i) c *= binomial(alpha[i], beta[i]);
    return c;
}

namespace {
std::vector<std::vector<int>> rows_below(const std::vector<int>& alpha) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(alpha.size(), 0);
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == alpha.size()) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= alpha[pos]; ++v) {
            cur[pos] = v;
            rec(pos + 1);
        }
        cur[pos] = 0;
    };
    rec(0);
    return out;
}

OddSet set_minus(const OddSet& I, const OddSet& J) {
    OddSet out;
    std::set_difference(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(out));
    return out;
}
}  // namespace

EnvElement build_X(const EnvAlphabet& alph, const std::vector<int>& alpha, const OddSet& I, int d_local) {
    EnvElement out(alph);
    for (const auto& beta : rows_below(alpha))
        for (const OddSet& J : subsets_of(I)) {
            OddSet rest = set_minus(I, J);
            long sgn = std::accumulate(beta.begin(), beta.end(), 0L) + static_cast<long>(J.size()) + tau(J, rest);
            Rational c = binom_rows(alpha, beta);
            if (sgn & 1) c = -c;
            std::vector<int> diff(alpha.size());
            for (size_t i = 0; i < alpha.size(); ++i) diff[i] = alpha[i] - beta[i];
            EnvWord w{a_letter(alph, SuperMonomial{beta, J}), w_letter(alph, SuperMonomial{diff, rest}, d_local)};
            out.add(w, c);
        }
    return normal_order(out);
}

EnvElement build_Y(const EnvAlphabet& alph, const std::vector<int>& alpha, const OddSet& I,
                   const std::pair<int, int>& kx) {
    EnvElement out(alph);
    for (const auto& beta : rows_below(alpha))
        for (const OddSet& J : subsets_of(I)) {
            OddSet rest = set_minus(I, J);
            long sgn = std::accumulate(beta.begin(), beta.end(), 0L) + static_cast<long>(J.size()) + tau(J, rest);
            Rational c = binom_rows(alpha, beta);
            if (sgn & 1) c = -c;
            std::vector<int> diff(alpha.size());
            for (size_t i = 0; i < alpha.size(); ++i) diff[i] = alpha[i] - beta[i];
            EnvWord w{a_letter(alph, SuperMonomial{beta, J}), ka_letter(alph, kx, SuperMonomial{diff, rest})};
            out.add(w, c);
        }
    return normal_order(out);
}

IdentityCheck check_identity(const EnvElement& lhs, const EnvElement& rhs) {
    if (!(lhs.alphabet() == rhs.alphabet())) fail(ErrorKind::AlphabetError, "mixed alphabets");
    EnvElement d = lhs;
    d -= rhs;
    IdentityCheck res;
    res.residual = normal_order(d);
    res.residual_terms = res.residual.words().size();
    res.equal = res.residual.is_zero();
    return res;
}

std::optional<std::vector<Rational>> span_solve(const EnvElement& target, const std::vector<EnvElement>& gens) {
    std::map<EnvWord, size_t> rows;
    auto index_words = [&](const EnvElement& e) {
        for (const auto& [w, c] : e.words())
            if (!rows.count(w)) rows.emplace(w, rows.size());
    };
    index_words(target);
    for (const EnvElement& g : gens) index_words(g);
    QMatrix A(rows.size(), gens.size());
    std::vector<Rational> b(rows.size(), Rational(0));
    for (const auto& [w, c] : target.words()) b[rows.at(w)] = c;
    for (size_t g = 0; g < gens.size(); ++g)
        for (const auto& [w, c] : gens[g].words()) A.at(rows.at(w), g) = c;
    return A.solve(b);
}

void t_subalgebra_closure(const std::vector<EnvElement>& samples, const std::vector<EnvElement>& span_gens) {
    for (size_t i = 0; i < samples.size(); ++i)
        for (size_t j = i; j < samples.size(); ++j) {
            EnvElement b = env_bracket(samples[i], samples[j]);
            if (b.is_zero()) continue;
            if (!span_solve(b, span_gens))
                fail(ErrorKind::SpanSolveFailure,
                     "bracket of samples " + std::to_string(i) + "," + std::to_string(j) +
                         " leaves the span; residual has " + std::to_string(b.words().size()) + " words");
        }
}

SuperPolynomial env_apply(const EnvElement& e, const SuperPolynomial& f) {
    const EnvAlphabet& alph = e.alphabet();
    check_same_signature(alph.wsig(), f.signature());
    SuperPolynomial out(f.signature(), f.context());
    for (const auto& [w, c] : e.words()) {
        SuperPolynomial cur = f;
        for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) {
            switch (it->kind) {
                case LetterKind::W:
                    cur = apply_field(VectorField::basis(f.signature(), it->mono, it->dir), cur);
                    break;
                case LetterKind::A:
                    cur = mul(SuperPolynomial::monomial(f.signature(), it->mono, Rational(1), f.context()), cur);
                    break;
                case LetterKind::KA:
                    fail(ErrorKind::AlphabetError, "KA letters do not act on A_{q,n}");
            }
        }
        out += cur * c;
    }
    return out;
}

}  // namespace wittsuper
