#pragma once

#include <optional>
#include <tuple>

#include "wittsuper/vectorfield.hpp"

namespace wittsuper {

// Letter alphabets for U(W_{q,n}) and Ubar = A_{q,n}.U(khat).
//
// Directions are stored locally (1..q even, q+1..q+n odd); the global range
// {1..q} u {m+1..m+n} is translated at the boundary.  k is a Levi block
// inside gl_{m-q} acting on the global indices {q+1..m}; its basis is the
// set of matrix units within blocks (always even).
struct EnvAlphabet {
    int m = 0;
    int q = 0, n = 0;
    bool ubar = false;
    std::vector<std::pair<int, int>> k_basis;
    long degree_cap = 6;

    Signature wsig() const { return Signature{q, n}; }
    int to_local(int global_dir) const {
        if (global_dir >= 1 && global_dir <= q) return global_dir;
        if (global_dir > m && global_dir <= m + n) return q + (global_dir - m);
        fail(ErrorKind::IndexOutOfRange, "direction " + std::to_string(global_dir));
    }
    int to_global(int local_dir) const { return local_dir <= q ? local_dir : m + (local_dir - q); }
    bool k_allows(const std::pair<int, int>& kx) const {
        return std::find(k_basis.begin(), k_basis.end(), kx) != k_basis.end();
    }
    friend bool operator==(const EnvAlphabet&, const EnvAlphabet&) = default;
};

// Builds the matrix-unit basis of a direct sum of gl blocks on the given
// index sets.
std::vector<std::pair<int, int>> levi_k_basis(const std::vector<std::vector<int>>& blocks);

enum class LetterKind : int { A = 0, KA = 1, W = 2 };

struct EnvLetter {
    LetterKind kind = LetterKind::A;
    SuperMonomial mono;            // over (q, n)
    std::pair<int, int> kx{0, 0};  // KA letters
    int dir = 0;                   // W letters, local index

    // block order A < KA < W; within a block, higher degree first, then
    // (direction, alpha, odd_set) lexicographic
    auto key() const { return std::make_tuple(static_cast<int>(kind), -mono.degree(), dir, mono.alpha, mono.odd, kx); }
    friend bool operator==(const EnvLetter& a, const EnvLetter& b) {
        return a.kind == b.kind && a.mono == b.mono && a.kx == b.kx && a.dir == b.dir;
    }
    friend bool operator<(const EnvLetter& a, const EnvLetter& b) { return a.key() < b.key(); }

    int parity(const EnvAlphabet& alph) const {
        int p = mono.parity();
        if (kind == LetterKind::W && dir > alph.q) p ^= 1;
        return p;
    }
    long degree() const { return mono.degree(); }
};

using EnvWord = std::vector<EnvLetter>;

inline long word_degree(const EnvWord& w) {
    long d = 0;
    for (const EnvLetter& l : w) d += l.degree();
    return d;
}

class EnvElement {
  public:
    EnvElement() = default;
    explicit EnvElement(EnvAlphabet alph) : alph_(std::move(alph)) {}

    const EnvAlphabet& alphabet() const { return alph_; }
    const std::map<EnvWord, Rational>& words() const { return words_; }
    bool is_zero() const { return words_.empty(); }

    void add(const EnvWord& w, const Rational& c);

    EnvElement& operator+=(const EnvElement& o);
    EnvElement& operator-=(const EnvElement& o);
    EnvElement& operator*=(const Rational& c) {
        if (c == 0) {
            words_.clear();
            return *this;
        }
        for (auto& [w, v] : words_) v *= c;
        return *this;
    }
    friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
    friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
    friend bool operator==(const EnvElement& a, const EnvElement& b) { return a.words_ == b.words_; }

    long max_word_len() const {
        size_t l = 0;
        for (const auto& [w, c] : words_) l = std::max(l, w.size());
        return static_cast<long>(l);
    }

  private:
    EnvAlphabet alph_{};
    std::map<EnvWord, Rational> words_;
};

// letter constructors (validated against the alphabet)
EnvLetter a_letter(const EnvAlphabet& alph, const SuperMonomial& mono);
EnvLetter ka_letter(const EnvAlphabet& alph, const std::pair<int, int>& kx, const SuperMonomial& mono);
EnvLetter w_letter(const EnvAlphabet& alph, const SuperMonomial& mono, int local_dir);

// super bracket of two letters; a linear combination of single letters
std::vector<std::pair<EnvLetter, Rational>> letter_bracket(const EnvAlphabet& alph, const EnvLetter& x,
                                                           const EnvLetter& y);

// PBW straightening: unique normal form (A-letter merged leftmost in Ubar,
// then KA letters, then W letters, each block sorted).
EnvElement normal_order(const EnvElement& e);

EnvElement env_mul(const EnvElement& a, const EnvElement& b);
EnvElement env_bracket(const EnvElement& a, const EnvElement& b);

// omega_{alpha,beta,I,J}^{r,j,d,d'} =
//   sum_i (-1)^i C(r,i) t^{alpha+(r-i)e_j} xi_I d . t^{beta+i e_j} xi_J d'
EnvElement build_omega(const EnvAlphabet& alph, const std::vector<int>& alpha, const std::vector<int>& beta,
                       const OddSet& I, const OddSet& J, int r, int j, int d_local, int d2_local);

// omegabar_{alpha,beta,I,x}^{r,j} =
//   sum_i (-1)^i C(r,i) x ox t^{alpha+(r-i)e_j} xi_I . t^{beta+i e_j} d_j
EnvElement build_omega_bar(const EnvAlphabet& alph, const std::vector<int>& alpha, const std::vector<int>& beta,
                           const OddSet& I, const std::pair<int, int>& kx, int r, int j);

// X_{alpha,I,d} and Y_{alpha,I,x} per the alternating-sum definitions.
EnvElement build_X(const EnvAlphabet& alph, const std::vector<int>& alpha, const OddSet& I, int d_local);
EnvElement build_Y(const EnvAlphabet& alph, const std::vector<int>& alpha, const OddSet& I,
                   const std::pair<int, int>& kx);

struct IdentityCheck {
    bool equal = false;
    EnvElement residual;
    size_t residual_terms = 0;
};
IdentityCheck check_identity(const EnvElement& lhs, const EnvElement& rhs);

// Solves target = sum c_g gens[g] exactly over the normal-form word basis.
std::optional<std::vector<Rational>> span_solve(const EnvElement& target, const std::vector<EnvElement>& gens);

// Verifies that every pairwise super-commutator of the samples lies in the
// rational span of span_gens; throws SpanSolveFailure naming the offending
// pair and its residual size.
void t_subalgebra_closure(const std::vector<EnvElement>& samples, const std::vector<EnvElement>& span_gens);

// Action on A_{q,n} (W letters derive, A letters multiply; KA letters are
// outside this module's alphabet).
SuperPolynomial env_apply(const EnvElement& e, const SuperPolynomial& f);

// all subsets of a sorted odd set, deterministic order
std::vector<OddSet> subsets_of(const OddSet& I);
// componentwise binomial over exponent rows
Rational binom_rows(const std::vector<int>& alpha, const std::vector<int>& beta);

}  // namespace wittsuper
