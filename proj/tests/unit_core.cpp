#include <doctest.h>

#include <functional>

#include "wittsuper/gl.hpp"
#include "wittsuper/io.hpp"
#include "wittsuper/vectorfield.hpp"
#include "wittsuper/weyl.hpp"

using namespace wittsuper;

namespace {

SuperMonomial mono(std::vector<int> alpha, OddSet odd = {}) { return SuperMonomial{std::move(alpha), std::move(odd)}; }

// independent inversion-count oracle for tau
long tau_oracle(const OddSet& I, const OddSet& J) {
    std::vector<int> seq(I.begin(), I.end());
    seq.insert(seq.end(), J.begin(), J.end());
    return inversions(seq);
}

std::vector<SuperMonomial> all_monomials(Signature sig, int cap) {
    std::vector<SuperMonomial> out;
    std::vector<int> cur(static_cast<size_t>(sig.m), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == sig.m) {
            for (int mask = 0; mask < (1 << sig.n); ++mask) {
                OddSet odd;
                for (int j = 1; j <= sig.n; ++j)
                    if (mask & (1 << (j - 1))) odd.push_back(j);
                if (static_cast<int>(odd.size()) <= left) out.push_back(SuperMonomial{cur, odd});
            }
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(0, cap);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST_CASE("tau inversion counts") {
    CHECK(tau({}, {}) == 0);
    CHECK(tau({2}, {1}) == 1);
    CHECK(tau({1, 3}, {2, 4}) == tau_oracle({1, 3}, {2, 4}));
    CHECK(tau({1, 3}, {2, 4}) == 1);
    for (int maskI = 0; maskI < 16; ++maskI)
        for (int maskJ = 0; maskJ < 16; ++maskJ) {
            if (maskI & maskJ) continue;
            OddSet I, J;
            for (int b = 1; b <= 4; ++b) {
                if (maskI & (1 << (b - 1))) I.push_back(b);
                if (maskJ & (1 << (b - 1))) J.push_back(b);
            }
            CHECK(tau(I, J) == tau_oracle(I, J));
        }
    CHECK_THROWS_AS(tau({1}, {1}), Error);
}

TEST_CASE("products in A_{m,n}") {
    Signature sig{2, 2};
    SuperPolynomial t1 = SuperPolynomial::variable(sig, 1);
    SuperPolynomial xi1 = SuperPolynomial::variable(sig, 3);
    SuperPolynomial xi2 = SuperPolynomial::variable(sig, 4);
    CHECK(mul(t1, t1) == SuperPolynomial::monomial(sig, mono({2, 0}), Rational(1)));
    CHECK(mul(xi1, xi1).is_zero());
    // xi_2 xi_1 = -xi_{12}, the sign coming from tau({2},{1}) = 1
    CHECK(mul(xi2, xi1) == SuperPolynomial::monomial(sig, mono({0, 0}, {1, 2}), Rational(-1)));
    CHECK(mul(xi1, xi2) == SuperPolynomial::monomial(sig, mono({0, 0}, {1, 2}), Rational(1)));
    CHECK_THROWS_AS(mul(t1, SuperPolynomial::one(Signature{1, 1})), Error);
}

TEST_CASE("field actions") {
    Signature sig{1, 2};
    VectorField d1 = VectorField::basis(sig, mono({0}), 1);
    SuperPolynomial t1sq = SuperPolynomial::monomial(sig, mono({2}), Rational(1));
    CHECK(apply_field(d1, t1sq) == SuperPolynomial::monomial(sig, mono({1}), Rational(2)));
    VectorField dxi1 = VectorField::basis(sig, mono({0}), 2);
    SuperPolynomial xi12 = SuperPolynomial::monomial(sig, mono({0}, {1, 2}), Rational(1));
    CHECK(apply_field(dxi1, xi12) == SuperPolynomial::monomial(sig, mono({0}, {2}), Rational(1)));
    // (t_1 d_{m+2}) f agrees with the composed single-variable rules on all
    // monomials of degree <= 3
    VectorField x = VectorField::basis(sig, mono({1}), 3);
    for (const SuperMonomial& f : all_monomials(sig, 3)) {
        SuperPolynomial pf = SuperPolynomial::monomial(sig, f, Rational(1));
        SuperPolynomial expect = mul(SuperPolynomial::variable(sig, 1), derive(pf, 3));
        CHECK(apply_field(x, pf) == expect);
    }
}

TEST_CASE("bracket_w basics and the composition oracle") {
    Signature sig{1, 1};
    VectorField d1 = VectorField::basis(sig, mono({0}), 1);
    VectorField t1d1 = VectorField::basis(sig, mono({1}), 1);
    CHECK(bracket_w(d1, t1d1) == d1);
    // [d_i, t^a xi_I d_j] = (a_i - delta_ij) t^a xi_I d_j
    for (const SuperMonomial& f : all_monomials(sig, 4))
        for (int j = 1; j <= sig.total(); ++j) {
            VectorField y = VectorField::basis(sig, f, j);
            VectorField expect = y;
            expect *= Rational(f.alpha[0] - (j == 1 ? 1 : 0));
            CHECK(bracket_w(t1d1, y) == expect);
        }
    // the bracket is the operator super-commutator, exactly, on a window
    std::vector<VectorField> basis;
    for (const SuperMonomial& g : all_monomials(sig, 2))
        for (int dir = 1; dir <= sig.total(); ++dir) basis.push_back(VectorField::basis(sig, g, dir));
    for (const VectorField& x : basis)
        for (const VectorField& y : basis) {
            int px = 0, py = 0;
            x.is_homogeneous(&px);
            y.is_homogeneous(&py);
            VectorField b = bracket_w(x, y);
            for (const SuperMonomial& f : all_monomials(sig, 4)) {
                SuperPolynomial pf = SuperPolynomial::monomial(sig, f, Rational(1));
                SuperPolynomial rhs = apply_field(x, apply_field(y, pf));
                SuperPolynomial yx = apply_field(y, apply_field(x, pf));
                if ((px & py) == 0)
                    rhs -= yx;
                else
                    rhs += yx;
                CHECK(apply_field(b, pf) == rhs);
            }
        }
    // odd with itself: [x,x] = 2 x o x as operators
    VectorField odd = VectorField::basis(sig, mono({0}, {1}), 1);  // xi_1 d_1
    VectorField sq = bracket_w(odd, odd);
    for (const SuperMonomial& f : all_monomials(sig, 4)) {
        SuperPolynomial pf = SuperPolynomial::monomial(sig, f, Rational(1));
        CHECK(apply_field(sq, pf) == apply_field(odd, apply_field(odd, pf)) * Rational(2));
    }
}

TEST_CASE("extended algebra bracket") {
    Signature sig{2, 0};
    WTildeElement d1(VectorField::basis(sig, mono({0, 0}), 1), SuperPolynomial(sig));
    WTildeElement t1(VectorField(sig), SuperPolynomial::variable(sig, 1));
    WTildeElement t2(VectorField(sig), SuperPolynomial::variable(sig, 2));
    WTildeElement b = bracket_tilde(d1, t1);
    CHECK(b.w.is_zero());
    CHECK(b.a == SuperPolynomial::one(sig));
    WTildeElement z = bracket_tilde(t1, t2);
    CHECK(z.w.is_zero());
    CHECK(z.a.is_zero());
    WTildeElement e(VectorField::basis(sig, mono({1, 0}), 1), SuperPolynomial(sig));
    SuperPolynomial t1sq = SuperPolynomial::monomial(sig, mono({2, 0}), Rational(1));
    WTildeElement r = bracket_tilde(e, WTildeElement(VectorField(sig), t1sq));
    CHECK(r.w.is_zero());
    CHECK(r.a == t1sq * Rational(2));
    CHECK(r.a == apply_field(e.w, t1sq));
}

TEST_CASE("gl bracket and supertrace") {
    Signature sig{2, 1};
    CHECK(str(GlElement::unit(sig, 1, 1)) == 1);
    CHECK(str(GlElement::unit(sig, 3, 3)) == -1);
    CHECK(bracket_gl(GlElement::unit(sig, 1, 2), GlElement::unit(sig, 2, 1)) ==
          GlElement::unit(sig, 1, 1) + GlElement::unit(sig, 2, 2, Rational(-1)));
    // odd-odd anticommutator
    CHECK(bracket_gl(GlElement::unit(sig, 1, 3), GlElement::unit(sig, 3, 1)) ==
          GlElement::unit(sig, 1, 1) + GlElement::unit(sig, 3, 3));
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (int d = 1; d <= 3; ++d)
                    CHECK(str(bracket_gl(GlElement::unit(sig, a, b), GlElement::unit(sig, c, d))) == 0);
    CHECK_THROWS_AS(bracket_gl(GlElement::unit(sig, 1, 1), GlElement::unit(Signature{1, 1}, 1, 1)), Error);
}

TEST_CASE("weyl normal ordering") {
    Signature sig{1, 1};
    WeylElement t1 = WeylElement::creation(sig, mono({1}));
    WeylElement d1 = WeylElement::partial(sig, 1);
    CHECK(weyl_mul(d1, t1) == weyl_mul(t1, d1) + WeylElement::one(sig));
    WeylElement xi = WeylElement::creation(sig, mono({0}, {1}));
    WeylElement dxi = WeylElement::partial(sig, 2);
    WeylElement lhs = weyl_mul(dxi, xi);
    WeylElement rhs = WeylElement::one(sig) - weyl_mul(xi, dxi);
    CHECK(lhs == rhs);
    for (const SuperMonomial& f : all_monomials(sig, 3)) {
        SuperPolynomial pf = SuperPolynomial::monomial(sig, f, Rational(1));
        CHECK(weyl_apply(lhs, pf) == weyl_apply(rhs, pf));
    }
    // (t d)(t d) = t^2 d^2 + t d, against the action on C[t] xi
    WeylElement td = weyl_mul(t1, d1);
    WeylElement prod = weyl_mul(td, td);
    for (const SuperMonomial& f : all_monomials(sig, 5)) {
        SuperPolynomial pf = SuperPolynomial::monomial(sig, f, Rational(1));
        CHECK(weyl_apply(prod, pf) == weyl_apply(td, weyl_apply(td, pf)));
    }
    WeylMonomial sq{{2}, {}, {2}, {}};
    CHECK(prod == WeylElement::word(sig, sq) + td);
}

TEST_CASE("Laurent contexts") {
    Signature sig{1, 1};
    // negative exponents are legal only in the Laurent context
    SuperPolynomial lp(sig, EvenContext::Laurent);
    lp.add_term(mono({-2}, {1}), Rational(1));
    CHECK(lp.term_count() == 1);
    SuperPolynomial t = SuperPolynomial::variable(sig, 1, EvenContext::Laurent);
    CHECK(mul(t, lp) == SuperPolynomial::monomial(sig, mono({-1}, {1}), Rational(1), EvenContext::Laurent));
    // derivation of t^{-2} xi gives -2 t^{-3} xi
    CHECK(derive(lp, 1) == SuperPolynomial::monomial(sig, mono({-3}, {1}), Rational(-2), EvenContext::Laurent));
    SuperPolynomial poly(sig);
    CHECK_THROWS_AS(poly.add_term(mono({-1}), Rational(1)), Error);
    // contexts never mix silently
    CHECK_THROWS_AS(mul(lp, SuperPolynomial::one(sig)), Error);
}

TEST_CASE("serialization round-trips bit-exactly") {
    Signature sig{2, 2};
    SuperPolynomial f(sig);
    f.add_term(mono({1, 0}, {1}), Rational(-7, 3));
    f.add_term(mono({0, 2}, {1, 2}), Rational(5));
    Json j = poly_to_json(f);
    CHECK(poly_from_json(j, sig) == f);
    CHECK(poly_to_json(poly_from_json(j, sig)).dump() == j.dump());

    VectorField x(sig);
    x.add_term(mono({1, 1}, {2}), 3, Rational(22, 7));
    x.add_term(mono({0, 0}), 1, Rational(-1));
    Json jx = field_to_json(x);
    CHECK(field_from_json(jx, sig) == x);
    CHECK(field_to_json(field_from_json(jx, sig)).dump() == jx.dump());

    CHECK(rat_from_string(rat_to_string(Rational(-22, 8))) == Rational(-11, 4));
    CHECK_THROWS_AS(rat_from_string("x/y"), Error);
}
