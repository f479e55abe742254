#include <doctest.h>

#include "wittsuper/classify.hpp"
#include "wittsuper/env.hpp"

using namespace wittsuper;

namespace {

EnvAlphabet uw_alphabet(int q, int n) {
    EnvAlphabet a;
    a.m = q;
    a.q = q;
    a.n = n;
    a.ubar = false;
    a.degree_cap = 12;
    return a;
}

EnvAlphabet ubar_alphabet(int q, int n) {
    EnvAlphabet a;
    a.m = q + 1;
    a.q = q;
    a.n = n;
    a.ubar = true;
    a.k_basis = levi_k_basis({{q + 1}});
    a.degree_cap = 12;
    return a;
}

SuperMonomial mono(std::vector<int> alpha, OddSet odd = {}) { return SuperMonomial{std::move(alpha), std::move(odd)}; }

// operator matrix of an EnvElement on the monomials of A_{q,n} up to degree
// cap; the independent oracle for normal ordering
std::map<std::pair<SuperMonomial, SuperMonomial>, Rational> operator_table(const EnvElement& e, int cap) {
    Signature sig = e.alphabet().wsig();
    std::map<std::pair<SuperMonomial, SuperMonomial>, Rational> out;
    std::vector<VectorField> fields = w_basis_elements(sig, cap);
    std::set<SuperMonomial> monos;
    for (const VectorField& f : fields)
        for (const auto& [t, c] : f.terms()) monos.insert(t.mono);
    for (const SuperMonomial& f : monos) {
        SuperPolynomial img = env_apply(e, SuperPolynomial::monomial(sig, f, Rational(1)));
        for (const auto& [g, c] : img.terms()) out[{f, g}] = c;
    }
    return out;
}

}  // namespace

TEST_CASE("normal ordering in U(W)") {
    EnvAlphabet alph = uw_alphabet(1, 0);
    // d_1 . t_1 d_1 -> t_1 d_1 . d_1 + d_1
    EnvElement raw(alph);
    raw.add({w_letter(alph, mono({0}), 1), w_letter(alph, mono({1}), 1)}, Rational(1));
    EnvElement nf = normal_order(raw);
    EnvElement expect(alph);
    expect.add({w_letter(alph, mono({1}), 1), w_letter(alph, mono({0}), 1)}, Rational(1));
    expect.add({w_letter(alph, mono({0}), 1)}, Rational(1));
    CHECK(nf == expect);
    // and both sides act identically on the degree window (the oracle)
    CHECK(operator_table(raw, 6) == operator_table(nf, 6));
}

TEST_CASE("Ubar relations") {
    EnvAlphabet alph = ubar_alphabet(1, 1);
    // t^a xi . t^b xi_J merges into a single A-letter with the tau sign
    EnvElement raw(alph);
    raw.add({a_letter(alph, mono({1}, {1})), a_letter(alph, mono({2}))}, Rational(1));
    EnvElement nf = normal_order(raw);
    EnvElement expect(alph);
    expect.add({a_letter(alph, mono({3}, {1}))}, Rational(1));
    CHECK(nf == expect);
    // overlapping odd parts annihilate
    EnvElement raw2(alph);
    raw2.add({a_letter(alph, mono({0}, {1})), a_letter(alph, mono({0}, {1}))}, Rational(1));
    CHECK(normal_order(raw2).is_zero());
    // t^0 is the unit
    EnvElement raw3(alph);
    raw3.add({a_letter(alph, mono({0}))}, Rational(1));
    EnvElement one(alph);
    one.add({}, Rational(1));
    CHECK(normal_order(raw3) == one);
    // A-letters are rejected outside Ubar
    EnvAlphabet uw = uw_alphabet(1, 1);
    CHECK_THROWS_AS(a_letter(uw, mono({1})), Error);
    // degree cap is a hard error
    EnvAlphabet tiny = ubar_alphabet(1, 0);
    tiny.degree_cap = 2;
    EnvElement big(tiny);
    CHECK_THROWS_AS(big.add({a_letter(tiny, mono({3}))}, Rational(1)), Error);
}

TEST_CASE("omega construction") {
    EnvAlphabet alph = uw_alphabet(1, 0);
    // r = 0: a single two-letter word
    EnvElement r0 = build_omega(alph, {1}, {0}, {}, {}, 0, 1, 1, 1);
    CHECK(r0.words().size() == 1);
    // r = 1, alpha = beta = 0: t_1 d . d - d . t_1 d
    EnvElement r1 = build_omega(alph, {0}, {0}, {}, {}, 1, 1, 1, 1);
    EnvElement expect(alph);
    expect.add({w_letter(alph, mono({1}), 1), w_letter(alph, mono({0}), 1)}, Rational(1));
    expect.add({w_letter(alph, mono({0}), 1), w_letter(alph, mono({1}), 1)}, Rational(-1));
    CHECK(r1 == expect);
    CHECK_THROWS_AS(build_omega(alph, {0}, {0}, {}, {}, 2, 2, 1, 1), Error);
}

TEST_CASE("X and Y operators") {
    EnvAlphabet alph = ubar_alphabet(1, 1);
    // X_{0, {}, d} = d
    EnvElement x0 = build_X(alph, {0}, {}, 1);
    EnvElement expect(alph);
    expect.add({w_letter(alph, mono({0}), 1)}, Rational(1));
    CHECK(x0 == expect);
    // X_{e_1, {}, d} = t_1 d - t_1 . d
    EnvElement x1 = build_X(alph, {1}, {}, 1);
    EnvElement expect1(alph);
    expect1.add({w_letter(alph, mono({1}), 1)}, Rational(1));
    expect1.add({a_letter(alph, mono({1})), w_letter(alph, mono({0}), 1)}, Rational(-1));
    CHECK(x1 == expect1);
    // Y_{0, {}, x} = x ox 1
    EnvElement y0 = build_Y(alph, {0}, {}, alph.k_basis.front());
    EnvElement expecty(alph);
    expecty.add({ka_letter(alph, alph.k_basis.front(), mono({0}))}, Rational(1));
    CHECK(y0 == expecty);
    // reconstruction at alpha = e_1: t_1 d = X_{e_1} + t_1 . X_0
    EnvElement lhs(alph);
    lhs.add({w_letter(alph, mono({1}), 1)}, Rational(1));
    EnvElement rhs = x1;
    EnvElement prefix(alph);
    prefix.add({a_letter(alph, mono({1}))}, Rational(1));
    rhs += env_mul(prefix, x0);
    IdentityCheck chk = check_identity(lhs, rhs);
    CHECK(chk.equal);
    CHECK(chk.residual_terms == 0);
    // a failing identity reports its residual
    IdentityCheck bad = check_identity(lhs, x1);
    CHECK(!bad.equal);
    CHECK(bad.residual_terms > 0);
}

TEST_CASE("closure samples") {
    EnvAlphabet alph = ubar_alphabet(1, 1);
    EnvElement x = build_X(alph, {1}, {}, 1);
    EnvElement y = build_Y(alph, {0}, {}, alph.k_basis.front());
    EnvElement b = env_bracket(x, y);
    std::vector<EnvElement> span;
    for (int a = 0; a <= 3; ++a)
        for (int mask = 0; mask < 2; ++mask) {
            OddSet I;
            if (mask) I.push_back(1);
            if (a + mask > 0)
                for (int d = 1; d <= 2; ++d) span.push_back(build_X(alph, {a}, I, d));
            span.push_back(build_Y(alph, {a}, I, alph.k_basis.front()));
        }
    CHECK(env_bracket(build_X(alph, {0}, {}, 1), build_X(alph, {0}, {}, 1)).is_zero());
    if (!b.is_zero()) CHECK(span_solve(b, span).has_value());
}

TEST_CASE("closure failure is reported with its residual") {
    EnvAlphabet alph = ubar_alphabet(1, 1);
    std::vector<EnvElement> gens = {build_X(alph, {1}, {}, 1), build_X(alph, {2}, {}, 1)};
    // deliberately too small a span: the bracket lands outside
    std::vector<EnvElement> span = {build_X(alph, {1}, {}, 1)};
    CHECK_THROWS_AS(t_subalgebra_closure(gens, span), Error);
    try {
        t_subalgebra_closure(gens, span);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SpanSolveFailure);
    }
}

TEST_CASE("omega annihilates the natural module") {
    EnvAlphabet alph = uw_alphabet(1, 0);
    Signature sig{1, 0};
    EnvElement om = build_omega(alph, {0}, {0}, {}, {}, 2, 1, 1, 1);
    for (int k = 0; k <= 8; ++k)
        CHECK(env_apply(om, SuperPolynomial::monomial(sig, mono({k}), Rational(1))).is_zero());
}
