#include <doctest.h>

#include <set>

#include "wittsuper/io.hpp"
#include "wittsuper/linalg.hpp"
#include "wittsuper/shadow.hpp"

using namespace wittsuper;

namespace {

SupportSet one_cone(int m, Weight base, std::vector<Root> free, std::vector<Root> plus) {
    SupportSet s;
    s.m = m;
    s.components.push_back(ShiftedCone{std::move(base), std::move(free), std::move(plus)});
    return s;
}

}  // namespace

TEST_CASE("root sets") {
    RootSystem rs = root_set(1, 3);
    std::vector<Root> expect = {{-1}, {1}, {2}, {3}};
    CHECK(rs.delta == expect);
    RootSystem rs2 = root_set(2, 2);
    CHECK(rs2.delta_prime.size() == 6);
    for (const Root& a : rs2.delta) CHECK(!is_zero_root(a));
    CHECK_THROWS_AS(root_set(0, 1), Error);
}

TEST_CASE("sl embedding") {
    // m = 1: [e_{-eps}, e_{+eps}] = -[d_1, t_1^2 d_1] = -2 t_1 d_1
    auto basis1 = sl_embedding(1);
    const VectorField *eminus = nullptr, *eplus = nullptr;
    for (const auto& b : basis1) {
        if (b.label == "e-1") eminus = &b.field;
        if (b.label == "e+1") eplus = &b.field;
    }
    REQUIRE(eminus);
    REQUIRE(eplus);
    VectorField br = bracket_w(*eminus, *eplus);
    VectorField expect = VectorField::basis(Signature{1, 0}, SuperMonomial{{1}, {}}, 1, Rational(-2));
    CHECK(br == expect);
    // m = 2: brackets of the 8 basis images close onto their span
    auto basis2 = sl_embedding(2);
    std::map<FieldTerm, size_t> coords;
    auto coord_of = [&](const FieldTerm& t) {
        auto [it, inserted] = coords.emplace(t, coords.size());
        return it->second;
    };
    std::vector<std::map<size_t, Rational>> vecs;
    auto to_vec = [&](const VectorField& v) {
        std::map<size_t, Rational> out;
        for (const auto& [t, c] : v.terms()) out[coord_of(t)] = c;
        return out;
    };
    for (const auto& b : basis2) vecs.push_back(to_vec(b.field));
    std::vector<VectorField> brs;
    for (const auto& x : basis2)
        for (const auto& y : basis2) brs.push_back(bracket_w(x.field, y.field));
    for (const auto& b : brs) to_vec(b);  // extend the coordinate table first
    size_t dim = coords.size();
    RowSpace span(dim);
    for (const auto& b : basis2) {
        std::vector<Rational> row(dim, Rational(0));
        for (const auto& [i, c] : to_vec(b.field)) row[i] = c;
        span.insert(row);
    }
    for (const auto& b : brs) {
        std::vector<Rational> row(dim, Rational(0));
        for (const auto& [i, c] : to_vec(b)) row[i] = c;
        CHECK(span.contains(row));
    }
}

TEST_CASE("direction classification") {
    // full line
    SupportSet line = one_cone(1, {Rational(1, 2)}, {{1}}, {});
    CHECK(classify_direction(line, {Rational(1, 2)}, {1}) == DirectionClass::Infinite);
    // supp C[t]: bounded only from below
    SupportSet poly = one_cone(1, {Rational(0)}, {}, {{1}});
    CHECK(classify_direction(poly, {Rational(0)}, {1}) == DirectionClass::Minus);
    CHECK(classify_direction(poly, {Rational(0)}, {-1}) == DirectionClass::Plus);
    // Z eps1 x Z_+ eps2 along eps1 - eps2
    SupportSet mixed = one_cone(2, {Rational(0), Rational(0)}, {{1, 0}}, {{0, 1}});
    CHECK(classify_direction(mixed, {Rational(0), Rational(0)}, {1, -1}) == DirectionClass::Plus);
    CHECK_THROWS_AS(classify_direction(poly, {Rational(7, 2)}, {1}), Error);
}

TEST_CASE("k_lambda and extremality") {
    SupportSet line = one_cone(1, {Rational(1, 2)}, {{1}}, {});
    CHECK(k_lambda(line, {Rational(1, 2)}).empty());
    CHECK(is_extremal(line, {Rational(1, 2)}, 4).extremal);
    SupportSet poly = one_cone(1, {Rational(0)}, {}, {{1}});
    std::vector<Root> k0 = k_lambda(poly, {Rational(0)});
    CHECK(k0 == std::vector<Root>{{-1}});
    CHECK(k_lambda(poly, {Rational(3)}).empty());
    CHECK(is_extremal(poly, {Rational(0)}, 4).extremal);
    CHECK(!is_extremal(poly, {Rational(3)}, 4).extremal);
}

TEST_CASE("shadow partitions") {
    // the z-line fixture: Delta'^I = {+-eps1}, Delta'^+ = {eps2, eps2 - eps1},
    // Delta'^- = {-eps2, eps1 - eps2}, Delta'^F empty
    SupportSet s = one_cone(2, {Rational(1, 2), Rational(0)}, {{1, 0}}, {{0, -1}});
    ShadowPartition sh = shadow(s, {Rational(1, 2), Rational(0)});
    std::set<Root> inf(sh.infinite.begin(), sh.infinite.end());
    std::set<Root> plus(sh.plus.begin(), sh.plus.end());
    std::set<Root> minus(sh.minus.begin(), sh.minus.end());
    CHECK(inf == std::set<Root>{{1, 0}, {-1, 0}});
    CHECK(plus == std::set<Root>{{0, 1}, {-1, 1}});
    CHECK(minus == std::set<Root>{{0, -1}, {1, -1}});
    CHECK(sh.finite.empty());
    CHECK(sh.gamma_consistent);
    // partition is independent of the sample point
    ShadowPartition sh2 = shadow(s, {Rational(5, 2), Rational(-2)});
    CHECK(sh2.infinite == sh.infinite);
    CHECK(sh2.plus == sh.plus);
    CHECK(sh2.minus == sh.minus);
}

TEST_CASE("parabolic decomposition") {
    SupportSet s = one_cone(2, {Rational(1, 2), Rational(0)}, {{1, 0}}, {{0, -1}});
    Weight lam{Rational(1, 2), Rational(0)};
    ShadowPartition sh = shadow(s, lam);
    ParabolicDecomposition pd = parabolic_decomposition(sh, lam, {}, {}, 3);
    std::vector<Root> zero = pd.zero;
    std::sort(zero.begin(), zero.end());
    CHECK(zero == std::vector<Root>{{-1, 0}, {1, 0}, {2, 0}, {3, 0}});
    // disjoint + exhaustive within the cap
    RootSystem rs = root_set(2, 3);
    CHECK(pd.zero.size() + pd.plus.size() + pd.minus.size() == rs.delta.size());
    std::set<Root> all;
    for (const Root& a : pd.zero) all.insert(a);
    for (const Root& a : pd.plus) all.insert(a);
    for (const Root& a : pd.minus) all.insert(a);
    CHECK(all.size() == rs.delta.size());
    // an empty infinite part gives an honest triangular decomposition
    SupportSet quad = one_cone(2, {Rational(0), Rational(0)}, {}, {{1, 0}, {0, 1}});
    Weight zero_w{Rational(0), Rational(0)};
    ShadowPartition shq = shadow(quad, zero_w);
    ParabolicDecomposition pdq = parabolic_decomposition(shq, zero_w, {{1, -1}}, {{-1, 1}}, 3);
    CHECK(pdq.zero.empty());
    CHECK_THROWS_AS(parabolic_decomposition(shq, zero_w, {{1, -1}, {-1, 1}}, {}, 3), Error);
    CHECK_THROWS_AS(parabolic_decomposition(shq, zero_w, {}, {}, 3), Error);  // split must cover Delta'^{F,0}
}

TEST_CASE("levi shapes") {
    RootSystem rs = root_set(2, 1);
    ShadowPartition sh;
    sh.m = 2;
    sh.infinite = {{1, 0}, {-1, 0}};
    for (const Root& r : rs.delta_prime)
        if (r != Root{1, 0} && r != Root{-1, 0}) sh.minus.push_back(r);
    LeviSpec spec = levi_shape(sh, 2);
    CHECK(spec.q == 1);
    CHECK(spec.n == 2);
    CHECK(spec.k_blocks == std::vector<std::vector<int>>{{2}});
    // Delta'^I = Delta': q = m, k empty
    ShadowPartition full;
    full.m = 2;
    full.infinite = rs.delta_prime;
    LeviSpec spec2 = levi_shape(full, 0);
    CHECK(spec2.q == 2);
    CHECK(spec2.k_blocks.empty());
    // inconsistent shadow: finite part outside Delta''
    ShadowPartition bad;
    bad.m = 2;
    bad.finite = {{1, 0}};
    CHECK_THROWS_AS(levi_shape(bad, 0), Error);
}

TEST_CASE("closure diagnostics") {
    SupportSet quad = one_cone(2, {Rational(0), Rational(0)}, {}, {{1, 0}, {0, 1}});
    ClosureReport rep = check_closure_lemmas(quad, {Rational(0), Rational(0)});
    CHECK(rep.all());
    // K_lambda formula on the quadrant: K_0 = {-eps1, -eps2, +-(eps1-eps2)}
    std::vector<Root> k = k_lambda(quad, {Rational(0), Rational(0)});
    std::set<Root> ks(k.begin(), k.end());
    CHECK(ks == std::set<Root>{{-1, 0}, {0, -1}, {1, -1}, {-1, 1}});
}

TEST_CASE("undecidable membership stays honest") {
    // a non-network generator (2,0) with a rational-but-not-integral target
    SupportSet s = one_cone(2, {Rational(0), Rational(0)}, {}, {{2, 0}});
    CHECK(support_member(s, {Rational(2), Rational(0)}) == Tri::Yes);
    CHECK(support_member(s, {Rational(1), Rational(0)}) == Tri::Undecided);
    CHECK_THROWS_AS(support_member_exact(s, {Rational(1), Rational(0)}), Error);
    CHECK(support_member(s, {Rational(-2), Rational(0)}) == Tri::No);  // LP-infeasible
}

TEST_CASE("support serialization") {
    SupportSet s = one_cone(2, {Rational(1, 2), Rational(0)}, {{1, 0}}, {{0, -1}});
    Json j = support_to_json(s);
    SupportSet back = support_from_json(j);
    CHECK(back.m == 2);
    CHECK(back.components.size() == 1);
    CHECK(back.components[0].base == s.components[0].base);
    CHECK(back.components[0].free_gens == s.components[0].free_gens);
    CHECK(back.components[0].plus_gens == s.components[0].plus_gens);
    CHECK(support_to_json(back).dump() == j.dump());
}

TEST_CASE("descriptor and tag parsing") {
    ModuleDescriptor d = parse_descriptor("laurent(1/2),poly", 2, 1);
    CHECK(d.factors[0].type == FactorType::LaurentShift);
    CHECK(d.factors[0].shift == Rational(1, 2));
    CHECK(d.factors[1].type == FactorType::Polynomial);
    CHECK(!d.parity_flag);
    CHECK(parse_descriptor("Pi:A", 1, 1).parity_flag);
    CHECK_THROWS_AS(parse_descriptor("laurent(2)", 1, 0), Error);  // integral shift
    CHECK_THROWS_AS(parse_descriptor("poly", 2, 0), Error);        // arity
    MTag t = parse_mtag("fund:A:1", Signature{1, 1});
    CHECK(t.kind == MTagKind::Fundamental);
    CHECK(t.level == 1);
    CHECK_THROWS_AS(parse_mtag("bogus", Signature{1, 1}), Error);
    Box b = parse_box("-2:2,0:3", 2);
    CHECK(b[1].second == Rational(3));
    CHECK_THROWS_AS(parse_box("-2:2", 2), Error);
}

TEST_CASE("exact linear algebra") {
    QMatrix a(3, 3);
    a.at(0, 0) = Rational(2);
    a.at(0, 1) = Rational(1);
    a.at(1, 1) = Rational(1, 3);
    a.at(2, 0) = Rational(4);
    a.at(2, 1) = Rational(2);
    CHECK(a.rank() == 2);
    auto ker = a.kernel();
    CHECK(ker.size() == 1);
    // A x = b solvable
    auto x = a.solve({Rational(3), Rational(1, 3), Rational(6)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] * 2 + (*x)[1] == Rational(3));
    CHECK(!a.solve({Rational(1), Rational(0), Rational(0)}).has_value());
    CHECK(rank_fraction_free({{Rational(1, 2), Rational(1)}, {Rational(1), Rational(2)}}) == 1);
}
