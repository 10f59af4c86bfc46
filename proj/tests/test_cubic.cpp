#include <doctest.h>

#include <conica/cubic.hpp>
#include <conica/divide.hpp>

using namespace conica;

namespace {
const RegistryPtr R8 = weierstrass_registry();
MultiPoly P(const std::string& s) { return MultiPoly::parse(R8, s); }
} // namespace

TEST_SUITE("cubic") {

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(WeierstrassCubic::with_mu(Rational(0)), DomainError);
    CHECK_THROWS_AS(WeierstrassCubic::with_mu(Rational(0), true), DomainError);
    CHECK_THROWS_AS(WeierstrassCubic::with_mu(Rational(1)), DomainError);
    CHECK_NOTHROW(WeierstrassCubic::with_mu(Rational(1), true));  // nodal, multiplicative type
}

TEST_CASE("curve polynomial") {
    auto c = WeierstrassCubic::with_mu(Rational(2));
    CHECK(c.poly() == P("x2^2 x3 - x1^3 + 3*x1^2 x3 - 2*x1 x3^2"));
    int d = 0;
    CHECK(c.poly().is_homogeneous_in({"x1", "x2", "x3"}, &d));
    CHECK(d == 3);
    auto s = WeierstrassCubic::symbolic();
    CHECK(s.poly() == P("x2^2 x3 - x1^3 + x1^2 x3 mu + x1^2 x3 - x1 x3^2 mu"));
}

TEST_CASE("two torsion points") {
    auto c = WeierstrassCubic::with_mu(Rational(2));
    auto pts = two_torsion_points(c);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].projectively_equal(ProjPoint::from_rationals(R8, 0, 0, 1)));
    CHECK(pts[1].projectively_equal(ProjPoint::from_rationals(R8, 1, 0, 1)));
    CHECK(pts[2].projectively_equal(ProjPoint::from_rationals(R8, 2, 0, 1)));

    auto s = WeierstrassCubic::symbolic();
    auto spts = two_torsion_points(s);
    CHECK(spts[2].coord[0] == P("mu"));
    CHECK(spts[2].coord[1].is_zero());
    // membership is certified inside two_torsion_points; re-check here
    for (const auto& p : spts) CHECK(s.evaluate(p).is_zero());
    // fixed under x2 -> -x2
    for (const auto& p : spts) {
        ProjPoint q{{p.coord[0], -p.coord[1], p.coord[2]}};
        bool fixed = true;
        for (int i = 0; i < 3 && fixed; ++i)
            for (int j = i + 1; j < 3 && fixed; ++j)
                fixed = (p.coord[i] * q.coord[j] - p.coord[j] * q.coord[i]).is_zero();
        CHECK(fixed);
    }
}

TEST_CASE("translation of special points") {
    auto c = WeierstrassCubic::symbolic();
    auto O = ProjPoint::from_rationals(R8, 0, 1, 0);
    auto eta = ProjPoint::from_rationals(R8, 0, 0, 1);

    CHECK(translate_by_eta(c, O).projectively_equal(eta));       // O + eta = eta
    CHECK(translate_by_eta(c, eta).projectively_equal(O));       // 2 eta = O (base point case)

    // the chord x2 = 0 permutes the 2-torsion points: (1,0,1) + eta = (mu,0,1)
    auto p = ProjPoint::from_rationals(R8, 1, 0, 1);
    ProjPoint expected{{P("mu"), MultiPoly::zero(R8), MultiPoly::constant(R8, 1)}};
    CHECK(translate_by_eta(c, p).projectively_equal(expected));

    CHECK_THROWS_AS(translate_by_eta(c, ProjPoint::from_rationals(R8, 1, 1, 1)), DomainError);
}

TEST_CASE("curve preservation under translation, mu symbolic") {
    auto c = WeierstrassCubic::symbolic();
    auto z = translation_map(c);
    std::map<std::string, MultiPoly> b{{"x1", z[0]}, {"x2", z[1]}, {"x3", z[2]}};
    auto pulled = c.poly().substitute(b);
    auto q = exact_divide(pulled, c.poly());   // throws if not exactly divisible
    CHECK(q * c.poly() == pulled);
    CHECK(q.degree_in("x1") + 0 == 3);
}

TEST_CASE("translation is an involution modulo the curve, mu symbolic") {
    auto c = WeierstrassCubic::symbolic();
    auto z = translation_map(c);
    std::map<std::string, MultiPoly> b{{"x1", z[0]}, {"x2", z[1]}, {"x3", z[2]}};
    std::array<MultiPoly, 3> zz{z[0].substitute(b), z[1].substitute(b), z[2].substitute(b)};
    std::array<MultiPoly, 3> x{MultiPoly::variable(R8, "x1"), MultiPoly::variable(R8, "x2"),
                               MultiPoly::variable(R8, "x3")};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            CHECK(divides(c.poly(), zz[i] * x[j] - zz[j] * x[i]));
}

TEST_CASE("base locus of the translation system") {
    auto c = WeierstrassCubic::symbolic();
    auto z = translation_map(c);
    std::map<std::string, MultiPoly> x1zero{{"x1", MultiPoly::zero(R8)}};
    CHECK(z[0].substitute(x1zero).is_zero());
    CHECK(z[1].substitute(x1zero).is_zero());
    CHECK(z[2].substitute(x1zero) == P("x2^2"));   // forces x2 = 0: base point is eta only
}

TEST_CASE("contact conic q_eta") {
    auto s = WeierstrassCubic::symbolic();
    CHECK(q_eta(s) == P("x1^2 mu + x1^2 - x1 x3 mu + x2^2"));
    auto c = WeierstrassCubic::with_mu(Rational(2));
    CHECK(q_eta(c) == P("3*x1^2 - 2*x1 x3 + x2^2"));
    // passes through eta
    std::map<std::string, Rational> at_eta{{"x1", 0}, {"x2", 0}, {"x3", 1}};
    CHECK(q_eta(c).substitute(at_eta).is_zero());
}

TEST_CASE("branch series at eta") {
    auto c2 = WeierstrassCubic::with_mu(Rational(2));
    auto s = branch_series(c2, 5);
    CHECK(s.coefficient(0).is_zero());
    CHECK(s.coefficient(1).is_zero());
    CHECK(s.coefficient(2) == Rational(1, 2));
    CHECK(s.coefficient(3).is_zero());
    CHECK(s.coefficient(4) == Rational(3, 8));
    CHECK(s.coefficient(5).is_zero());

    auto c1 = WeierstrassCubic::with_mu(Rational(1), true);
    auto s1 = branch_series(c1, 5);
    CHECK(s1.coefficient(2) == Rational(1));
    CHECK(s1.coefficient(4) == Rational(2));

    CHECK_THROWS_AS(branch_series(WeierstrassCubic::symbolic(), 5), DomainError);
    CHECK_THROWS_AS(branch_series(c2, 1), DomainError);
}

TEST_CASE("series branch lies on the curve") {
    // residual of the affine curve equation along the branch vanishes to
    // the truncation order
    auto c = WeierstrassCubic::with_mu(Rational(3));
    int order = 9;
    auto x = branch_series(c, order);
    auto t = RationalSeries::parameter(order);
    // x2^2 - x1(x1-1)(x1-mu) with x3 = 1
    auto lhs = t.pow(2) - x * (x - RationalSeries::constant(order, 1)) *
                              (x - RationalSeries::constant(order, 3));
    CHECK(lhs.is_zero());
}

TEST_CASE("q_eta has contact of order exactly 6") {
    auto c = WeierstrassCubic::with_mu(Rational(2));
    auto comp = qeta_on_branch(c, 8);
    CHECK(comp.valuation() == 6);
    CHECK(comp.coefficient(6) == Rational(1, 8));   // 1/mu^3
}

TEST_CASE("base point multiplicity through the branch") {
    auto c = WeierstrassCubic::with_mu(Rational(2));
    auto z = translation_on_branch(c, 8);
    CHECK(z[0].valuation() == 4);
    CHECK(z[1].valuation() == 3);   // the minimum: multiplicity 3
    CHECK(z[2].valuation() == 6);
}

} // TEST_SUITE
