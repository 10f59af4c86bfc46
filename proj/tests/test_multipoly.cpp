#include <doctest.h>

#include <conica/multipoly.hpp>
#include <conica/poly_io.hpp>

#include "test_util.hpp"

using namespace conica;

namespace {
const RegistryPtr R3 = VarRegistry::make({"x1", "x2", "x3"});
MultiPoly P(const std::string& s) { return MultiPoly::parse(R3, s); }
} // namespace

TEST_SUITE("multipoly") {

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational(3, 2).pow(3) == Rational(27, 8));
    CHECK(Rational(9, 4).sqrt() == Rational(3, 2));
    CHECK(!Rational(2).is_square());
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK(Rational(-5, 7).str() == "-5/7");
    CHECK(Rational(4, 2).str() == "2");
}

TEST_CASE("arith examples") {
    auto x1 = MultiPoly::variable(R3, "x1");
    auto x2 = MultiPoly::variable(R3, "x2");
    CHECK((x1 + (-x1)).is_zero());                           // additive inverse
    CHECK((x1 + x2) * (x1 - x2) == P("x1^2 - x2^2"));        // difference of squares
    CHECK((x1 + x2).pow(2) == P("x1^2 + 2*x1 x2 + x2^2"));   // binomial
    CHECK_THROWS_AS(x1.pow(-1), DomainError);
}

TEST_CASE("registry mismatch is an error") {
    auto other = VarRegistry::make({"y"});
    CHECK_THROWS_AS(MultiPoly::variable(R3, "x1") + MultiPoly::variable(other, "y"),
                    RegistryMismatchError);
}

TEST_CASE("canonical order is graded lex descending") {
    auto f = P("x2^2 + x1 x2 + x1^2 + x3 + 1");
    CHECK(f.str() == "x1^2 + x1 x2 + x2^2 + x3 + 1");
    CHECK(f.leading_exponents() == Exponents{2, 0, 0});
}

TEST_CASE("text grammar round trip and fixed forms") {
    CHECK(P("x1^2 - 2/3*x1 x2 + x2^2").str() == "x1^2 - 2/3*x1 x2 + x2^2");
    CHECK(P("x1 + x2 - 1*x3").str() == "x1 + x2 - 1*x3");
    CHECK(P("-x1").str() == "-1*x1");
    CHECK(P("0").is_zero());
    CHECK(MultiPoly::zero(R3).str() == "0");
    CHECK(P("5 - x1").str() == "-1*x1 + 5");
    CHECK_THROWS_AS(P("x9"), ParseError);
    CHECK_THROWS_AS(P("1 +"), ParseError);
}

TEST_CASE("derivative examples") {
    CHECK(P("x1^3").derivative("x1") == P("3*x1^2"));
    CHECK(P("x1 x2").derivative("x3").is_zero());
    auto R = VarRegistry::make({"x2", "l1"});
    auto f = MultiPoly::parse(R, "l1^2 x2^2");
    CHECK(f.derivative("l1") == MultiPoly::parse(R, "2*l1 x2^2"));
    CHECK_THROWS_AS(P("x1").derivative("zz"), DomainError);
}

TEST_CASE("substitute examples") {
    auto f = P("x1^2 + x2");
    CHECK(f.substitute(std::map<std::string, Rational>{{"x1", Rational(2)}}) == P("x2 + 4"));

    auto R = VarRegistry::make({"l1", "l2", "t"});
    auto g = MultiPoly::parse(R, "l1 l2");
    std::map<std::string, MultiPoly> b{{"l1", MultiPoly::constant(R, Rational(1))},
                                       {"l2", MultiPoly::variable(R, "t")}};
    CHECK(g.substitute(b) == MultiPoly::parse(R, "t"));
    CHECK_THROWS_AS(f.substitute(std::map<std::string, Rational>{{"q", Rational(1)}}),
                    DomainError);
}

TEST_CASE("substitute with polynomial values") {
    auto f = P("x1^2 - x2");
    std::map<std::string, MultiPoly> b{{"x1", P("x2 + x3")}};
    CHECK(f.substitute(b) == P("x2^2 + 2*x2 x3 + x3^2 - x2"));
}

TEST_CASE("coefficient extraction") {
    auto f = P("3*x1^2 x2 - x1 x3 + 7*x2");
    CHECK(f.coefficient_of("x1", 2) == P("3*x2"));
    CHECK(f.coefficient_of("x1", 1) == P("-1*x3"));
    CHECK(f.coefficient_of("x1", 0) == P("7*x2"));
    CHECK(f.degree_in("x1") == 2);
    CHECK(f.degree_in("x3") == 1);
}

TEST_CASE("embedding by name") {
    auto big = VarRegistry::make({"x3", "x1", "x2", "mu"});
    auto f = P("x1 + 2*x3");
    auto g = f.embed(big);
    CHECK(g == MultiPoly::parse(big, "x1 + 2*x3"));
    auto tiny = VarRegistry::make({"x1"});
    CHECK_THROWS_AS(f.embed(tiny), DomainError);
}

TEST_CASE("homogeneity") {
    int d = 0;
    CHECK(P("x1^2 + x2 x3").is_homogeneous(&d));
    CHECK(d == 2);
    CHECK(!P("x1^2 + x2").is_homogeneous());
    auto R = VarRegistry::make({"l1", "l2", "x1"});
    auto f = MultiPoly::parse(R, "l1^2 x1 + l1 l2");
    CHECK(f.is_homogeneous_in({"l1", "l2"}, &d));
    CHECK(d == 2);
}

TEST_CASE("content and primitive part") {
    auto f = P("4/3*x1^2 - 2*x2");
    CHECK(f.content() == Rational(2, 3));
    CHECK(f.primitive_part() == P("2*x1^2 - 3*x2"));
    CHECK((-f).primitive_part() == P("2*x1^2 - 3*x2"));
}

TEST_CASE("json round trip") {
    auto f = P("x1^2 - 2/3*x1 x2 + x2^2");
    auto j = poly_to_json(f);
    CHECK(j["vars"] == nlohmann::ordered_json({"x1", "x2", "x3"}));
    CHECK(poly_from_json(j) == f);
    CHECK(poly_from_json(R3, j) == f);
}

TEST_CASE("ring axioms on random polynomials") {
    TestRng rng;
    auto one = MultiPoly::constant(R3, 1);
    for (int i = 0; i < 40; ++i) {
        auto f = rng.poly(R3), g = rng.poly(R3), h = rng.poly(R3);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * one == f);
        CHECK(f * g == g * f);
        CHECK(MultiPoly::parse(R3, f.str()) == f);           // canonical-form idempotence
        CHECK(poly_from_json(R3, poly_to_json(f)) == f);
    }
}

} // TEST_SUITE
