#include <doctest.h>

#include <conica/divide.hpp>
#include <conica/resultant.hpp>

#include "test_util.hpp"

using namespace conica;

namespace {
const RegistryPtr RV = VarRegistry::make({"v", "a", "b", "x", "y"});
MultiPoly P(const std::string& s) { return MultiPoly::parse(RV, s); }

// Laplace expansion along the first row, as an independent oracle for
// the Bareiss determinant.
MultiPoly laplace_det(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    MultiPoly det(m[0][0].registry());
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<MultiPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MultiPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        MultiPoly c = m[0][j] * laplace_det(minor);
        det += (j % 2 == 0) ? c : -c;
    }
    return det;
}
} // namespace

TEST_SUITE("resultant") {

TEST_CASE("linear case") {
    CHECK(resultant(P("v - a"), P("v - b"), "v") == P("a - b"));
}

TEST_CASE("evaluation at a root") {
    CHECK(resultant(P("v^2 - x"), P("v - 1"), "v") == P("1 - x"));
}

TEST_CASE("product formula over roots") {
    // roots +-sqrt(x), +-sqrt(y): product of differences is (x - y)^2
    CHECK(resultant(P("v^2 - x"), P("v^2 - y"), "v") == P("x^2 - 2*x y + y^2"));
}

TEST_CASE("constant inputs are rejected") {
    CHECK_THROWS_AS(resultant(P("a"), P("v - b"), "v"), DomainError);
    CHECK_THROWS_AS(resultant(P("v - b"), P("3"), "v"), DomainError);
}

TEST_CASE("antisymmetry under swapping") {
    TestRng rng(5);
    auto Rxy = VarRegistry::make({"v", "x"});
    for (int i = 0; i < 20; ++i) {
        MultiPoly f(Rxy), g(Rxy);
        // random univariate-in-v with x coefficients, degree 1..3
        int df = static_cast<int>(rng.below(3)) + 1;
        int dg = static_cast<int>(rng.below(3)) + 1;
        for (int k = 0; k <= df; ++k)
            f.add_term({k, static_cast<int>(rng.below(2))}, rng.rational());
        for (int k = 0; k <= dg; ++k)
            g.add_term({k, static_cast<int>(rng.below(2))}, rng.rational());
        if (f.degree_in("v") < 1 || g.degree_in("v") < 1) continue;
        int m = f.degree_in("v"), n = g.degree_in("v");
        auto lhs = resultant(f, g, "v");
        auto rhs = resultant(g, f, "v");
        if ((m * n) % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("resultant vanishes iff common factor") {
    auto common = P("v + x");
    CHECK(resultant(common * P("v - 1"), common * P("v - y"), "v").is_zero());
    CHECK(!resultant(P("v^2 + 1"), P("v + 2"), "v").is_zero());
}

TEST_CASE("discriminant degree 2 convention") {
    CHECK(discriminant_in(P("a v^2 + b v + x"), "v") == P("b^2 - 4*a x"));
    CHECK(discriminant_in(P("v^2 - x y"), "v") == P("4*x y"));
    CHECK_THROWS_AS(discriminant_in(P("v + a"), "v"), DomainError);
}

TEST_CASE("higher-degree discriminant is the raw resultant") {
    // monic cubic v^3 + a v + b: classical disc is -4a^3 - 27b^2, and
    // Res(f, f') = (-1)^(3*2/2) * disc = 4a^3 + 27b^2.
    CHECK(discriminant_in(P("v^3 + a v + b"), "v") == P("4*a^3 + 27*b^2"));
}

TEST_CASE("bareiss matches laplace on random matrices") {
    TestRng rng(19);
    auto R2 = VarRegistry::make({"x", "y"});
    for (int trial = 0; trial < 6; ++trial) {
        std::size_t n = 4 + static_cast<std::size_t>(trial % 2);
        std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly::zero(R2)));
        for (auto& row : m)
            for (auto& e : row) e = rng.poly(R2, 2, 1);
        CHECK(matrix_determinant(m) == laplace_det(m));
    }
}

} // TEST_SUITE
