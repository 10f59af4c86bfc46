/*
   Copyright 2026 the conica authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "conica/cubic.hpp"

namespace conica {

RegistryPtr plane_registry() {
    static const RegistryPtr reg = VarRegistry::make({"x1", "x2", "x3"});
    return reg;
}

RegistryPtr weierstrass_registry() {
    static const RegistryPtr reg =
        VarRegistry::make({"x1", "x2", "x3", "l1", "l2", "mu", "w2", "w3"});
    return reg;
}

ProjPoint ProjPoint::from_rationals(const RegistryPtr& reg, const Rational& a,
                                    const Rational& b, const Rational& c) {
    ProjPoint p{{MultiPoly::constant(reg, a), MultiPoly::constant(reg, b),
                 MultiPoly::constant(reg, c)}};
    if (p.is_null()) throw DomainError("ProjPoint: all coordinates zero");
    return p;
}

bool ProjPoint::projectively_equal(const ProjPoint& o) const {
    if (is_null() || o.is_null()) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(coord[i] * o.coord[j] - coord[j] * o.coord[i]).is_zero()) return false;
    return true;
}

std::string ProjPoint::str() const {
    return "(" + coord[0].str() + " : " + coord[1].str() + " : " + coord[2].str() + ")";
}

namespace {

MultiPoly weierstrass_poly(const RegistryPtr& reg, const MultiPoly& mu) {
    auto x1 = MultiPoly::variable(reg, "x1");
    auto x2 = MultiPoly::variable(reg, "x2");
    auto x3 = MultiPoly::variable(reg, "x3");
    return x2 * x2 * x3 - x1 * (x1 - x3) * (x1 - mu * x3);
}

} // namespace

WeierstrassCubic WeierstrassCubic::symbolic() {
    auto reg = weierstrass_registry();
    auto mu = MultiPoly::variable(reg, "mu");
    return WeierstrassCubic(weierstrass_poly(reg, mu), mu, std::nullopt);
}

WeierstrassCubic WeierstrassCubic::with_mu(const Rational& mu, bool allow_nodal) {
    if (mu == Rational(0))
        throw DomainError("WeierstrassCubic: mu = 0 is excluded (eta would be the node)");
    if (mu == Rational(1) && !allow_nodal)
        throw DomainError("WeierstrassCubic: mu in {0,1} (pass allow_nodal for mu = 1)");
    auto reg = weierstrass_registry();
    auto mup = MultiPoly::constant(reg, mu);
    return WeierstrassCubic(weierstrass_poly(reg, mup), mup, mu);
}

MultiPoly WeierstrassCubic::evaluate(const ProjPoint& p) const {
    std::map<std::string, MultiPoly> b{
        {"x1", p.coord[0]}, {"x2", p.coord[1]}, {"x3", p.coord[2]}};
    return poly_.substitute(b);
}

std::vector<ProjPoint> two_torsion_points(const WeierstrassCubic& c) {
    const auto& reg = c.registry();
    auto zero = MultiPoly::zero(reg);
    auto one = MultiPoly::constant(reg, 1);
    std::vector<ProjPoint> pts{
        ProjPoint{{zero, zero, one}},
        ProjPoint{{one, zero, one}},
        ProjPoint{{c.mu(), zero, one}},
    };
    for (const auto& p : pts) {
        if (!c.evaluate(p).is_zero())
            throw Error("two_torsion_points: certification failed for " + p.str());
    }
    return pts;
}

std::array<MultiPoly, 3> translation_map(const WeierstrassCubic& c) {
    const auto& reg = c.registry();
    auto x1 = MultiPoly::variable(reg, "x1");
    auto x2 = MultiPoly::variable(reg, "x2");
    auto x3 = MultiPoly::variable(reg, "x3");
    const auto& mu = c.mu();
    auto one = MultiPoly::constant(reg, 1);
    return {mu * x1 * x1, -(mu * x1 * x2), -(mu * x1 * x3) + x2 * x2 + (one + mu) * x1 * x1};
}

ProjPoint translate_by_eta(const WeierstrassCubic& c, const ProjPoint& p) {
    if (p.is_null()) throw DomainError("translate_by_eta: null point");
    if (!c.evaluate(p).is_zero())
        throw DomainError("translate_by_eta: point " + p.str() + " is not on the curve");
    auto z = translation_map(c);
    std::map<std::string, MultiPoly> b{
        {"x1", p.coord[0]}, {"x2", p.coord[1]}, {"x3", p.coord[2]}};
    ProjPoint q{{z[0].substitute(b), z[1].substitute(b), z[2].substitute(b)}};
    if (q.is_null()) {
        // base point of the quadratic map: eta + eta = O
        const auto& reg = c.registry();
        return ProjPoint{{MultiPoly::zero(reg), MultiPoly::constant(reg, 1),
                          MultiPoly::zero(reg)}};
    }
    return q;
}

MultiPoly q_eta(const WeierstrassCubic& c) {
    const auto& reg = c.registry();
    auto x1 = MultiPoly::variable(reg, "x1");
    auto x2 = MultiPoly::variable(reg, "x2");
    auto x3 = MultiPoly::variable(reg, "x3");
    auto one = MultiPoly::constant(reg, 1);
    return (one + c.mu()) * x1 * x1 - c.mu() * x1 * x3 + x2 * x2;
}

RationalSeries branch_series(const WeierstrassCubic& c, int order) {
    if (c.is_symbolic())
        throw DomainError("branch_series: mu must be concrete");
    if (order < 2) throw DomainError("branch_series: order must be at least 2");
    const Rational mu = *c.mu_value();
    const Rational inv_mu = mu.inverse();
    const Rational one_plus_mu = Rational(1) + mu;

    auto t2 = RationalSeries::parameter(order).pow(2);
    RationalSeries x(order);
    // x = (1/mu)[t^2 + (1+mu) x^2 - x^3]; each pass extends the correct
    // prefix by two orders.
    for (int pass = 0; pass <= order; ++pass) {
        RationalSeries next =
            (t2 + x.pow(2).scaled(one_plus_mu) - x.pow(3)).scaled(inv_mu);
        if (next == x) break;
        x = next;
    }
    return x;
}

RationalSeries qeta_on_branch(const WeierstrassCubic& c, int order) {
    auto x = branch_series(c, order);
    const Rational mu = *c.mu_value();
    auto t2 = RationalSeries::parameter(order).pow(2);
    return x.pow(2).scaled(Rational(1) + mu) - x.scaled(mu) + t2;
}

std::array<RationalSeries, 3> translation_on_branch(const WeierstrassCubic& c, int order) {
    auto x = branch_series(c, order);
    const Rational mu = *c.mu_value();
    auto t = RationalSeries::parameter(order);
    auto z3 = x.pow(2).scaled(Rational(1) + mu) - x.scaled(mu) + t.pow(2);
    return {x.pow(2).scaled(mu), -(x * t).scaled(mu), z3};
}

} // namespace conica
