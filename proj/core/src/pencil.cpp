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

#include "conica/pencil.hpp"

#include "conica/divide.hpp"
#include "conica/envelope.hpp"

namespace conica {

namespace {

const std::vector<std::string> kXVars{"x1", "x2", "x3"};
const std::vector<std::string> kLVars{"l1", "l2"};

void validate_entry(const MultiPoly& e) {
    for (const auto& xv : kXVars)
        if (e.registry()->contains(xv) && e.depends_on(xv))
            throw DomainError("ConicPencil: entry depends on plane coordinate " + xv);
    if (e.is_zero()) return;
    int d = 0;
    if (!e.is_homogeneous_in(kLVars, &d) || d != 2)
        throw DomainError("ConicPencil: entry not homogeneous of degree 2 in (l1,l2): " +
                          e.str());
}

} // namespace

ConicPencil::ConicPencil(std::array<std::array<MultiPoly, 3>, 3> m) : m_(std::move(m)) {
    const auto& reg = m_[0][0].registry();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (!same_registry(m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].registry(), reg))
                throw RegistryMismatchError("ConicPencil: mixed registries");
            if (m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                m_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw DomainError("ConicPencil: matrix not symmetric");
            validate_entry(m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    if (!reg->contains("l1") || !reg->contains("l2"))
        throw DomainError("ConicPencil: registry lacks the pencil parameters l1, l2");
}

ConicPencil ConicPencil::from_form(const MultiPoly& q) {
    int d = 0;
    if (!q.is_homogeneous_in(kXVars, &d) || d != 2)
        throw DomainError("ConicPencil: form not homogeneous of degree 2 in x");
    const Rational half(1, 2);
    std::array<std::array<MultiPoly, 3>, 3> m{{
        {MultiPoly::zero(q.registry()), MultiPoly::zero(q.registry()), MultiPoly::zero(q.registry())},
        {MultiPoly::zero(q.registry()), MultiPoly::zero(q.registry()), MultiPoly::zero(q.registry())},
        {MultiPoly::zero(q.registry()), MultiPoly::zero(q.registry()), MultiPoly::zero(q.registry())},
    }};
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            MultiPoly coeff =
                (i == j) ? q.coefficient_of(kXVars[static_cast<std::size_t>(i)], 2)
                             .coefficient_of(kXVars[static_cast<std::size_t>((i + 1) % 3)], 0)
                             .coefficient_of(kXVars[static_cast<std::size_t>((i + 2) % 3)], 0)
                         : q.coefficient_of(kXVars[static_cast<std::size_t>(i)], 1)
                               .coefficient_of(kXVars[static_cast<std::size_t>(j)], 1)
                               .coefficient_of(kXVars[static_cast<std::size_t>(3 - i - j)], 0);
            if (i != j) coeff = coeff * half;
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coeff;
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = std::move(coeff);
        }
    }
    return ConicPencil(std::move(m));
}

MultiPoly ConicPencil::form() const {
    const auto& reg = registry();
    std::array<MultiPoly, 3> x{MultiPoly::variable(reg, "x1"), MultiPoly::variable(reg, "x2"),
                               MultiPoly::variable(reg, "x3")};
    MultiPoly q(reg);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q += entry(i, j) * x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
    return q;
}

WeierstrassPencilData build_weierstrass_pencil(const WeierstrassPencilParams& params) {
    // Build everything with symbolic parameters first.
    auto reg = weierstrass_registry();
    auto cubic = WeierstrassCubic::symbolic();
    auto x1 = MultiPoly::variable(reg, "x1");
    auto x2 = MultiPoly::variable(reg, "x2");
    auto x3 = MultiPoly::variable(reg, "x3");
    auto l1 = MultiPoly::variable(reg, "l1");
    auto l2 = MultiPoly::variable(reg, "l2");
    auto mu = MultiPoly::variable(reg, "mu");
    auto w2 = MultiPoly::variable(reg, "w2");
    auto w3 = MultiPoly::variable(reg, "w3");
    auto one = MultiPoly::constant(reg, 1);

    MultiPoly qe = q_eta(cubic);
    MultiPoly c = l1 * w3 - l2 * w2;
    MultiPoly B = l2 * x2 + c * x1;
    MultiPoly F = l1 * qe - mu * x1 * B;
    MultiPoly d = l2 * l2 * mu * mu;
    MultiPoly dg1 = mu * mu * c * c - d * (one + mu);
    MultiPoly dg2 = Rational(2) * (l2 * mu * mu * c);
    MultiPoly dNp = d * x1 * x1 + x3 * (dg1 * x1 + dg2 * x2 + mu * d * x3);
    MultiPoly Q = l1 * l1 * qe - Rational(2) * (l1 * mu * x1 * B) + dNp;
    MultiPoly l = dg1 * x1 + dg2 * x2 + mu * d * x3;

    ConicPencil pencil = ConicPencil::from_form(Q);
    // det(Q_lambda) = -(mu^2/4) p(lambda)^2
    MultiPoly scale = MultiPoly::constant(reg, Rational(-1, 4)) * mu * mu;
    MultiPoly p = certify_square(pencil, scale);
    // Disc_lambda(Q_lambda) = X1 * C1 exactly
    MultiPoly X1 = exact_divide(family_discriminant(Q), cubic.poly());

    WeierstrassPencilData data{std::move(pencil), std::move(F),  std::move(B),
                               std::move(c),      std::move(d),  std::move(dg1),
                               std::move(dg2),    mu,            std::move(l),
                               std::move(p),      std::move(X1), std::move(qe),
                               cubic};

    if (!params.mu && !params.w2 && !params.w3) return data;

    // Specialize the concrete parameters everywhere.
    std::map<std::string, Rational> bind;
    if (params.mu) {
        if (*params.mu == Rational(0) || (*params.mu == Rational(1) && !params.allow_nodal))
            throw DomainError("build_weierstrass_pencil: mu in {0,1}");
        bind.emplace("mu", *params.mu);
        data.cubic = WeierstrassCubic::with_mu(*params.mu, params.allow_nodal);
    }
    if (params.w2) bind.emplace("w2", *params.w2);
    if (params.w3) bind.emplace("w3", *params.w3);

    auto sub = [&bind](const MultiPoly& f) { return f.substitute(bind); };
    std::array<std::array<MultiPoly, 3>, 3> m{{
        {sub(data.pencil.entry(0, 0)), sub(data.pencil.entry(0, 1)), sub(data.pencil.entry(0, 2))},
        {sub(data.pencil.entry(1, 0)), sub(data.pencil.entry(1, 1)), sub(data.pencil.entry(1, 2))},
        {sub(data.pencil.entry(2, 0)), sub(data.pencil.entry(2, 1)), sub(data.pencil.entry(2, 2))},
    }};
    data.pencil = ConicPencil(std::move(m));
    data.F_lambda = sub(data.F_lambda);
    data.B = sub(data.B);
    data.c = sub(data.c);
    data.d = sub(data.d);
    data.dg1 = sub(data.dg1);
    data.dg2 = sub(data.dg2);
    data.g3 = sub(data.g3);
    data.l = sub(data.l);
    data.p = sub(data.p);
    data.X1 = sub(data.X1);
    data.q_eta = sub(data.q_eta);
    return data;
}

namespace {

void validate_linear_form(const MultiPoly& m, const char* which) {
    if (m.is_zero()) return;
    int d = 0;
    if (!m.is_homogeneous_in(kXVars, &d) || d != 1)
        throw DomainError(std::string("expected a homogeneous linear form in x for ") + which +
                          ", got " + m.str());
}

} // namespace

ConicPencil build_line_pencil(const MultiPoly& M1, const MultiPoly& M2, const MultiPoly& M3) {
    if (!same_registry(M1.registry(), M2.registry()) ||
        !same_registry(M1.registry(), M3.registry()))
        throw RegistryMismatchError("build_line_pencil: mixed registries");
    RegistryPtr reg = M1.registry();
    for (const auto& v : kXVars)
        if (!reg->contains(v)) throw DomainError("build_line_pencil: registry lacks " + v);
    if (!reg->contains("l1") || !reg->contains("l2"))
        reg = VarRegistry::merged(*reg, *VarRegistry::make(kLVars));
    MultiPoly m1 = M1.embed(reg), m2 = M2.embed(reg), m3 = M3.embed(reg);
    validate_linear_form(m1, "M1");
    validate_linear_form(m2, "M2");
    validate_linear_form(m3, "M3");

    auto x1 = MultiPoly::variable(reg, "x1");
    auto x2 = MultiPoly::variable(reg, "x2");
    auto x3 = MultiPoly::variable(reg, "x3");
    auto l1 = MultiPoly::variable(reg, "l1");
    auto l2 = MultiPoly::variable(reg, "l2");

    MultiPoly line = l2 * x2 - l1 * x3;
    MultiPoly Q = line * line +
                  Rational(2) * (x1 * (l1 * l1 * m2 + l2 * l2 * m3 + l1 * l2 * m1));
    return ConicPencil::from_form(Q);
}

MultiPoly envelope_cubic(const MultiPoly& M1, const MultiPoly& M2, const MultiPoly& M3) {
    if (!same_registry(M1.registry(), M2.registry()) ||
        !same_registry(M1.registry(), M3.registry()))
        throw RegistryMismatchError("envelope_cubic: mixed registries");
    const RegistryPtr& reg = M1.registry();
    for (const auto& v : kXVars)
        if (!reg->contains(v)) throw DomainError("envelope_cubic: registry lacks " + v);
    validate_linear_form(M1, "M1");
    validate_linear_form(M2, "M2");
    validate_linear_form(M3, "M3");
    auto x1 = MultiPoly::variable(reg, "x1");
    auto x2 = MultiPoly::variable(reg, "x2");
    auto x3 = MultiPoly::variable(reg, "x3");
    return Rational(2) * (M2 * x2 * x2) + Rational(2) * (M3 * x3 * x3) +
           Rational(4) * (x1 * M2 * M3) + Rational(2) * (x2 * x3 * M1) - x1 * M1 * M1;
}

RegistryPtr three_point_registry() {
    static const RegistryPtr reg = VarRegistry::make(
        {"x1", "x2", "x3", "l1", "l2", "M23", "M21", "M32", "M31", "M13", "M12", "M11"});
    return reg;
}

ConicPencil build_three_point_pencil(const ThreePointCoeffs& coeffs) {
    auto reg = three_point_registry();
    auto coeff = [&](const std::optional<Rational>& v, const char* name) {
        return v ? MultiPoly::constant(reg, *v) : MultiPoly::variable(reg, name);
    };
    MultiPoly M23 = coeff(coeffs.M23, "M23"), M21 = coeff(coeffs.M21, "M21");
    MultiPoly M32 = coeff(coeffs.M32, "M32"), M31 = coeff(coeffs.M31, "M31");
    MultiPoly M13 = coeff(coeffs.M13, "M13"), M12 = coeff(coeffs.M12, "M12");
    MultiPoly M11 = coeff(coeffs.M11, "M11");

    if (!(M32 + M23 + M12 + M13).is_zero())
        throw DomainError(
            "build_three_point_pencil: linear constraint M32 + M23 + M12 + M13 = 0 violated");

    const Rational two(2);
    struct Cond {
        MultiPoly value;
        const char* name;
    };
    std::array<Cond, 4> conds{{
        {two * M31 - M32 * M32, "rank condition at lambda = (0,1): 2*M31 != M32^2"},
        {two * M21 - M23 * M23, "rank condition at lambda = (1,0): 2*M21 != M23^2"},
        {two * (M21 + M31 + M11) - (M32 + M12) * (M32 + M12),
         "rank condition at lambda = (1,1): 2*(M21+M31+M11) != (M32+M12)^2"},
        {M32 + M13, "nondegeneracy condition: M32 + M13 != 0"},
    }};
    for (const auto& c : conds)
        if (c.value.is_zero())
            throw DomainError(std::string("build_three_point_pencil: ") + c.name);

    auto x1 = MultiPoly::variable(reg, "x1");
    auto x2 = MultiPoly::variable(reg, "x2");
    auto x3 = MultiPoly::variable(reg, "x3");
    return build_line_pencil(M13 * x3 + M12 * x2 + M11 * x1, M23 * x3 + M21 * x1,
                             M32 * x2 + M31 * x1);
}

} // namespace conica
