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

#include "conica/divide.hpp"

namespace conica {

namespace {

// lm(f) / lm(g) as a monomial, or nullopt when not divisible.
std::optional<MultiPoly> leading_monomial_quotient(const MultiPoly& f, const MultiPoly& g) {
    const Exponents& ef = f.leading_exponents();
    const Exponents& eg = g.leading_exponents();
    Exponents q(ef.size());
    for (std::size_t i = 0; i < ef.size(); ++i) {
        if (ef[i] < eg[i]) return std::nullopt;
        q[i] = ef[i] - eg[i];
    }
    return MultiPoly::monomial(f.registry(), q,
                               f.leading_coefficient() / g.leading_coefficient());
}

std::optional<MultiPoly> divide_impl(const MultiPoly& f, const MultiPoly& g,
                                     MultiPoly* remainder_out) {
    MultiPoly q(f.registry());
    MultiPoly r = f;
    while (!r.is_zero()) {
        auto t = leading_monomial_quotient(r, g);
        if (!t) {
            if (remainder_out) *remainder_out = r;
            return std::nullopt;
        }
        q += *t;
        r -= *t * g;
    }
    return q;
}

} // namespace

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw DomainError("exact_divide: division by zero polynomial");
    if (!same_registry(f.registry(), g.registry()))
        throw RegistryMismatchError("exact_divide: operands use different registries");
    MultiPoly rem(f.registry());
    auto q = divide_impl(f, g, &rem);
    if (!q)
        throw DivisionError("exact_divide: not divisible, remainder " + rem.str(), rem);
    if (*q * g != f)  // re-multiplication certificate
        throw Error("exact_divide: internal certification failure");
    return *q;
}

std::optional<MultiPoly> try_exact_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw DomainError("exact_divide: division by zero polynomial");
    if (!same_registry(f.registry(), g.registry()))
        throw RegistryMismatchError("exact_divide: operands use different registries");
    return divide_impl(f, g, nullptr);
}

MultiPoly content_in(const MultiPoly& f, const std::string& v) {
    MultiPoly c(f.registry());
    for (const auto& coeff : f.coefficients_in(v)) {
        if (coeff.is_zero()) continue;
        c = c.is_zero() ? coeff.primitive_part() : poly_gcd(c, coeff);
        if (c.is_constant()) break;
    }
    return c.is_zero() ? MultiPoly::zero(f.registry()) : c;
}

namespace {

int degree_in_idx(const MultiPoly& f, const std::string& v) { return f.degree_in(v); }

// Pseudo-remainder of A by B with respect to v: the remainder of
// lc(B)^(deg A - deg B + 1) * A under division by B in R[v].
MultiPoly pseudo_remainder(const MultiPoly& A, const MultiPoly& B, const std::string& v) {
    const int db = B.degree_in(v);
    const MultiPoly lB = B.coefficient_of(v, db);
    MultiPoly R = A;
    int e = A.degree_in(v) - db + 1;
    const MultiPoly vpoly = MultiPoly::variable(A.registry(), v);
    while (!R.is_zero() && R.degree_in(v) >= db) {
        const int dr = R.degree_in(v);
        const MultiPoly lR = R.coefficient_of(v, dr);
        R = R * lB - lR * vpoly.pow(dr - db) * B;
        --e;
    }
    for (; e > 0; --e) R = R * lB;
    return R;
}

// Subresultant PRS gcd of two primitive polynomials in v (Cohen, Alg. 3.3.1).
MultiPoly prs_gcd_primitive(MultiPoly A, MultiPoly B, const std::string& v) {
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    MultiPoly g = MultiPoly::constant(A.registry(), 1);
    MultiPoly h = g;
    while (true) {
        const int delta = A.degree_in(v) - B.degree_in(v);
        MultiPoly R = pseudo_remainder(A, B, v);
        if (R.is_zero()) return B;
        if (R.degree_in(v) == 0) return MultiPoly::constant(A.registry(), 1);
        A = B;
        B = exact_divide(R, g * h.pow(delta));
        g = A.coefficient_of(v, A.degree_in(v));
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = exact_divide(g.pow(delta), h.pow(delta - 1));
        // delta == 0 keeps h.
    }
}

} // namespace

MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g) {
    if (!same_registry(f.registry(), g.registry()))
        throw RegistryMismatchError("poly_gcd: operands use different registries");
    if (f.is_zero() && g.is_zero()) throw DomainError("poly_gcd: gcd(0,0)");
    if (f.is_zero()) return g.primitive_part();
    if (g.is_zero()) return f.primitive_part();
    if (f.is_constant() || g.is_constant())
        return MultiPoly::constant(f.registry(), 1);

    // Main variable: first registry variable occurring in f or g.
    const auto& reg = *f.registry();
    std::string v;
    for (std::size_t i = 0; i < reg.size(); ++i) {
        if (f.depends_on(reg.name(i)) || g.depends_on(reg.name(i))) {
            v = reg.name(i);
            break;
        }
    }

    if (!f.depends_on(v)) return poly_gcd(f, content_in(g, v));
    if (!g.depends_on(v)) return poly_gcd(g, content_in(f, v));

    MultiPoly cf = content_in(f, v);
    MultiPoly cg = content_in(g, v);
    MultiPoly c = poly_gcd(cf, cg);
    MultiPoly h = prs_gcd_primitive(exact_divide(f, cf), exact_divide(g, cg), v);
    // Strip the content the PRS may have accumulated in v's coefficients.
    h = exact_divide(h, content_in(h, v));
    return (c * h).primitive_part();
}

MultiPoly poly_square_root(const MultiPoly& f) {
    if (f.is_zero()) throw DomainError("poly_square_root: zero input");

    // Square root of the leading term, positive sign.
    const Exponents& le = f.leading_exponents();
    const Rational& lc = f.leading_coefficient();
    Exponents he(le.size());
    for (std::size_t i = 0; i < le.size(); ++i) {
        if (le[i] % 2 != 0)
            throw NotASquareError("poly_square_root: odd leading exponent",
                                  MultiPoly::monomial(f.registry(), le, lc));
        he[i] = le[i] / 2;
    }
    if (!lc.is_square())
        throw NotASquareError("poly_square_root: leading coefficient not a square",
                              MultiPoly::monomial(f.registry(), le, lc));

    MultiPoly g = MultiPoly::monomial(f.registry(), he, lc.sqrt());
    MultiPoly r = f - g * g;
    while (!r.is_zero()) {
        // Next coefficient: lt(r) / (2*lt(g)).
        const Exponents& er = r.leading_exponents();
        const Exponents& eg = g.leading_exponents();
        Exponents et(er.size());
        for (std::size_t i = 0; i < er.size(); ++i) {
            if (er[i] < eg[i])
                throw NotASquareError(
                    "poly_square_root: not a perfect square, first mismatching term " +
                        MultiPoly::monomial(f.registry(), er, r.leading_coefficient()).str(),
                    MultiPoly::monomial(f.registry(), er, r.leading_coefficient()));
            et[i] = er[i] - eg[i];
        }
        MultiPoly t = MultiPoly::monomial(
            f.registry(), et, r.leading_coefficient() / (Rational(2) * g.leading_coefficient()));
        g += t;
        r = f - g * g;
    }
    return g;
}

} // namespace conica
