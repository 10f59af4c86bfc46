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

#ifndef CONICA_CUBIC_HPP
#define CONICA_CUBIC_HPP

#include <array>
#include <optional>
#include <vector>

#include "conica/multipoly.hpp"
#include "conica/series.hpp"

namespace conica {

/// Plane coordinates x1, x2, x3.
RegistryPtr plane_registry();

/// The working registry of the Weierstrass-pencil world:
/// x1, x2, x3 (plane), l1, l2 (pencil parameter), mu, w2, w3.
RegistryPtr weierstrass_registry();

/// Point of P^2 with homogeneous coordinates that may be rational
/// constants or polynomials in parameters.  Equality is projective.
struct ProjPoint {
    std::array<MultiPoly, 3> coord;

    static ProjPoint from_rationals(const RegistryPtr& reg, const Rational& a,
                                    const Rational& b, const Rational& c);

    bool is_null() const {
        return coord[0].is_zero() && coord[1].is_zero() && coord[2].is_zero();
    }
    /// Both non-null and all 2x2 minors vanish.
    bool projectively_equal(const ProjPoint& o) const;
    /// "(a : b : c)"
    std::string str() const;
};

/// The cubic x2^2 x3 - x1 (x1 - x3)(x1 - mu x3), with mu either a
/// rational value or the indeterminate mu of the working registry.
/// Smooth iff mu is not 0 or 1; mu = 1 (nodal, multiplicative type) is
/// admitted behind allow_nodal, mu = 0 never (the 2-torsion point eta
/// would be the node and the translation map degenerates).
class WeierstrassCubic {
public:
    static WeierstrassCubic symbolic();
    static WeierstrassCubic with_mu(const Rational& mu, bool allow_nodal = false);

    const MultiPoly& poly() const { return poly_; }
    const RegistryPtr& registry() const { return poly_.registry(); }
    bool is_symbolic() const { return !mu_value_.has_value(); }
    const std::optional<Rational>& mu_value() const { return mu_value_; }
    /// mu as a polynomial (a constant or the variable).
    const MultiPoly& mu() const { return mu_; }

    /// Evaluation at a point (projective coordinates as polynomials).
    MultiPoly evaluate(const ProjPoint& p) const;

private:
    WeierstrassCubic(MultiPoly poly, MultiPoly mu, std::optional<Rational> v)
        : poly_(std::move(poly)), mu_(std::move(mu)), mu_value_(std::move(v)) {}
    MultiPoly poly_;
    MultiPoly mu_;
    std::optional<Rational> mu_value_;
};

/// The 2-torsion points away from the flex at infinity: (0,0,1),
/// (1,0,1), (mu,0,1), each certified to lie on the curve.
std::vector<ProjPoint> two_torsion_points(const WeierstrassCubic& c);

/// The quadratic map (z1, z2, z3) realizing translation by
/// eta = (0,0,1): z = (mu x1^2, -mu x1 x2, -mu x1 x3 + x2^2 + (1+mu) x1^2).
std::array<MultiPoly, 3> translation_map(const WeierstrassCubic& c);

/// Translation of a point of the curve by eta.  The base point eta
/// itself maps to the origin O = (0,1,0) (group law), every other point
/// through the quadratic map.  Throws when a concrete point is not on
/// the curve.
ProjPoint translate_by_eta(const WeierstrassCubic& c, const ProjPoint& p);

/// The contact conic of eta: q_eta = (1+mu) x1^2 - mu x1 x3 + x2^2,
/// meeting the curve only at eta (with multiplicity 6).
MultiPoly q_eta(const WeierstrassCubic& c);

/// Power-series branch x1(x2) of the curve at eta in the chart x3 = 1,
/// with local parameter x2, truncated at the requested order.  Requires
/// a concrete mu (mu != 0) and order >= 2; computed by fixed-point
/// iteration on x1 = (1/mu)[x2^2 + (1+mu) x1^2 - x1^3].
RationalSeries branch_series(const WeierstrassCubic& c, int order);

/// q_eta restricted to the branch (in the chart x3 = 1); vanishes
/// through order 5 and has 1/mu^3 at order 6 (contact of order exactly 6).
RationalSeries qeta_on_branch(const WeierstrassCubic& c, int order);

/// The translation map restricted to the branch; the componentwise
/// valuations (4, 3, 6) exhibit the base point of the quadratic system
/// at eta with multiplicity 3.
std::array<RationalSeries, 3> translation_on_branch(const WeierstrassCubic& c, int order);

} // namespace conica

#endif
