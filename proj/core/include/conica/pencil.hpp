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

#ifndef CONICA_PENCIL_HPP
#define CONICA_PENCIL_HPP

#include <array>
#include <optional>

#include "conica/cubic.hpp"
#include "conica/multipoly.hpp"

namespace conica {

/// Symmetric 3x3 matrix of polynomials in (l1, l2) and parameters,
/// constant in x, every nonzero entry homogeneous of degree exactly 2 in
/// (l1, l2): a conic in the space of conics, i.e. a quadratic pencil.
/// The stored matrix is the half-coefficient matrix of the quadratic
/// form (off-diagonal entries are half the mixed coefficients).
class ConicPencil {
public:
    explicit ConicPencil(std::array<std::array<MultiPoly, 3>, 3> m);

    /// Builds the matrix from the quadratic form x^T M x (homogeneous of
    /// degree 2 in x1,x2,x3 and of degree 2 in l1,l2).
    static ConicPencil from_form(const MultiPoly& q);

    const MultiPoly& entry(int i, int j) const { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const RegistryPtr& registry() const { return m_[0][0].registry(); }

    /// The associated bidegree-(2,2) form Q_lambda(x).
    MultiPoly form() const;

private:
    std::array<std::array<MultiPoly, 3>, 3> m_;
};

/// Everything the Weierstrass-parameter construction produces.  All
/// fields live over the working registry; with concrete parameters the
/// values of mu, w2, w3 are substituted throughout.
///
/// Sign convention: the base-point combination c is l1*w3 - l2*w2.  With
/// this choice the determinant of the pencil, its square factor p, and
/// the tangent line X1 come out with the classical displayed
/// coefficients (e.g. X1's x2 coefficient 8 w2 mu^2); the variant with
/// +l2*w2 is the same family reparametrized by (l2, x2) -> (-l2, -x2).
struct WeierstrassPencilData {
    ConicPencil pencil;
    MultiPoly F_lambda;  // l1 q_eta - mu x1 B, linear in lambda, quadratic in x
    MultiPoly B;         // l2 x2 + c x1
    MultiPoly c;         // l1 w3 - l2 w2
    MultiPoly d;         // l2^2 mu^2
    MultiPoly dg1;       // d*g1 = mu^2 c^2 - d (1+mu)   (kept polynomial)
    MultiPoly dg2;       // d*g2 = 2 l2 mu^2 c
    MultiPoly g3;        // mu
    MultiPoly l;         // dg1 x1 + dg2 x2 + mu d x3
    MultiPoly p;         // square factor of the determinant: det = -(mu^2/4) p^2
    MultiPoly X1;        // exact quotient Disc_lambda(Q)/C1 (display constants kept)
    MultiPoly q_eta;     // contact conic
    WeierstrassCubic cubic;
};

struct WeierstrassPencilParams {
    std::optional<Rational> mu;   // nullopt = symbolic
    std::optional<Rational> w2;
    std::optional<Rational> w3;
    bool allow_nodal = false;     // admits mu = 1
};

/// Constructs the quadratic pencil everywhere tangent to the Weierstrass
/// cubic and to the line X1, for the pencil with base point (1, w2, w3)
/// in the translated plane.  The base point chart w1 = 1 is fixed; the
/// w1 = 0 chart is unsupported.
WeierstrassPencilData build_weierstrass_pencil(const WeierstrassPencilParams& params);

/// The generic pencil tangent to the line x1 = 0 at the moving point:
/// Q_lambda = (l2 x2 - l1 x3)^2 + 2 x1 (l1^2 M2 + l2^2 M3 + l1 l2 M1),
/// for linear forms M1, M2, M3 in x (coefficients may be parameters).
ConicPencil build_line_pencil(const MultiPoly& M1, const MultiPoly& M2, const MultiPoly& M3);

/// The everywhere-tangent cubic of that family:
/// 2 M2 x2^2 + 2 M3 x3^2 + 4 x1 M2 M3 + 2 x2 x3 M1 - x1 M1^2.
MultiPoly envelope_cubic(const MultiPoly& M1, const MultiPoly& M2, const MultiPoly& M3);

/// Coefficients of the three-point specialization: M2 = M23 x3 + M21 x1,
/// M3 = M32 x2 + M31 x1, M1 = M13 x3 + M12 x2 + M11 x1, subject to
/// M32 + M23 + M12 + M13 = 0.  nullopt leaves a coefficient symbolic.
struct ThreePointCoeffs {
    std::optional<Rational> M23, M21, M32, M31, M13, M12, M11;
};

/// Registry used by the symbolic three-point pencil:
/// x1,x2,x3,l1,l2,M23,M21,M32,M31,M13,M12,M11.
RegistryPtr three_point_registry();

/// The pencil whose degenerate members sit exactly over the three points
/// (0,0,1), (0,1,0), (0,1,1) of the line x1 = 0.  Checks the linear
/// constraint and the named rank/nondegeneracy conditions (a condition
/// that fails identically is a DomainError naming it).
ConicPencil build_three_point_pencil(const ThreePointCoeffs& coeffs);

} // namespace conica

#endif
