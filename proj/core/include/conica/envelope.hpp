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

#ifndef CONICA_ENVELOPE_HPP
#define CONICA_ENVELOPE_HPP

#include "conica/pencil.hpp"

namespace conica {

/// Determinant of the pencil matrix: a lambda-homogeneous form of degree
/// 6 (exactly 6 when nondegenerate), by exact cofactor expansion.
MultiPoly pencil_determinant(const ConicPencil& p);

/// Envelope discriminant of a 1-parameter family F(l1, l2; x),
/// homogeneous in lambda.  For lambda-degree 2, F = A l1^2 + B l1 l2 +
/// C l2^2 gives exactly B^2 - 4AC.  For higher degree the raw
/// Res_l2(F, dF/dl2) in the chart l1 = 1 is returned (no normalization
/// constant divided out).
MultiPoly family_discriminant(const MultiPoly& F);

/// q with pencil_determinant(p) = scale * q^2, sign fixed to a positive
/// leading coefficient; the factorization is re-expanded and checked.
/// Division or square-root failures propagate with their diagnostics; an
/// identically zero determinant is a DomainError (degenerate pencil of
/// double lines).
MultiPoly certify_square(const ConicPencil& p, const MultiPoly& scale);
MultiPoly certify_square(const ConicPencil& p, const Rational& scale);

struct TangentLine {
    MultiPoly line;        // the exact quotient Disc/cubic, constants kept
    MultiPoly normalized;  // coprime integer coefficients, positive leading
};

/// The line component of the envelope: the exact quotient of the
/// lambda-discriminant of the family by the given cubic.  Throws
/// DivisionError when the pencil is not everywhere tangent to the cubic,
/// DomainError when the quotient is not a line.
TangentLine extract_tangent_line(const ConicPencil& p, const MultiPoly& cubic);

} // namespace conica

#endif
