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

#include "conica/envelope.hpp"

#include "conica/divide.hpp"
#include "conica/resultant.hpp"

namespace conica {

MultiPoly pencil_determinant(const ConicPencil& p) {
    std::vector<std::vector<MultiPoly>> m(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(i)].push_back(p.entry(i, j));
    return matrix_determinant(m);
}

MultiPoly family_discriminant(const MultiPoly& F) {
    const auto& reg = F.registry();
    if (!reg->contains("l1") || !reg->contains("l2"))
        throw DomainError("family_discriminant: registry lacks the parameters l1, l2");
    int d = 0;
    if (!F.is_homogeneous_in({"l1", "l2"}, &d))
        throw DomainError("family_discriminant: family not homogeneous in (l1,l2)");
    if (d < 2) throw DomainError("family_discriminant: lambda-degree below 2");
    if (d == 2) {
        MultiPoly A = F.coefficient_of("l1", 2).coefficient_of("l2", 0);
        MultiPoly B = F.coefficient_of("l1", 1).coefficient_of("l2", 1);
        MultiPoly C = F.coefficient_of("l1", 0).coefficient_of("l2", 2);
        return B * B - Rational(4) * (A * C);
    }
    // Higher degree: raw resultant in the affine chart l1 = 1.
    MultiPoly Fa = F.substitute(std::map<std::string, Rational>{{"l1", Rational(1)}});
    return resultant(Fa, Fa.derivative("l2"), "l2");
}

MultiPoly certify_square(const ConicPencil& p, const MultiPoly& scale) {
    if (scale.is_zero()) throw DomainError("certify_square: zero scale");
    MultiPoly det = pencil_determinant(p);
    if (det.is_zero())
        throw DomainError("certify_square: identically degenerate pencil (det = 0)");
    MultiPoly ratio = exact_divide(det, scale.embed(det.registry()));
    MultiPoly q = poly_square_root(ratio);
    if (scale.embed(det.registry()) * q * q != det)
        throw Error("certify_square: re-expansion check failed");
    return q;
}

MultiPoly certify_square(const ConicPencil& p, const Rational& scale) {
    return certify_square(p, MultiPoly::constant(p.registry(), scale));
}

TangentLine extract_tangent_line(const ConicPencil& p, const MultiPoly& cubic) {
    MultiPoly disc = family_discriminant(p.form());
    MultiPoly line = exact_divide(disc, cubic.embed(disc.registry()));
    int d = 0;
    if (line.is_zero() || !line.is_homogeneous_in({"x1", "x2", "x3"}, &d) || d != 1)
        throw DomainError("extract_tangent_line: quotient is not a line: " + line.str());
    return TangentLine{line, line.primitive_part()};
}

} // namespace conica
