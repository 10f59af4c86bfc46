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

#ifndef CONICA_RESULTANT_HPP
#define CONICA_RESULTANT_HPP

#include <vector>

#include "conica/multipoly.hpp"

namespace conica {

/// Exact determinant of a square matrix of polynomials over one
/// registry.  Cofactor expansion for n <= 3, fraction-free Bareiss
/// elimination above that (every division is exact).
MultiPoly matrix_determinant(const std::vector<std::vector<MultiPoly>>& m);

/// Determinant of the Sylvester matrix of f and g viewed as univariate
/// polynomials in v over the remaining variables.  Both inputs must have
/// positive degree in v.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& v);

/// Discriminant with respect to v.  For deg_v f = 2 with
/// f = A v^2 + B v + C this is exactly B^2 - 4AC; for higher degree the
/// raw Res_v(f, df/dv) is returned (no leading-coefficient
/// normalization; callers report the constant).
MultiPoly discriminant_in(const MultiPoly& f, const std::string& v);

} // namespace conica

#endif
