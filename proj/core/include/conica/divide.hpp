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

#ifndef CONICA_DIVIDE_HPP
#define CONICA_DIVIDE_HPP

#include <optional>

#include "conica/multipoly.hpp"

namespace conica {

/// f is not an exact multiple of g; carries the nonzero remainder left
/// by leading-term division.
class DivisionError : public Error {
public:
    DivisionError(const std::string& what, MultiPoly rem)
        : Error(what), remainder(std::move(rem)) {}
    MultiPoly remainder;
};

/// f is not a perfect square; carries the first term that could not be
/// matched.
class NotASquareError : public Error {
public:
    NotASquareError(const std::string& what, MultiPoly term)
        : Error(what), mismatch(std::move(term)) {}
    MultiPoly mismatch;
};

/// Exact quotient q with f = q*g, by repeated cancellation of the
/// leading term in canonical order; exactness is certified by
/// re-multiplication.  Throws DivisionError (with remainder) when f is
/// not divisible by g, DomainError when g = 0.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);

/// exact_divide without the exception: nullopt when not divisible.
std::optional<MultiPoly> try_exact_divide(const MultiPoly& f, const MultiPoly& g);

inline bool divides(const MultiPoly& g, const MultiPoly& f) {
    return static_cast<bool>(try_exact_divide(f, g));
}

/// A gcd of f and g, normalized to content 1 and positive leading
/// numerator; computed by subresultant polynomial remainder sequences on
/// a main variable with recursive content gcd.  gcd(0,0) is a
/// DomainError.
MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);

/// g with g^2 = f, sign fixed so the leading coefficient (canonical
/// order) has positive numerator; certified by squaring.  Throws
/// NotASquareError when f is not a perfect square, DomainError on f = 0.
MultiPoly poly_square_root(const MultiPoly& f);

/// Content of f with respect to one variable: the gcd of the
/// coefficients of the powers of v (a polynomial free of v).
MultiPoly content_in(const MultiPoly& f, const std::string& v);

} // namespace conica

#endif
