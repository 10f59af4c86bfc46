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

#include "conica/rational.hpp"

namespace conica {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ParseError("Rational: empty string");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw ParseError("Rational: cannot parse '" + s + "'");
    if (v.get_den() == 0) throw ParseError("Rational: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::pow(unsigned e) const {
    Rational base = *this, acc = 1;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

bool Rational::is_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(v_.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(v_.get_den().get_mpz_t());
}

Rational Rational::sqrt() const {
    if (!is_square())
        throw DomainError("Rational: " + str() + " is not the square of a rational");
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), v_.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class gn, ld;
    mpz_gcd(gn.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(ld.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return Rational(mpq_class(gn, ld));
}

} // namespace conica
