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

#ifndef CONICA_SERIES_HPP
#define CONICA_SERIES_HPP

#include <string>
#include <vector>

#include "conica/rational.hpp"

namespace conica {

/// Truncated power series in one local parameter with Rational
/// coefficients; all arithmetic discards terms above the truncation
/// order (inclusive).
class RationalSeries {
public:
    explicit RationalSeries(int order);
    static RationalSeries constant(int order, const Rational& c);
    static RationalSeries parameter(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coefficient(int k) const;
    void set_coefficient(int k, const Rational& v);

    bool is_zero() const;
    /// Smallest k with a nonzero coefficient, or -1 when zero through the
    /// truncation order.
    int valuation() const;

    RationalSeries operator-() const;
    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
    RationalSeries scaled(const Rational& c) const;
    RationalSeries pow(unsigned e) const;

    friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
        return a.c_ == b.c_;
    }

    /// "1/2*t^2 + 3/8*t^4 + O(t^6)" style rendering, for diagnostics.
    std::string str(const std::string& param = "t") const;

private:
    std::vector<Rational> c_;  // index = exponent, size = order + 1
};

} // namespace conica

#endif
