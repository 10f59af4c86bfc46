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

#include "conica/series.hpp"

#include "conica/errors.hpp"

namespace conica {

RationalSeries::RationalSeries(int order) {
    if (order < 0) throw DomainError("RationalSeries: negative order");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

RationalSeries RationalSeries::constant(int order, const Rational& c) {
    RationalSeries s(order);
    s.c_[0] = c;
    return s;
}

RationalSeries RationalSeries::parameter(int order) {
    if (order < 1) throw DomainError("RationalSeries: order too small for the parameter");
    RationalSeries s(order);
    s.c_[1] = Rational(1);
    return s;
}

const Rational& RationalSeries::coefficient(int k) const {
    if (k < 0 || k > order()) throw DomainError("RationalSeries: coefficient index out of range");
    return c_[static_cast<std::size_t>(k)];
}

void RationalSeries::set_coefficient(int k, const Rational& v) {
    if (k < 0 || k > order()) throw DomainError("RationalSeries: coefficient index out of range");
    c_[static_cast<std::size_t>(k)] = v;
}

bool RationalSeries::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

int RationalSeries::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

RationalSeries RationalSeries::operator-() const {
    RationalSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

namespace {
int common_order(const RationalSeries& a, const RationalSeries& b) {
    if (a.order() != b.order())
        throw DomainError("RationalSeries: mixed truncation orders");
    return a.order();
}
} // namespace

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries r(common_order(a, b));
    for (int k = 0; k <= r.order(); ++k)
        r.set_coefficient(k, a.coefficient(k) + b.coefficient(k));
    return r;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries r(common_order(a, b));
    for (int k = 0; k <= r.order(); ++k)
        r.set_coefficient(k, a.coefficient(k) - b.coefficient(k));
    return r;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries r(common_order(a, b));
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coefficient(i).is_zero()) continue;
        for (int j = 0; i + j <= r.order(); ++j) {
            if (b.coefficient(j).is_zero()) continue;
            r.set_coefficient(i + j,
                              r.coefficient(i + j) + a.coefficient(i) * b.coefficient(j));
        }
    }
    return r;
}

RationalSeries RationalSeries::scaled(const Rational& c) const {
    RationalSeries r = *this;
    for (auto& v : r.c_) v *= c;
    return r;
}

RationalSeries RationalSeries::pow(unsigned e) const {
    RationalSeries acc = constant(order(), Rational(1));
    RationalSeries base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

std::string RationalSeries::str(const std::string& param) const {
    std::string out;
    for (int k = 0; k <= order(); ++k) {
        if (c_[static_cast<std::size_t>(k)].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += c_[static_cast<std::size_t>(k)].str();
        if (k >= 1) out += "*" + param + (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (out.empty()) out = "0";
    out += " + O(" + param + "^" + std::to_string(order() + 1) + ")";
    return out;
}

} // namespace conica
