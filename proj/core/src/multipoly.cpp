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

#include "conica/multipoly.hpp"

#include <cstdlib>
#include <numeric>

namespace conica {

MultiPoly::MultiPoly(RegistryPtr reg) : reg_(std::move(reg)) {
    if (!reg_) throw DomainError("MultiPoly: null registry");
}

MultiPoly MultiPoly::constant(RegistryPtr reg, const Rational& c) {
    MultiPoly p(std::move(reg));
    if (!c.is_zero()) p.terms_.emplace(Exponents(p.reg_->size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(RegistryPtr reg, const std::string& name) {
    MultiPoly p(std::move(reg));
    Exponents e(p.reg_->size(), 0);
    e[p.reg_->index(name)] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(RegistryPtr reg, const Exponents& e, const Rational& c) {
    MultiPoly p(std::move(reg));
    p.check_exponents(e);
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](int e) { return e == 0; }));
}

Rational MultiPoly::constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) throw DomainError("MultiPoly: not a constant: " + str());
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (is_zero()) return -1;
    const Exponents& e = terms_.begin()->first;  // leading term has max degree
    return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree_in(const std::string& var) const {
    std::size_t i = reg_->index(var);
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

bool MultiPoly::depends_on(const std::string& var) const {
    std::size_t i = reg_->index(var);
    for (const auto& [e, c] : terms_)
        if (e[i] > 0) return true;
    return false;
}

const Exponents& MultiPoly::leading_exponents() const {
    if (is_zero()) throw DomainError("MultiPoly: leading term of zero");
    return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
    if (is_zero()) throw DomainError("MultiPoly: leading term of zero");
    return terms_.begin()->second;
}

void MultiPoly::check_same_registry(const MultiPoly& o) const {
    if (!same_registry(reg_, o.reg_))
        throw RegistryMismatchError("MultiPoly: operands use different registries");
}

void MultiPoly::check_exponents(const Exponents& e) const {
    if (e.size() != reg_->size())
        throw DomainError("MultiPoly: exponent vector length mismatch");
    for (int x : e)
        if (x < 0) throw DomainError("MultiPoly: negative exponent");
}

std::size_t MultiPoly::term_limit() {
    static const std::size_t limit = [] {
        if (const char* s = std::getenv("CONICA_MAX_TERMS")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(s, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(4'000'000);
    }();
    return limit;
}

void MultiPoly::guard_size() const {
    if (terms_.size() > term_limit())
        throw ResourceLimitError("MultiPoly: term count exceeds CONICA_MAX_TERMS");
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    check_exponents(e);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    guard_size();
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(reg_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_registry(o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    guard_size();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_registry(o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    guard_size();
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_registry(b);
    MultiPoly r(a.reg_);
    if (a.is_zero() || b.is_zero()) return r;
    const std::size_t n = a.reg_->size();
    Exponents e(n, 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            Rational c = ca * cb;
            auto [it, inserted] = r.terms_.emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        r.guard_size();
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(reg_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) throw DomainError("MultiPoly: negative exponent in pow");
    MultiPoly acc = constant(reg_, 1);
    MultiPoly base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        if (k >>= 1u) base = base * base;
    }
    return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!same_registry(a.reg_, b.reg_)) return false;
    return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    std::size_t i = reg_->index(var);
    MultiPoly r(reg_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        r.add_term(d, c * Rational(e[i]));
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
    // Validate and embed the bound values first.
    std::vector<std::optional<MultiPoly>> bound(reg_->size());
    for (const auto& [name, val] : bindings) {
        std::size_t i = reg_->index(name);
        bound[i] = same_registry(val.registry(), reg_) ? val : val.embed(reg_);
    }

    // Power cache per bound variable.
    std::vector<std::vector<MultiPoly>> powers(reg_->size());
    auto power_of = [&](std::size_t i, int k) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(reg_, 1));
        while (static_cast<int>(cache.size()) <= k)
            cache.push_back(cache.back() * *bound[i]);
        return cache[static_cast<std::size_t>(k)];
    };

    MultiPoly result(reg_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        MultiPoly piece = constant(reg_, c);
        for (std::size_t i = 0; i < reg_->size(); ++i) {
            if (bound[i] && e[i] > 0) {
                rest[i] = 0;
                piece = piece * power_of(i, e[i]);
            }
        }
        result += piece * monomial(reg_, rest, Rational(1));
    }
    return result;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, Rational>& bindings) const {
    std::map<std::string, MultiPoly> polys;
    for (const auto& [name, val] : bindings)
        polys.emplace(name, constant(reg_, val));
    return substitute(polys);
}

MultiPoly MultiPoly::coefficient_of(const std::string& var, int k) const {
    std::size_t i = reg_->index(var);
    MultiPoly r(reg_);
    for (const auto& [e, c] : terms_) {
        if (e[i] != k) continue;
        Exponents d = e;
        d[i] = 0;
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
    int d = std::max(0, degree_in(var));
    std::vector<MultiPoly> out;
    out.reserve(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) out.push_back(coefficient_of(var, k));
    return out;
}

MultiPoly MultiPoly::embed(RegistryPtr target) const {
    if (same_registry(reg_, target)) {
        MultiPoly r(target);
        r.terms_ = terms_;
        return r;
    }
    // Per-variable index map; a variable only needs to exist in the
    // target if it is actually used.
    std::vector<long> to(reg_->size(), -1);
    for (std::size_t i = 0; i < reg_->size(); ++i)
        if (target->contains(reg_->name(i)))
            to[i] = static_cast<long>(target->index(reg_->name(i)));
    MultiPoly r(target);
    for (const auto& [e, c] : terms_) {
        Exponents d(target->size(), 0);
        for (std::size_t i = 0; i < reg_->size(); ++i) {
            if (e[i] == 0) continue;
            if (to[i] < 0)
                throw DomainError("MultiPoly: cannot embed, target registry lacks '" +
                                  reg_->name(i) + "'");
            d[static_cast<std::size_t>(to[i])] = e[i];
        }
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

bool MultiPoly::is_homogeneous(int* degree_out) const {
    if (is_zero()) {
        if (degree_out) *degree_out = -1;
        return true;
    }
    int d = total_degree();
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    if (degree_out) *degree_out = d;
    return true;
}

bool MultiPoly::is_homogeneous_in(const std::vector<std::string>& vars, int* degree_out) const {
    std::vector<std::size_t> idx;
    idx.reserve(vars.size());
    for (const auto& v : vars) idx.push_back(reg_->index(v));
    if (is_zero()) {
        if (degree_out) *degree_out = -1;
        return true;
    }
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (std::size_t i : idx) d += e[i];
        if (!deg)
            deg = d;
        else if (*deg != d)
            return false;
    }
    if (degree_out) *degree_out = *deg;
    return true;
}

bool MultiPoly::is_weighted_homogeneous(const std::vector<int>& weights, int* degree_out) const {
    if (weights.size() != reg_->size())
        throw DomainError("MultiPoly: weight vector length mismatch");
    if (is_zero()) {
        if (degree_out) *degree_out = -1;
        return true;
    }
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) d += e[i] * weights[i];
        if (!deg)
            deg = d;
        else if (*deg != d)
            return false;
    }
    if (degree_out) *degree_out = *deg;
    return true;
}

Rational MultiPoly::content() const {
    Rational g(0);
    for (const auto& [e, c] : terms_) {
        g = rational_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

MultiPoly MultiPoly::primitive_part() const {
    if (is_zero()) return *this;
    Rational c = content();
    if (leading_coefficient().sign() < 0) c = -c;
    return scaled(c.inverse());
}

} // namespace conica
