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

#ifndef CONICA_MULTIPOLY_HPP
#define CONICA_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conica/rational.hpp"
#include "conica/registry.hpp"

namespace conica {

/// Exponent vector; length always equals the registry size.
using Exponents = std::vector<int>;

/// Graded lexicographic order, descending: higher total degree first,
/// ties broken lexicographically in registry order (larger exponent on
/// an earlier variable wins).  map iteration therefore starts at the
/// leading term.
struct GrlexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

/// Sparse multivariate polynomial over Rational with a fixed variable
/// registry.  Invariants: no stored term has coefficient zero; terms are
/// kept in canonical (graded lex descending) order; two polynomials over
/// equal registries are equal iff their term maps are equal.  Values are
/// immutable in spirit: every operation returns a fresh polynomial.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexDesc>;

    explicit MultiPoly(RegistryPtr reg);

    static MultiPoly zero(RegistryPtr reg) { return MultiPoly(std::move(reg)); }
    static MultiPoly constant(RegistryPtr reg, const Rational& c);
    static MultiPoly variable(RegistryPtr reg, const std::string& name);
    static MultiPoly monomial(RegistryPtr reg, const Exponents& e, const Rational& c);

    const RegistryPtr& registry() const { return reg_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The value of a constant polynomial (0 for the zero polynomial).
    Rational constant_value() const;

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(const std::string& var) const;
    bool depends_on(const std::string& var) const;

    const Exponents& leading_exponents() const;
    const Rational& leading_coefficient() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Rational& c) const;
    friend MultiPoly operator*(const Rational& c, const MultiPoly& f) { return f.scaled(c); }
    friend MultiPoly operator*(const MultiPoly& f, const Rational& c) { return f.scaled(c); }

    /// f^e for e >= 0; negative exponents are a DomainError.
    MultiPoly pow(long e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Formal partial derivative with respect to a registry variable.
    MultiPoly derivative(const std::string& var) const;

    /// Exact simultaneous substitution; every bound variable must be in
    /// the registry, and every substituted polynomial is embedded into it.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;
    MultiPoly substitute(const std::map<std::string, Rational>& bindings) const;

    /// Coefficient of var^k, as a polynomial over the same registry with
    /// the var-exponent removed.
    MultiPoly coefficient_of(const std::string& var, int k) const;
    /// All coefficients of powers of var (index = exponent), up to degree_in(var).
    std::vector<MultiPoly> coefficients_in(const std::string& var) const;

    /// Reindexes onto a target registry containing (by name) every
    /// variable this polynomial actually uses.
    MultiPoly embed(RegistryPtr target) const;

    bool is_homogeneous(int* degree_out = nullptr) const;
    /// Homogeneity in a subset of the variables only.
    bool is_homogeneous_in(const std::vector<std::string>& vars, int* degree_out = nullptr) const;
    bool is_weighted_homogeneous(const std::vector<int>& weights, int* degree_out = nullptr) const;

    /// Positive rational c such that f/c has coprime integer
    /// coefficients; 0 for the zero polynomial.
    Rational content() const;
    /// f divided by +-content, sign chosen so the leading coefficient is
    /// positive.  Zero stays zero.
    MultiPoly primitive_part() const;

    /// Canonical text form ("x1^2 - 2/3*x1 x2 + x2^2"); see grammar in
    /// the project README.  parse() accepts everything str() emits.
    std::string str() const;
    static MultiPoly parse(RegistryPtr reg, const std::string& text);

    /// Accumulates a term (used by builders); removes the entry when the
    /// coefficient cancels to zero.
    void add_term(const Exponents& e, const Rational& c);

    /// Term-count resource guard, read once from CONICA_MAX_TERMS.
    static std::size_t term_limit();

private:
    void check_same_registry(const MultiPoly& o) const;
    void check_exponents(const Exponents& e) const;
    void guard_size() const;

    RegistryPtr reg_;
    TermMap terms_;
};

} // namespace conica

#endif
