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

#include "conica/poly_io.hpp"

#include <cctype>
#include <sstream>

namespace conica {

namespace {

std::string monomial_str(const VarRegistry& reg, const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += ' ';
        s += reg.name(i);
        if (e[i] != 1) {
            s += '^';
            s += std::to_string(e[i]);
        }
    }
    return s;
}

// Term body without any sign: "1*" is elided only for the coefficient +1
// ("x1 + x2 - 1*x3" is canonical).
std::string term_str(const VarRegistry& reg, const Exponents& e, const Rational& abs_c,
                     bool coeff_is_one) {
    std::string mono = monomial_str(reg, e);
    if (mono.empty()) return abs_c.str();
    if (coeff_is_one) return mono;
    return abs_c.str() + "*" + mono;
}

} // namespace

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_str(*reg_, e, c.abs(), c.is_one());
    }
    return out;
}

namespace {

struct Lexer {
    std::string s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    // Does a name start here (without consuming)?
    bool at_name() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

    std::string read_name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) throw ParseError("polynomial: expected variable name at '" +
                                           s.substr(start) + "'");
        return s.substr(start, pos - start);
    }
    std::string read_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos)
            throw ParseError("polynomial: expected integer at '" + s.substr(start) + "'");
        return s.substr(start, pos - start);
    }
};

} // namespace

MultiPoly MultiPoly::parse(RegistryPtr reg, const std::string& text) {
    Lexer lx{text};
    MultiPoly result(reg);
    if (lx.done()) throw ParseError("polynomial: empty input");

    bool negative = false;
    if (lx.accept('-'))
        negative = true;
    else
        lx.accept('+');

    while (true) {
        // one term: [coefficient ['*']] [monomial]
        Rational coeff(1);
        bool have_coeff = false;
        if (lx.at_digit()) {
            std::string num = lx.read_integer();
            std::string den;
            if (lx.accept('/')) den = lx.read_integer();
            coeff = den.empty() ? Rational::parse(num) : Rational::parse(num + "/" + den);
            have_coeff = true;
            lx.accept('*');
        }

        Exponents e(reg->size(), 0);
        bool have_mono = false;
        while (lx.at_name()) {
            std::string name = lx.read_name();
            if (!reg->contains(name))
                throw ParseError("polynomial: unknown variable '" + name + "'");
            int exp = 1;
            if (lx.accept('^')) exp = std::stoi(lx.read_integer());
            e[reg->index(name)] += exp;
            have_mono = true;
        }
        if (!have_coeff && !have_mono)
            throw ParseError("polynomial: expected term at position " +
                             std::to_string(lx.pos) + " of '" + text + "'");

        result.add_term(e, negative ? -coeff : coeff);

        if (lx.done()) break;
        if (lx.accept('+'))
            negative = false;
        else if (lx.accept('-'))
            negative = true;
        else
            throw ParseError("polynomial: unexpected character '" + std::string(1, lx.peek()) +
                             "' in '" + text + "'");
    }
    return result;
}

nlohmann::ordered_json poly_to_json(const MultiPoly& f) {
    nlohmann::ordered_json j;
    j["vars"] = f.registry()->names();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : f.terms()) {
        nlohmann::ordered_json t;
        t["c"] = c.str();
        t["e"] = e;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly poly_from_json(const nlohmann::ordered_json& j) {
    if (!j.contains("vars") || !j.contains("terms"))
        throw ParseError("polynomial JSON: missing 'vars' or 'terms'");
    auto reg = VarRegistry::make(j.at("vars").get<std::vector<std::string>>());
    return poly_from_json(reg, j);
}

MultiPoly poly_from_json(RegistryPtr reg, const nlohmann::ordered_json& j) {
    if (j.at("vars").get<std::vector<std::string>>() != reg->names())
        throw ParseError("polynomial JSON: variable list does not match registry");
    MultiPoly f(reg);
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("e").get<Exponents>();
        f.add_term(e, Rational::parse(t.at("c").get<std::string>()));
    }
    return f;
}

} // namespace conica
