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

#include "conica/symmetric.hpp"

namespace conica {

MultiPoly elementary_symmetric(const RegistryPtr& reg, const std::vector<std::string>& vars,
                               std::size_t i) {
    const std::size_t k = vars.size();
    if (i < 1 || i > k) throw DomainError("elementary_symmetric: index out of range");
    std::vector<std::size_t> idx;
    idx.reserve(k);
    for (const auto& v : vars) idx.push_back(reg->index(v));

    MultiPoly sum(reg);
    std::vector<std::size_t> pick(i);
    // Enumerate i-subsets of {0..k-1}.
    for (std::size_t j = 0; j < i; ++j) pick[j] = j;
    while (true) {
        Exponents e(reg->size(), 0);
        for (std::size_t j : pick) e[idx[j]] = 1;
        sum.add_term(e, Rational(1));
        // next subset
        std::size_t j = i;
        while (j > 0) {
            --j;
            if (pick[j] != j + k - i) {
                ++pick[j];
                for (std::size_t l = j + 1; l < i; ++l) pick[l] = pick[l - 1] + 1;
                j = i + 1;
                break;
            }
        }
        if (j != i + 1) break;
    }
    return sum;
}

MultiPoly symmetric_reduce(const MultiPoly& f, const std::vector<std::string>& root_vars,
                           const std::vector<std::string>& sym_vars) {
    const std::size_t k = root_vars.size();
    if (k == 0 || sym_vars.size() != k)
        throw DomainError("symmetric_reduce: need matching root/symmetric variable lists");
    const RegistryPtr reg = f.registry();

    std::vector<std::size_t> idx;
    idx.reserve(k);
    for (const auto& v : root_vars) idx.push_back(reg->index(v));
    // f must involve only the root variables.
    for (std::size_t i = 0; i < reg->size(); ++i) {
        if (std::find(idx.begin(), idx.end(), i) != idx.end()) continue;
        if (f.depends_on(reg->name(i)))
            throw DomainError("symmetric_reduce: input involves extraneous variable '" +
                              reg->name(i) + "'");
    }

    std::vector<MultiPoly> elem;
    elem.reserve(k);
    for (std::size_t i = 1; i <= k; ++i)
        elem.push_back(elementary_symmetric(reg, root_vars, i));

    const RegistryPtr ereg = VarRegistry::make(sym_vars);
    MultiPoly out(ereg);
    MultiPoly rest = f;
    while (!rest.is_zero()) {
        const Exponents& le = rest.leading_exponents();
        const Rational lc = rest.leading_coefficient();
        // Exponents on the root variables, in the given order.
        std::vector<int> a(k);
        for (std::size_t j = 0; j < k; ++j) a[j] = le[idx[j]];
        for (std::size_t j = 0; j + 1 < k; ++j) {
            if (a[j] < a[j + 1])
                throw NotSymmetricError(
                    "symmetric_reduce: input is not symmetric (leading term " +
                        MultiPoly::monomial(reg, le, lc).str() + ")",
                    MultiPoly::monomial(reg, le, lc));
        }
        // e1^(a1-a2) e2^(a2-a3) ... ek^(ak) matches the leading term.
        Exponents eexp(k, 0);
        MultiPoly piece = MultiPoly::constant(reg, lc);
        for (std::size_t j = 0; j < k; ++j) {
            int b = (j + 1 < k) ? a[j] - a[j + 1] : a[j];
            eexp[j] = b;
            if (b > 0) piece = piece * elem[j].pow(b);
        }
        rest -= piece;
        out.add_term(eexp, lc);
    }
    return out;
}

} // namespace conica
