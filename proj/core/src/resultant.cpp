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

#include "conica/resultant.hpp"

#include "conica/divide.hpp"

namespace conica {

MultiPoly matrix_determinant(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw DomainError("matrix_determinant: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("matrix_determinant: not square");
    const RegistryPtr reg = m[0][0].registry();

    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (n == 3) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    // Bareiss fraction-free elimination.
    std::vector<std::vector<MultiPoly>> a = m;
    MultiPoly prev = MultiPoly::constant(reg, 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return MultiPoly::zero(reg);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            }
            a[i][k] = MultiPoly::zero(reg);
        }
        prev = a[k][k];
    }
    MultiPoly det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& v) {
    if (!same_registry(f.registry(), g.registry()))
        throw RegistryMismatchError("resultant: operands use different registries");
    const int m = f.degree_in(v);
    const int n = g.degree_in(v);
    if (m < 1) throw DomainError("resultant: first argument constant in " + v);
    if (n < 1) throw DomainError("resultant: second argument constant in " + v);

    const RegistryPtr reg = f.registry();
    const auto fc = f.coefficients_in(v);  // index = power of v
    const auto gc = g.coefficients_in(v);
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size, MultiPoly::zero(reg)));
    // n rows of f coefficients (descending), then m rows of g.
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
                fc[static_cast<std::size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] =
                gc[static_cast<std::size_t>(n - k)];
    return matrix_determinant(s);
}

MultiPoly discriminant_in(const MultiPoly& f, const std::string& v) {
    const int d = f.degree_in(v);
    if (d < 2) throw DomainError("discriminant_in: degree in " + v + " is below 2");
    if (d == 2) {
        MultiPoly A = f.coefficient_of(v, 2);
        MultiPoly B = f.coefficient_of(v, 1);
        MultiPoly C = f.coefficient_of(v, 0);
        return B * B - Rational(4) * (A * C);
    }
    return resultant(f, f.derivative(v), v);
}

} // namespace conica
