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

#ifndef CONICA_SYMMETRIC_HPP
#define CONICA_SYMMETRIC_HPP

#include <string>
#include <vector>

#include "conica/multipoly.hpp"

namespace conica {

/// The input polynomial is not symmetric under permutations of the root
/// variables; carries the offending leading term.
class NotSymmetricError : public Error {
public:
    NotSymmetricError(const std::string& what, MultiPoly term)
        : Error(what), offending(std::move(term)) {}
    MultiPoly offending;
};

/// i-th elementary symmetric polynomial (1 <= i <= vars.size()) of the
/// named variables, over the given registry.
MultiPoly elementary_symmetric(const RegistryPtr& reg, const std::vector<std::string>& vars,
                               std::size_t i);

/// Rewrites a symmetric polynomial in root_vars as a polynomial in the
/// elementary symmetric polynomials, by Gauss's leading-term
/// elimination.  The result lives over a fresh registry named by
/// sym_vars (e1..ek by default).  f must involve only root_vars.
MultiPoly symmetric_reduce(const MultiPoly& f, const std::vector<std::string>& root_vars,
                           const std::vector<std::string>& sym_vars);

} // namespace conica

#endif
