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

#ifndef CONICA_POLY_IO_HPP
#define CONICA_POLY_IO_HPP

#include <json.hpp>

#include "conica/multipoly.hpp"

namespace conica {

/// {"vars":[...], "terms":[{"c":"p/q","e":[ints]}, ...]} with terms in
/// canonical order; coefficients rendered "p" when integral.
nlohmann::ordered_json poly_to_json(const MultiPoly& f);

/// Rebuilds a polynomial from the JSON form, creating its registry from
/// the "vars" array.
MultiPoly poly_from_json(const nlohmann::ordered_json& j);

/// Same, but onto a caller-supplied registry (names must agree).
MultiPoly poly_from_json(RegistryPtr reg, const nlohmann::ordered_json& j);

} // namespace conica

#endif
