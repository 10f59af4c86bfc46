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

#ifndef CONICA_ERRORS_HPP
#define CONICA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conica {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on an operation was violated (bad degree, unknown
/// variable, excluded parameter value, malformed input, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Two polynomials with different variable registries were combined.
class RegistryMismatchError : public Error {
public:
    explicit RegistryMismatchError(const std::string& what) : Error(what) {}
};

/// Parse failure for the text polynomial grammar or the JSON form.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// The term-count resource guard (CONICA_MAX_TERMS) was exceeded.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

} // namespace conica

#endif
