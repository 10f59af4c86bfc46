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

#ifndef CONICA_REGISTRY_HPP
#define CONICA_REGISTRY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "conica/errors.hpp"

namespace conica {

class VarRegistry;
using RegistryPtr = std::shared_ptr<const VarRegistry>;

/// Ordered list of distinct variable names.  The order is fixed at
/// creation and determines the canonical (graded lexicographic) term
/// order of every polynomial built over the registry.
class VarRegistry {
public:
    explicit VarRegistry(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw DomainError("VarRegistry: empty variable name");
            if (!index_.emplace(names_[i], i).second)
                throw DomainError("VarRegistry: duplicate variable '" + names_[i] + "'");
        }
    }

    static RegistryPtr make(std::vector<std::string> names) {
        return std::make_shared<const VarRegistry>(std::move(names));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    std::size_t index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw DomainError("VarRegistry: unknown variable '" + name + "'");
        return it->second;
    }

    friend bool operator==(const VarRegistry& a, const VarRegistry& b) {
        return a.names_ == b.names_;
    }
    friend bool operator!=(const VarRegistry& a, const VarRegistry& b) { return !(a == b); }

    /// a's names followed by b's names not already present.
    static RegistryPtr merged(const VarRegistry& a, const VarRegistry& b) {
        std::vector<std::string> names = a.names();
        for (const auto& n : b.names())
            if (!a.contains(n)) names.push_back(n);
        return make(std::move(names));
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

inline bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace conica

#endif
