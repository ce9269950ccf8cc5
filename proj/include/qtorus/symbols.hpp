#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtorus/errors.hpp"

namespace qtorus {

// Handle into a SymbolTable. Id 0 is always the distinguished element q.
struct Symbol {
    int id = -1;
    bool operator==(const Symbol& o) const { return id == o.id; }
    bool operator!=(const Symbol& o) const { return id != o.id; }
    bool operator<(const Symbol& o) const { return id < o.id; }
};

// Append-only registry of session indeterminates. q is present from construction.
class SymbolTable {
public:
    SymbolTable() { intern("q"); }

    // Returns the existing symbol when the name is already registered.
    Symbol intern(const std::string& name) {
        if (name.empty()) throw ConfigError("symbol name must not be empty");
        auto it = ids_.find(name);
        if (it != ids_.end()) return Symbol{it->second};
        int id = static_cast<int>(names_.size());
        names_.push_back(name);
        ids_.emplace(name, id);
        return Symbol{id};
    }

    std::optional<Symbol> find(const std::string& name) const {
        auto it = ids_.find(name);
        if (it == ids_.end()) return std::nullopt;
        return Symbol{it->second};
    }

    const std::string& name(Symbol s) const {
        if (s.id < 0 || s.id >= static_cast<int>(names_.size()))
            throw ConfigError("symbol id out of range");
        return names_[static_cast<std::size_t>(s.id)];
    }

    Symbol q() const { return Symbol{0}; }
    int size() const { return static_cast<int>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> ids_;
};

} // namespace qtorus
