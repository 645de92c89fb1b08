#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "starq/error.hpp"

namespace starq {

// Immutable ordered list of variable names. Polynomials hold a shared pointer
// to one of these; operations require both operands to agree (same pointer or
// same name list).
class VarContext {
  public:
    explicit VarContext(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw error("duplicate variable name: " + names_[i]);
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    // -1 if absent
    int index_of(const std::string& v) const {
        auto it = std::find(names_.begin(), names_.end(), v);
        return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
    }

    bool operator==(const VarContext& o) const { return names_ == o.names_; }

  private:
    std::vector<std::string> names_;
};

using Ctx = std::shared_ptr<const VarContext>;

inline Ctx make_context(std::vector<std::string> names) {
    return std::make_shared<const VarContext>(std::move(names));
}

inline bool same_context(const Ctx& a, const Ctx& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

inline void require_same_context(const Ctx& a, const Ctx& b, const char* where) {
    if (!same_context(a, b)) throw context_error(std::string(where) + ": variable context mismatch");
}

} // namespace starq
