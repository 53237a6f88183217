#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alglift/error.hpp"

namespace alglift {

/*
 * Ordered list of formal irrational symbols. Index 0 is the reserved
 * constant symbol "1"; the remaining symbols are read as algebraically
 * independent transcendental reals.
 */
class SymbolBasis {
 public:
  SymbolBasis() : names_{"1"} {}

  explicit SymbolBasis(const std::vector<std::string>& symbols) : SymbolBasis() {
    for (const auto& s : symbols) add(s);
  }

  static bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    if (name.front() >= '0' && name.front() <= '9') return false;
    return std::none_of(name.begin(), name.end(), [](char c) {
      return c == '+' || c == '-' || c == '*' || c == '/' || c == ' ' || c == '\t' ||
             c == '\n' || c == '\r' || c == '"' || c == '(' || c == ')';
    });
  }

  /// Declares a new symbol and returns its index.
  std::size_t add(const std::string& name) {
    if (!valid_name(name))
      throw Error(ErrorCode::ParseError, "invalid symbol name '" + name + "'");
    if (find(name))
      throw Error(ErrorCode::ParseError, "duplicate symbol '" + name + "'");
    names_.push_back(name);
    return names_.size() - 1;
  }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::size_t size() const noexcept { return names_.size(); }

  /// Declared symbols without the constant "1".
  std::vector<std::string> symbols() const { return {names_.begin() + 1, names_.end()}; }

  friend bool operator==(const SymbolBasis&, const SymbolBasis&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace alglift
