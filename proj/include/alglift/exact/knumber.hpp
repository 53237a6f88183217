#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "alglift/error.hpp"
#include "alglift/exact/rational.hpp"
#include "alglift/exact/symbols.hpp"

namespace alglift {

/*
 * An element of K = Q + Q*s_1 + ... + Q*s_d, stored sparsely as
 * symbol index -> rational coefficient. Index 0 is the rational part.
 *
 * K is a Q-vector space, not a field: the product of two elements that both
 * involve symbols is rejected with SymbolProduct. Polynomial arithmetic for
 * such products lives in polynomial.hpp.
 */
class KNumber {
 public:
  using Coefficients = std::map<std::size_t, Rational>;

  KNumber() = default;
  KNumber(const Rational& q) { set(0, q); }     // NOLINT(google-explicit-constructor)
  KNumber(const Integer& z) { set(0, Rational(z)); }  // NOLINT(google-explicit-constructor)
  KNumber(long v) { set(0, Rational(v)); }       // NOLINT(google-explicit-constructor)

  static KNumber symbol(std::size_t index, const Rational& coeff = 1) {
    KNumber k;
    k.set(index, coeff);
    return k;
  }

  const Coefficients& coeffs() const noexcept { return coeffs_; }

  Rational coeff(std::size_t index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  void set(std::size_t index, const Rational& q) {
    if (alglift::is_zero(q))
      coeffs_.erase(index);
    else
      coeffs_[index] = q;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_rational() const noexcept {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
  }
  Rational rational_part() const { return coeff(0); }

  /// One past the largest symbol index used (0 for zero).
  std::size_t span() const noexcept { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first + 1; }

  KNumber& operator+=(const KNumber& o) {
    for (const auto& [i, q] : o.coeffs_) set(i, coeff(i) + q);
    return *this;
  }
  KNumber& operator-=(const KNumber& o) {
    for (const auto& [i, q] : o.coeffs_) set(i, coeff(i) - q);
    return *this;
  }
  KNumber& operator*=(const Rational& s) {
    if (alglift::is_zero(s)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [i, q] : coeffs_) q *= s;
    return *this;
  }
  KNumber& operator/=(const Rational& s) {
    if (alglift::is_zero(s)) throw std::domain_error("KNumber division by zero");
    for (auto& [i, q] : coeffs_) q /= s;
    return *this;
  }
  KNumber& operator*=(const KNumber& o) {
    if (o.is_rational()) return *this *= o.rational_part();
    if (is_rational()) {
      Rational s = rational_part();
      *this = o;
      return *this *= s;
    }
    throw Error(ErrorCode::SymbolProduct, "product of two irrational K-numbers");
  }

  friend KNumber operator+(KNumber a, const KNumber& b) { return a += b; }
  friend KNumber operator-(KNumber a, const KNumber& b) { return a -= b; }
  friend KNumber operator*(KNumber a, const KNumber& b) { return a *= b; }
  friend KNumber operator*(KNumber a, const Rational& s) { return a *= s; }
  friend KNumber operator*(const Rational& s, KNumber a) { return a *= s; }
  friend KNumber operator*(KNumber a, const Integer& s) { return a *= Rational(s); }
  friend KNumber operator*(const Integer& s, KNumber a) { return a *= Rational(s); }
  friend KNumber operator/(KNumber a, const Rational& s) { return a /= s; }
  friend KNumber operator-(KNumber a) { return a *= Rational(-1); }

  friend bool operator==(const KNumber& a, const KNumber& b) { return a.coeffs_ == b.coeffs_; }

 private:
  Coefficients coeffs_;
};

/// Formats as "a0 + a1*s1 - s2" in symbol order; "0" for zero.
inline std::string to_string(const KNumber& k, const SymbolBasis& basis) {
  if (k.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, q] : k.coeffs()) {
    if (i >= basis.size()) throw Error(ErrorCode::SymbolMismatch, "symbol index outside basis");
    std::string term;
    if (i == 0)
      term = to_string(q);
    else if (q == 1)
      term = basis.name(i);
    else if (q == -1)
      term = "-" + basis.name(i);
    else
      term = to_string(q) + "*" + basis.name(i);
    if (first)
      out = term;
    else if (term.front() == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
    first = false;
  }
  return out;
}

namespace detail {

class KNumberParser {
 public:
  KNumberParser(std::string_view text, const SymbolBasis& basis) : text_(text), basis_(basis) {}

  KNumber parse() {
    KNumber result;
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      Rational sign = 1;
      bool saw_sign = false;
      while (pos_ < text_.size() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') sign = -sign;
        ++pos_;
        saw_sign = true;
        skip_ws();
      }
      if (!first && !saw_sign) fail("expected '+' or '-'");
      result += parse_term() * sign;
      first = false;
    }
    return result;
  }

 private:
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " in K-number '" + std::string(text_) + "'");
  }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_char(char c) {
    return !(c == '+' || c == '-' || c == '*' || c == '/' ||
             std::isspace(static_cast<unsigned char>(c)));
  }

  bool at_number() const { return pos_ < text_.size() && is_digit(peek()); }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(peek())) ++pos_;
    if (pos_ < text_.size() && peek() == '/') {
      ++pos_;
      if (pos_ >= text_.size() || !is_digit(peek())) fail("bad denominator");
      while (pos_ < text_.size() && is_digit(peek())) ++pos_;
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  std::size_t ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(peek())) ++pos_;
    if (start == pos_) fail("expected symbol or number");
    std::string_view name = text_.substr(start, pos_ - start);
    auto idx = basis_.find(name);
    if (!idx || *idx == 0) fail("undeclared symbol '" + std::string(name) + "'");
    return *idx;
  }

  bool accept_star() {
    skip_ws();
    if (pos_ < text_.size() && peek() == '*') {
      ++pos_;
      skip_ws();
      return true;
    }
    return false;
  }

  KNumber parse_term() {
    if (pos_ >= text_.size()) fail("dangling sign");
    if (at_number()) {
      Rational q = number();
      std::size_t save = pos_;
      if (accept_star()) return KNumber::symbol(ident(), q);
      pos_ = save;
      return KNumber(q);
    }
    std::size_t idx = ident();
    std::size_t save = pos_;
    if (accept_star()) {
      if (!at_number()) fail("symbol products are not supported");
      return KNumber::symbol(idx, number());
    }
    pos_ = save;
    return KNumber::symbol(idx);
  }

  std::string_view text_;
  const SymbolBasis& basis_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline KNumber parse_knumber(std::string_view text, const SymbolBasis& basis) {
  return detail::KNumberParser(text, basis).parse();
}

}  // namespace alglift
