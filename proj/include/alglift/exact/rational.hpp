#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "alglift/error.hpp"

namespace alglift {

// GMP values are kept canonical: mpq_class arithmetic always reduces and
// keeps the denominator positive.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Parses "p" or "p/q" (optional leading sign). Rejects q = 0.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorCode::ParseError, "bad rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits_ok = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num, 10), d(den, 10);
  if (is_zero(d)) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace alglift
