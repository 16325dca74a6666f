#ifndef HOMBI_RATIONAL_HPP
#define HOMBI_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hombi {

/// Exact rational scalar over the ground field Q.
/// mpq_class keeps values in lowest terms with positive denominator, which is
/// exactly the invariant the rest of the library relies on.
using Rational = mpq_class;

inline int sign(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }
inline bool is_zero(const Rational& q) { return sign(q) == 0; }

/// Serializes as "p/q", or "p" when the denominator is 1. No floats, ever.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Strict parser for rational literals: optional leading '-', digits,
/// optionally followed by '/' and a nonzero denominator. Rejects anything
/// else (whitespace, floats, base prefixes).
Rational parse_rational(std::string_view text);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hombi

#endif
