#pragma once

/// @file numeric.hpp
/// Exact integer and rational scalars plus parsing/formatting helpers.
///
/// All arithmetic in the library is exact: Int is an arbitrary-precision
/// integer and Rat an arbitrary-precision rational kept in lowest terms.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qpencil {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when an argument violates a documented precondition.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

/// Parses a decimal integer string (optional leading '-').
Int parse_int(const std::string& s);

/// Parses "p", "-p", or "p/q" into a canonicalized rational.
Rat parse_rat(const std::string& s);

/// num/den reduced to lowest terms with positive denominator (den != 0).
/// Always build rationals from separate numerator/denominator through this:
/// the raw two-argument Rat constructor does not canonicalize.
Rat make_rat(const Int& num, const Int& den);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Exact conversion; throws if r has a nontrivial denominator.
Int to_int(const Rat& r);

inline int sign(const Int& v) { return sgn(v); }
inline int sign(const Rat& v) { return sgn(v); }

/// True iff v is a perfect square (v >= 0 and sqrt exact).
bool is_square(const Int& v);

/// True iff r is the square of a rational.
bool is_square(const Rat& r);

/// Exact integer square root of a perfect square; throws otherwise.
Int sqrt_exact(const Int& v);

/// Exact rational square root of a rational square; throws otherwise.
Rat sqrt_exact(const Rat& r);

/// v^e for small non-negative exponents.
Int pow_int(const Int& v, unsigned long e);
Rat pow_rat(const Rat& v, long e);

/// Largest e with p^e | v (v != 0), also returning v / p^e.
struct Valuation {
  unsigned long v;
  Int unit;
};
Valuation valuation(const Int& value, const Int& p);

}  // namespace qpencil
