#pragma once

/// @file prime_field.hpp
/// Arithmetic in F_p for odd primes p, with the modulus carried per element.
///
/// Elements are canonical residues in [0, p). Mixing moduli in one operation
/// throws. p is limited to 63 bits so products fit in unsigned 128-bit.

#include <cstdint>
#include <vector>

#include "qpencil/numeric.hpp"

namespace qpencil {

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

struct FpElem {
  std::uint64_t v = 0;  ///< canonical residue in [0, p)
  std::uint64_t p = 0;  ///< odd prime modulus

  friend bool operator==(const FpElem&, const FpElem&) = default;
};

/// Builds a checked element; reduces value mod p. Throws unless p is an odd prime.
FpElem fp_make(std::uint64_t value, std::uint64_t p);

/// Reduces an arbitrary-precision integer mod p.
FpElem fp_reduce(const Int& value, std::uint64_t p);

FpElem fp_add(FpElem a, FpElem b);
FpElem fp_sub(FpElem a, FpElem b);
FpElem fp_neg(FpElem a);
FpElem fp_mul(FpElem a, FpElem b);
FpElem fp_inv(FpElem a);  ///< throws on zero
FpElem fp_div(FpElem a, FpElem b);
FpElem fp_pow(FpElem a, std::uint64_t e);

inline bool fp_is_zero(FpElem a) { return a.v == 0; }

/// Legendre symbol as {-1, 0, +1} via Euler's criterion.
int fp_legendre(FpElem a);

/// True iff a is a *nonzero* square in F_p.
inline bool fp_is_unit_square(FpElem a) { return fp_legendre(a) == 1; }

/// A square root of a (throws if a is a non-residue). Tonelli-Shanks.
FpElem fp_sqrt(FpElem a);

/// All elements of F_p in order 0..p-1 (intended for small p sweeps).
std::vector<FpElem> fp_all(std::uint64_t p);

}  // namespace qpencil
