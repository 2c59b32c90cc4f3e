#pragma once

/// @file factor_fp.hpp
/// Complete factorization over F_p (odd p): squarefree split, then
/// distinct-degree, then randomized equal-degree splitting. The random
/// stream is seeded and the factor list is sorted canonically, so output
/// is reproducible bit for bit.

#include <cstdint>
#include <vector>

#include "qpencil/poly.hpp"

namespace qpencil {

inline constexpr std::uint64_t kDefaultFactorSeed = 0x51ab70cafe;

struct FpFactor {
  FpPoly factor;     ///< monic irreducible
  int multiplicity = 1;
};

struct FpFactorization {
  FpElem unit;                    ///< leading coefficient of the input
  std::vector<FpFactor> factors;  ///< sorted by (degree, coefficients)
};

/// Factors a nonzero polynomial over F_p. Throws if f is zero or if the
/// coefficient modulus is not an odd prime (enforced on construction).
FpFactorization factor_prime_field(const FpPoly& f,
                                   std::uint64_t seed = kDefaultFactorSeed);

/// Multiplies a factorization back together (for verification).
FpPoly factorization_product(const FpFactorization& fac);

/// True iff f is irreducible over F_p (f nonconstant).
bool fp_poly_irreducible(const FpPoly& f, std::uint64_t seed = kDefaultFactorSeed);

}  // namespace qpencil
