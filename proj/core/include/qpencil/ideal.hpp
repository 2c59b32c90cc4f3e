#pragma once

/// @file ideal.hpp
/// Full-rank lattices (fractional ideals) inside the algebra attached to a
/// binary form, kept in a canonical normal form so that lattice equality is
/// structural equality.
///
/// Canonical form: a positive denominator `den` and an n x n column-style
/// HNF integer matrix `basis`, jointly gcd-reduced; the lattice is the
/// column span of basis divided by den in power-basis coordinates
/// {1, theta, ..., theta^{n-1}}. This pair is unique per lattice.

#include <vector>

#include "qpencil/etale.hpp"

namespace qpencil {

struct FractionalIdeal {
  QForm parent;  ///< form whose algebra the lattice lives in
  Int den;       ///< positive
  IntMat basis;  ///< n x n column-style HNF, full rank

  friend bool operator==(const FractionalIdeal&, const FractionalIdeal&) = default;
};

/// Lattice spanned by the given columns of power-basis coordinates (pure
/// module span; no ring multiples are added). Throws unless the columns
/// span a full-rank lattice.
FractionalIdeal ideal_from_columns(const EtaleAlgebra& L, const QMat& columns);

/// Ideal generated by the elements over the order R = <1, zeta_1, ...,
/// zeta_{n-1}>: the span of every product generator * order-basis element.
FractionalIdeal ideal_from_generators(const EtaleAlgebra& L,
                                      const std::vector<AlgElement>& gens);

/// The module I(k) spanned by {1, theta, ..., theta^k, zeta_{k+1}, ...,
/// zeta_{n-1}} for 0 <= k <= n-1. I(0) = R; I(n-1) is the power lattice.
FractionalIdeal ideal_If(const EtaleAlgebra& L, int k);

/// The unit ideal R = I(0).
FractionalIdeal ideal_one(const EtaleAlgebra& L);

/// Product lattice, spanned by the pairwise products of the two bases.
FractionalIdeal ideal_multiply(const EtaleAlgebra& L, const FractionalIdeal& a,
                               const FractionalIdeal& b);

/// The lattice c * I; c must not be zero or a zero divisor.
FractionalIdeal ideal_scale(const EtaleAlgebra& L, const AlgElement& c,
                            const FractionalIdeal& I);

/// Oriented norm of the canonical representative: det(basis) / (den^n *
/// f0^{n-1}). det(basis) is positive, so the sign is that of f0^{n-1}; the
/// absolute value is the generalized index [R : I].
Rat ideal_norm_oriented(const EtaleAlgebra& L, const FractionalIdeal& I);

/// Oriented norm of an explicitly ordered basis: det(T) where T writes the
/// given power-coordinate columns in the order basis <1, zeta_1, ...,
/// zeta_{n-1}>. Sensitive to column order and sign; throws if the columns
/// are not a basis.
Rat ideal_norm_oriented_basis(const EtaleAlgebra& L, const QMat& columns);

bool ideal_contains(const EtaleAlgebra& L, const FractionalIdeal& I, const AlgElement& x);

/// a is a sublattice of b.
bool ideal_subset(const EtaleAlgebra& L, const FractionalIdeal& a, const FractionalIdeal& b);

/// True iff the lattice is stable under multiplication by the order R
/// (equivalently, by every zeta_k).
bool is_fractional_ideal(const EtaleAlgebra& L, const FractionalIdeal& I);

/// Rational basis columns: basis / den.
QMat ideal_basis_q(const FractionalIdeal& I);

}  // namespace qpencil
