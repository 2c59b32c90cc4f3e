#pragma once

/// @file orbits.hpp
/// Construction of symmetric matrix pencils from ideal triples (I, alpha, s),
/// with validation of the triple laws, orientation handling, and constructive
/// equivalence witnesses for rescaled triples.

#include "qpencil/ideal.hpp"
#include "qpencil/pencil.hpp"

namespace qpencil {

/// An ideal triple: a fractional ideal I, an invertible algebra element
/// alpha, and a nonzero oriented scalar s, subject to the laws
///   I * I  is contained in  alpha * I(n-3),
///   |N(I)| = |s|  (the sign is carried by the choice of oriented basis),
///   N(alpha) = s^2 * f0^{n-3}.
struct OrbitTriple {
  FractionalIdeal I;
  AlgElement alpha;
  Rat s;
};

/// Validates the three triple laws, throwing a distinct domain_error for
/// each failure ("containment", "norm", "orientation"). Requires n >= 4.
void triple_validate(const EtaleAlgebra& L, const OrbitTriple& t);

/// Ordered basis of I (power coordinates, columns) whose oriented volume
/// against <1, zeta_1, ..., zeta_{n-1}> is exactly s: the canonical basis
/// with the first column negated when the sign requires it.
QMat oriented_ideal_basis(const EtaleAlgebra& L, const FractionalIdeal& I, const Rat& s);

/// Symmetric pair built from an explicit ordered basis b_1..b_n of a lattice
/// and an invertible alpha: A_ij and B_ij are the zeta_{n-1}- and
/// zeta_{n-2}-coordinates of b_i b_j / alpha in the mixed basis
/// {1, theta, ..., theta^{n-3}, zeta_{n-2}, zeta_{n-1}}. No triple laws are
/// checked here; callers that need them go through pencil_from_triple.
QPencil pencil_from_ideal_basis(const EtaleAlgebra& L, const AlgElement& alpha,
                                const QMat& basis_columns);

/// Validated construction: checks the triple laws, orients the canonical
/// basis of I by s, and forms the pencil. The invariant binary form of the
/// result is f, exactly.
QPencil pencil_from_triple(const EtaleAlgebra& L, const OrbitTriple& t);

/// The rescaled triple (c I, c^2 alpha, N(c) s); c must have nonzero norm.
OrbitTriple triple_scale(const EtaleAlgebra& L, const OrbitTriple& t, const AlgElement& c);

/// Constructive equivalence witness for a rescaling: an element (M, 1) of
/// the projective group with pencil_from_triple(t) = act(M, pencil_from_triple(
/// triple_scale(t, c))), i.e. A = M.g A' M.g^T, det M.g = 1. The witness is
/// verified internally before being returned.
QProjElem triple_equivalence_witness(const EtaleAlgebra& L, const OrbitTriple& t,
                                     const AlgElement& c);

}  // namespace qpencil
