#pragma once

/// @file etale.hpp
/// The etale algebra L = Q[x]/(g) attached to a binary form f with
/// f_0 != 0 and disc(f) != 0, where g is the monic polynomial f(x,1)/f_0.
/// Provides the zeta basis
///   zeta_k = f_0 theta^k + f_1 theta^{k-1} + ... + f_{k-1} theta,
/// the order R_f with basis {1, zeta_1, ..., zeta_{n-1}}, multiplication
/// tables, norms/traces, and the trace-duality check for (1/f'(theta)) I(n-2).

#include <vector>

#include "qpencil/binary_form.hpp"
#include "qpencil/matrix.hpp"
#include "qpencil/numeric.hpp"
#include "qpencil/poly.hpp"

namespace qpencil {

struct EtaleAlgebra {
  QForm f;   ///< degree-n form, f0 != 0, disc != 0
  QPoly g;   ///< monic dehomogenization f(x,1)/f0, squarefree of degree n
  int n = 0;
};

/// Validates f (leading coefficient and discriminant nonzero) and builds L.
EtaleAlgebra etale_make(const QForm& f);

inline bool same_algebra(const EtaleAlgebra& a, const EtaleAlgebra& b) { return a.f == b.f; }

/// An element of L: its residue mod g, of degree < n.
struct AlgElement {
  QPoly residue;

  friend bool operator==(const AlgElement& x, const AlgElement& y) {
    return x.residue == y.residue;
  }
};

AlgElement alg_make(const EtaleAlgebra& L, QPoly p);
AlgElement alg_from_rat(const EtaleAlgebra& L, const Rat& c);
AlgElement alg_theta(const EtaleAlgebra& L);
AlgElement alg_one(const EtaleAlgebra& L);
bool alg_is_zero(const AlgElement& a);
AlgElement alg_add(const EtaleAlgebra& L, const AlgElement& a, const AlgElement& b);
AlgElement alg_sub(const EtaleAlgebra& L, const AlgElement& a, const AlgElement& b);
AlgElement alg_mul(const EtaleAlgebra& L, const AlgElement& a, const AlgElement& b);
AlgElement alg_scale(const AlgElement& a, const Rat& c);
/// Inverse in L; throws for zero divisors and zero.
AlgElement alg_inv(const EtaleAlgebra& L, const AlgElement& a);

/// Coordinates in the power basis {1, theta, ..., theta^{n-1}}.
std::vector<Rat> power_coords(const EtaleAlgebra& L, const AlgElement& a);
AlgElement alg_from_coords(const EtaleAlgebra& L, const std::vector<Rat>& coords);

/// Multiplication-by-a matrix in the power basis (columns = a * theta^j).
QMat alg_mult_matrix(const EtaleAlgebra& L, const AlgElement& a);

Rat element_norm(const EtaleAlgebra& L, const AlgElement& a);
Rat element_trace(const EtaleAlgebra& L, const AlgElement& a);

/// zeta_1, ..., zeta_{n-1}.
std::vector<AlgElement> zeta_basis(const EtaleAlgebra& L);

struct OrderData {
  /// Columns: 1, zeta_1, ..., zeta_{n-1} in power-basis coordinates.
  QMat basis;
  /// table[i][j] = coordinates of b_i * b_j in the order basis.
  std::vector<std::vector<std::vector<Rat>>> table;
  /// Determinant of the trace-pairing Gram matrix; equals disc(f).
  Rat disc;
};

/// Builds the order R_f = Z<1, zeta_1, ..., zeta_{n-1}>, its structure
/// constants, and its discriminant. Throws if the basis fails to close
/// multiplicatively over the integers for integral f (cannot happen for a
/// valid algebra; guards against internal errors).
OrderData build_order(const EtaleAlgebra& L);

/// True iff (1/f'(theta)) I(n-2) is dual to R_f under the trace pairing
/// (integral pairing with unimodular Gram). f'(theta) means f_0 g'(theta).
bool trace_dual_check(const EtaleAlgebra& L);

/// The element f'(theta) = f_0 g'(theta) used in trace duality and descent.
AlgElement f_prime_theta(const EtaleAlgebra& L);

}  // namespace qpencil
