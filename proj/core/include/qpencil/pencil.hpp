#pragma once

/// @file pencil.hpp
/// Pencils (A, B) of symmetric bilinear forms, their invariant binary form
///   f(x,y) = (-1)^{n(n-1)/2} det(x A - y B),
/// the projective group action (A,B) -> (t gAg^T, t gBg^T) for pairs (g,t)
/// with det(g) t^{n/2} = 1, the (n+2)-dimensional regular extension, and
/// recovery of the multiplication-by-theta matrix A^{-1}B.

#include <cstddef>
#include <utility>
#include <vector>

#include "qpencil/binary_form.hpp"
#include "qpencil/matrix.hpp"

namespace qpencil {

template <class K>
struct Pencil {
  Mat<K> A, B;

  std::size_t dim() const { return A.rows; }

  friend bool operator==(const Pencil& x, const Pencil& y) {
    return x.A == y.A && x.B == y.B;
  }
};

using QPencil = Pencil<Rat>;
using FpPencil = Pencil<FpElem>;

template <class K>
bool mat_is_symmetric(const Mat<K>& m) {
  if (m.rows != m.cols) return false;
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = i + 1; j < m.cols; ++j) {
      if (!FieldOps<K>::eq(m.at(i, j), m.at(j, i))) return false;
    }
  }
  return true;
}

/// Builds a pencil, checking that A and B are symmetric of equal size.
template <class K>
Pencil<K> pencil_make(Mat<K> a, Mat<K> b) {
  if (a.rows == 0) throw domain_error("pencil: empty matrices");
  if (a.rows != b.rows || a.cols != b.cols) throw domain_error("pencil: size mismatch");
  if (!mat_is_symmetric(a) || !mat_is_symmetric(b)) {
    throw domain_error("pencil: matrices must be symmetric");
  }
  return Pencil<K>{std::move(a), std::move(b)};
}

/// The invariant binary n-ic form f(x,y) = (-1)^{n(n-1)/2} det(xA - yB),
/// computed exactly by fraction-free elimination over K[t].
template <class K>
BinaryForm<K> invariant_form(const Pencil<K>& p) {
  using Ops = FieldOps<K>;
  const std::size_t n = p.dim();
  const K like = p.A.a[0];
  std::vector<Poly<K>> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Entry t*A_ij - B_ij; det is then det(tA - B) = f(t, 1) up to sign.
      std::vector<K> c{Ops::neg(p.B.at(i, j)), p.A.at(i, j)};
      entries[i * n + j] = Poly<K>(std::move(c));
    }
  }
  Poly<K> det = poly_mat_det(std::move(entries), n, like);
  const bool flip = (n * (n - 1) / 2) % 2 == 1;
  std::vector<K> coeffs(n + 1, Ops::zero(like));
  for (std::size_t i = 0; i <= n; ++i) {
    K d = det.coeff(n - i, like);  // d_{n-i} multiplies x^{n-i} y^i
    coeffs[i] = flip ? Ops::neg(d) : d;
  }
  return binary_form_make(static_cast<int>(n), std::move(coeffs));
}

/// An element of the projectivized group: a pair (g, t) with
/// det(g) t^{n/2} = 1 (n even), acting by (A,B) -> (t gAg^T, t gBg^T).
/// Pairs (g, t) and (cg, c^{-2} t) act identically.
template <class K>
struct ProjGroupElem {
  Mat<K> g;
  K t;
};

using QProjElem = ProjGroupElem<Rat>;
using FpProjElem = ProjGroupElem<FpElem>;

template <class K>
ProjGroupElem<K> proj_make(Mat<K> g, K t) {
  using Ops = FieldOps<K>;
  if (g.rows != g.cols || g.rows == 0) throw domain_error("proj_make: square matrix required");
  if (g.rows % 2 != 0) throw domain_error("proj_make: even dimension required");
  if (Ops::is_zero(t)) throw domain_error("proj_make: t must be nonzero");
  K lhs = Ops::mul(mat_det(g), k_pow(t, g.rows / 2));
  if (!Ops::eq(lhs, Ops::one(t))) {
    throw domain_error("proj_make: det(g) * t^{n/2} must equal 1");
  }
  return ProjGroupElem<K>{std::move(g), std::move(t)};
}

template <class K>
Pencil<K> proj_act(const ProjGroupElem<K>& gt, const Pencil<K>& p) {
  if (gt.g.rows != p.dim()) throw domain_error("proj_act: dimension mismatch");
  Mat<K> gT = mat_transpose(gt.g);
  Mat<K> a = mat_scale(mat_mul(mat_mul(gt.g, p.A), gT), gt.t);
  Mat<K> b = mat_scale(mat_mul(mat_mul(gt.g, p.B), gT), gt.t);
  return Pencil<K>{std::move(a), std::move(b)};
}

/// Extends an n-pencil to an (n+2)-pencil by appending the rank-one block
/// diag-style to A and the split hyperbolic block to B; the invariant form
/// becomes f(x,y) * y^2. Requires det A != 0 and disc(f) != 0.
template <class K>
Pencil<K> regular_extension(const Pencil<K>& p) {
  using Ops = FieldOps<K>;
  const std::size_t n = p.dim();
  const K like = p.A.a[0];
  BinaryForm<K> f = invariant_form(p);
  if (Ops::is_zero(f.f[0])) {
    throw domain_error("regular_extension: det A must be nonzero");
  }
  if (Ops::is_zero(binary_discriminant(f))) {
    throw domain_error("regular_extension: discriminant must be nonzero");
  }
  Mat<K> a(n + 2, n + 2, Ops::zero(like));
  Mat<K> b(n + 2, n + 2, Ops::zero(like));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a.at(i, j) = p.A.at(i, j);
      b.at(i, j) = p.B.at(i, j);
    }
  }
  a.at(n, n) = Ops::one(like);          // rank one form <v,v> on the first new axis
  b.at(n, n + 1) = Ops::one(like);      // split form x y on the new plane
  b.at(n + 1, n) = Ops::one(like);
  return Pencil<K>{std::move(a), std::move(b)};
}

/// The matrix M = A^{-1} B: multiplication by theta on K^n. Its
/// characteristic polynomial is f(x,1)/f_0 exactly. Throws when A is
/// singular; see theta_action_with_shift for that case.
template <class K>
Mat<K> theta_action_from_pencil(const Pencil<K>& p) {
  auto di = mat_det_inv(p.A);
  if (!di.inverse) {
    throw domain_error("theta action: A is singular (use theta_action_with_shift)");
  }
  return mat_mul(*di.inverse, p.B);
}

/// Shift-aware form of the theta action. Returns (M, k) where M is the
/// theta matrix of the substituted pencil (A - kB, B), whose invariant form
/// is f(x, kx + y); k = 0 whenever A is invertible. The characteristic
/// polynomial of M equals f(x, kx+1) / f(1, k). When det A != 0 the original
/// action is recovered as M (kM + I)^{-1}.
template <class K>
struct ShiftedTheta {
  Mat<K> mul_theta;
  int shift = 0;
};

template <class K>
ShiftedTheta<K> theta_action_with_shift(const Pencil<K>& p) {
  using Ops = FieldOps<K>;
  const K like = p.A.a[0];
  {
    auto di = mat_det_inv(p.A);
    if (di.inverse) return {mat_mul(*di.inverse, p.B), 0};
  }
  BinaryForm<K> f = invariant_form(p);
  if (Ops::is_zero(binary_discriminant(f))) {
    throw domain_error("theta action: discriminant must be nonzero");
  }
  for (int k = 1; k <= f.n; ++k) {
    const K kk = Ops::from_long(k, like);
    if (Ops::is_zero(binary_form_eval(f, Ops::one(like), kk))) continue;
    Mat<K> a1 = mat_sub(p.A, mat_scale(p.B, kk));
    auto di = mat_det_inv(a1);
    if (!di.inverse) throw domain_error("theta action: internal shift failure");
    return {mat_mul(*di.inverse, p.B), k};
  }
  throw domain_error("theta action: no substitution made A invertible");
}

}  // namespace qpencil
