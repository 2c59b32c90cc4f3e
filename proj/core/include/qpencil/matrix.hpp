#pragma once

/// @file matrix.hpp
/// Dense matrices over an exact field, plus integer matrices with a
/// canonical column-style Hermite normal form.
///
/// HNF convention: columns generate the lattice. The canonical basis is the
/// unique lower-triangular matrix with positive diagonal pivots in which
/// every entry left of a pivot is reduced into [0, pivot). It is computed
/// as the transpose of the row-style HNF of the transpose.

#include <optional>
#include <vector>

#include "qpencil/poly.hpp"

namespace qpencil {

template <class K>
struct Mat {
  using Ops = FieldOps<K>;

  std::size_t rows = 0, cols = 0;
  std::vector<K> a;  ///< row-major

  Mat() = default;
  Mat(std::size_t r, std::size_t c, const K& fill) : rows(r), cols(c), a(r * c, fill) {}

  K& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const K& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i) {
      if (!Ops::eq(x.a[i], y.a[i])) return false;
    }
    return true;
  }
};

using QMat = Mat<Rat>;
using FpMat = Mat<FpElem>;

template <class K>
Mat<K> mat_identity(std::size_t n, const K& like) {
  using Ops = FieldOps<K>;
  Mat<K> m(n, n, Ops::zero(like));
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Ops::one(like);
  return m;
}

template <class K>
Mat<K> mat_mul(const Mat<K>& x, const Mat<K>& y) {
  using Ops = FieldOps<K>;
  if (x.cols != y.rows) throw domain_error("mat_mul: shape mismatch");
  if (x.a.empty() || y.a.empty()) throw domain_error("mat_mul: empty matrix");
  Mat<K> out(x.rows, y.cols, Ops::zero(x.a[0]));
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (Ops::is_zero(x.at(i, k))) continue;
      for (std::size_t j = 0; j < y.cols; ++j) {
        out.at(i, j) = Ops::add(out.at(i, j), Ops::mul(x.at(i, k), y.at(k, j)));
      }
    }
  }
  return out;
}

template <class K>
Mat<K> mat_transpose(const Mat<K>& x) {
  if (x.a.empty()) return x;
  Mat<K> out(x.cols, x.rows, x.a[0]);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
  }
  return out;
}

template <class K>
std::vector<K> mat_apply(const Mat<K>& x, const std::vector<K>& v) {
  using Ops = FieldOps<K>;
  if (x.cols != v.size() || v.empty()) throw domain_error("mat_apply: shape mismatch");
  std::vector<K> out(x.rows, Ops::zero(v[0]));
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) {
      out[i] = Ops::add(out[i], Ops::mul(x.at(i, j), v[j]));
    }
  }
  return out;
}

/// Determinant and (when nonsingular) inverse by Gaussian elimination.
template <class K>
struct DetInv {
  K det;
  std::optional<Mat<K>> inverse;  ///< absent iff det == 0
};

template <class K>
DetInv<K> mat_det_inv(const Mat<K>& m) {
  using Ops = FieldOps<K>;
  if (m.rows != m.cols) throw domain_error("mat_det_inv: square matrix required");
  if (m.a.empty()) throw domain_error("mat_det_inv: empty matrix");
  const std::size_t n = m.rows;
  Mat<K> work = m;
  Mat<K> inv = mat_identity(n, m.a[0]);
  K det = Ops::one(m.a[0]);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && Ops::is_zero(work.at(pivot, col))) ++pivot;
    if (pivot == n) return {Ops::zero(m.a[0]), std::nullopt};
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.a[pivot * n + j], work.a[col * n + j]);
        std::swap(inv.a[pivot * n + j], inv.a[col * n + j]);
      }
      det = Ops::neg(det);
    }
    const K p = work.at(col, col);
    det = Ops::mul(det, p);
    const K pinv = Ops::inv(p);
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) = Ops::mul(work.at(col, j), pinv);
      inv.at(col, j) = Ops::mul(inv.at(col, j), pinv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || Ops::is_zero(work.at(i, col))) continue;
      const K f = work.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(i, j) = Ops::sub(work.at(i, j), Ops::mul(f, work.at(col, j)));
        inv.at(i, j) = Ops::sub(inv.at(i, j), Ops::mul(f, inv.at(col, j)));
      }
    }
  }
  return {det, std::move(inv)};
}

template <class K>
K mat_det(const Mat<K>& m) {
  return mat_det_inv(m).det;
}

/// Solves M x = b; empty optional when M is singular.
template <class K>
std::optional<std::vector<K>> mat_solve(const Mat<K>& m, const std::vector<K>& b) {
  auto di = mat_det_inv(m);
  if (!di.inverse) return std::nullopt;
  return mat_apply(*di.inverse, b);
}

template <class K>
Mat<K> mat_add(const Mat<K>& x, const Mat<K>& y) {
  using Ops = FieldOps<K>;
  if (x.rows != y.rows || x.cols != y.cols) throw domain_error("mat_add: shape mismatch");
  Mat<K> out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = Ops::add(out.a[i], y.a[i]);
  return out;
}

template <class K>
Mat<K> mat_sub(const Mat<K>& x, const Mat<K>& y) {
  using Ops = FieldOps<K>;
  if (x.rows != y.rows || x.cols != y.cols) throw domain_error("mat_sub: shape mismatch");
  Mat<K> out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = Ops::sub(out.a[i], y.a[i]);
  return out;
}

template <class K>
Mat<K> mat_scale(const Mat<K>& x, const K& s) {
  using Ops = FieldOps<K>;
  Mat<K> out = x;
  for (auto& v : out.a) v = Ops::mul(v, s);
  return out;
}

/// Determinant of a square matrix of polynomials by fraction-free Bareiss
/// elimination (exact division holds in any integral domain).
template <class K>
Poly<K> poly_mat_det(std::vector<Poly<K>> m, std::size_t n, const K& like) {
  using Ops = FieldOps<K>;
  if (n == 0) throw domain_error("poly_mat_det: empty matrix");
  if (m.size() != n * n) throw domain_error("poly_mat_det: shape mismatch");
  auto at = [&](std::size_t i, std::size_t j) -> Poly<K>& { return m[i * n + j]; };
  Poly<K> prev = poly_constant(Ops::one(like));
  bool neg = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return Poly<K>();
      for (std::size_t j = 0; j < n; ++j) std::swap(at(pivot, j), at(k, j));
      neg = !neg;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly<K> num = poly_sub(poly_mul(at(i, j), at(k, k)), poly_mul(at(i, k), at(k, j)));
        at(i, j) = poly_divexact(num, prev);
      }
      at(i, k) = Poly<K>();
    }
    prev = at(k, k);
  }
  Poly<K> det = at(n - 1, n - 1);
  return neg ? poly_neg(det) : det;
}

/// Characteristic polynomial det(x I - M), monic of degree n, computed exactly.
template <class K>
Poly<K> mat_charpoly(const Mat<K>& m) {
  using Ops = FieldOps<K>;
  if (m.rows != m.cols || m.a.empty()) throw domain_error("mat_charpoly: square matrix required");
  const K like = m.a[0];
  const std::size_t n = m.rows;
  std::vector<Poly<K>> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly<K> e = poly_constant(Ops::neg(m.at(i, j)));
      if (i == j) e = poly_add(e, poly_monomial(1, like));
      entries[i * n + j] = std::move(e);
    }
  }
  return poly_mat_det(std::move(entries), n, like);
}

// --- Integer matrices ------------------------------------------------------

struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;  ///< row-major

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  friend bool operator==(const IntMat&, const IntMat&) = default;
};

/// Canonical column-style HNF of a matrix whose columns span a full-rank
/// lattice in Z^rows (cols >= rows). Returns the rows x rows lower-triangular
/// canonical basis. Throws on rank deficiency.
IntMat hnf_column_style(const IntMat& m);

/// Exact determinant via Bareiss fraction-free elimination.
Int intmat_det(const IntMat& m);

QMat intmat_to_q(const IntMat& m);

/// Clears denominators: returns (M, d) with input = M / d, d > 0 minimal.
struct ScaledIntMat {
  IntMat mat;
  Int den;
};
ScaledIntMat qmat_to_scaled_int(const QMat& m);

}  // namespace qpencil
