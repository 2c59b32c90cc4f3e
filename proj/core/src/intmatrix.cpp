#include "qpencil/matrix.hpp"

namespace qpencil {

namespace {

/// In-place row-style HNF: row echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot). Returns the pivot count (rank).
std::size_t row_hnf(IntMat& m) {
  const std::size_t rows = m.rows, cols = m.cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    // Eliminate below position r with gcd pivoting.
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (m.at(i, col) != 0 &&
            (best == rows ||
             mpz_cmpabs(m.at(i, col).get_mpz_t(), m.at(best, col).get_mpz_t()) < 0)) {
          best = i;
        }
      }
      if (best == rows) break;  // column is zero at/below r
      if (best != r) {
        for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(best, j), m.at(r, j));
      }
      bool reduced_all = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m.at(i, col) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(i, col).get_mpz_t(), m.at(r, col).get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(r, j);
        if (m.at(i, col) != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (m.at(r, col) == 0) continue;
    if (m.at(r, col) < 0) {
      for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = -m.at(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(i, col).get_mpz_t(), m.at(r, col).get_mpz_t());
      if (q != 0) {
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(r, j);
      }
    }
    ++r;
  }
  return r;
}

IntMat transpose(const IntMat& m) {
  IntMat out(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  }
  return out;
}

}  // namespace

IntMat hnf_column_style(const IntMat& m) {
  if (m.rows == 0 || m.cols < m.rows) {
    throw domain_error("hnf: need cols >= rows > 0 (columns generate the lattice)");
  }
  IntMat t = transpose(m);
  const std::size_t rank = row_hnf(t);
  if (rank < m.rows) throw domain_error("hnf: rank-deficient input");
  IntMat square(m.rows, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.rows; ++j) square.at(i, j) = t.at(i, j);
  }
  return transpose(square);
}

Int intmat_det(const IntMat& m) {
  if (m.rows != m.cols) throw domain_error("intmat_det: square matrix required");
  const std::size_t n = m.rows;
  if (n == 0) return Int(1);
  IntMat w = m;
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && w.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return Int(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(pivot, j), w.at(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  Int det = w.at(n - 1, n - 1);
  return sign < 0 ? Int(-det) : det;
}

QMat intmat_to_q(const IntMat& m) {
  QMat out(m.rows, m.cols, Rat(0));
  for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = Rat(m.a[i]);
  return out;
}

ScaledIntMat qmat_to_scaled_int(const QMat& m) {
  Int den(1);
  for (const auto& x : m.a) {
    Int d = x.get_den();
    den = lcm(den, d);
  }
  IntMat out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    Rat scaled = m.a[i] * Rat(den);
    out.a[i] = to_int(scaled);
  }
  return {std::move(out), den};
}

}  // namespace qpencil
