#include "qpencil/ideal.hpp"

#include <string>

namespace qpencil {

namespace {

void check_parent(const EtaleAlgebra& L, const FractionalIdeal& I, const char* what) {
  if (!(I.parent == L.f)) {
    throw domain_error(std::string(what) + ": ideal belongs to a different algebra");
  }
}

/// Canonical representative of the lattice spanned by the columns.
FractionalIdeal canonicalize(const EtaleAlgebra& L, const QMat& columns) {
  const std::size_t n = static_cast<std::size_t>(L.n);
  if (columns.rows != n) throw domain_error("ideal: coordinate columns must have height n");
  if (columns.cols < n) throw domain_error("ideal: too few columns to span a full-rank lattice");
  ScaledIntMat scaled = qmat_to_scaled_int(columns);
  IntMat h = hnf_column_style(scaled.mat);
  Int g = scaled.den;
  for (const auto& e : h.a) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  }
  Int den = scaled.den;
  if (g > 1) {
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    for (auto& e : h.a) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
  }
  return FractionalIdeal{L.f, std::move(den), std::move(h)};
}

/// Columns of products x * (column j of I's rational basis).
QMat scaled_columns(const EtaleAlgebra& L, const AlgElement& x, const FractionalIdeal& I) {
  const std::size_t n = static_cast<std::size_t>(L.n);
  const Rat inv_den = make_rat(Int(1), I.den);
  QMat out(n, n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = Rat(I.basis.at(i, j)) * inv_den;
    auto coords = power_coords(L, alg_mul(L, x, alg_from_coords(L, col)));
    for (std::size_t i = 0; i < n; ++i) out.at(i, j) = coords[i];
  }
  return out;
}

}  // namespace

FractionalIdeal ideal_from_columns(const EtaleAlgebra& L, const QMat& columns) {
  return canonicalize(L, columns);
}

FractionalIdeal ideal_from_generators(const EtaleAlgebra& L,
                                      const std::vector<AlgElement>& gens) {
  if (gens.empty()) throw domain_error("ideal_from_generators: need at least one generator");
  const std::size_t n = static_cast<std::size_t>(L.n);
  std::vector<AlgElement> rbasis;
  rbasis.reserve(n);
  rbasis.push_back(alg_one(L));
  for (auto& z : zeta_basis(L)) rbasis.push_back(std::move(z));

  QMat cols(n, n * gens.size(), Rat(0));
  std::size_t j = 0;
  for (const auto& gen : gens) {
    for (const auto& b : rbasis) {
      auto coords = power_coords(L, alg_mul(L, gen, b));
      for (std::size_t i = 0; i < n; ++i) cols.at(i, j) = coords[i];
      ++j;
    }
  }
  return canonicalize(L, cols);
}

FractionalIdeal ideal_If(const EtaleAlgebra& L, int k) {
  if (k < 0 || k > L.n - 1) throw domain_error("ideal_If: index must satisfy 0 <= k <= n-1");
  const std::size_t n = static_cast<std::size_t>(L.n);
  auto zetas = zeta_basis(L);
  QMat cols(n, n, Rat(0));
  std::size_t j = 0;
  for (int i = 0; i <= k; ++i, ++j) cols.at(static_cast<std::size_t>(i), j) = Rat(1);
  for (int i = k + 1; i < L.n; ++i, ++j) {
    auto coords = power_coords(L, zetas[static_cast<std::size_t>(i - 1)]);
    for (std::size_t r = 0; r < n; ++r) cols.at(r, j) = coords[r];
  }
  return canonicalize(L, cols);
}

FractionalIdeal ideal_one(const EtaleAlgebra& L) { return ideal_If(L, 0); }

FractionalIdeal ideal_multiply(const EtaleAlgebra& L, const FractionalIdeal& a,
                               const FractionalIdeal& b) {
  check_parent(L, a, "ideal_multiply");
  check_parent(L, b, "ideal_multiply");
  const std::size_t n = static_cast<std::size_t>(L.n);
  const Rat inv_dens = make_rat(Int(1), a.den * b.den);
  QMat cols(n, n * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> ai(n);
    for (std::size_t r = 0; r < n; ++r) ai[r] = Rat(a.basis.at(r, i));
    AlgElement xi = alg_from_coords(L, ai);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rat> bj(n);
      for (std::size_t r = 0; r < n; ++r) bj[r] = Rat(b.basis.at(r, j));
      auto coords = power_coords(L, alg_mul(L, xi, alg_from_coords(L, bj)));
      for (std::size_t r = 0; r < n; ++r) cols.at(r, i * n + j) = Rat(coords[r] * inv_dens);
    }
  }
  return canonicalize(L, cols);
}

FractionalIdeal ideal_scale(const EtaleAlgebra& L, const AlgElement& c,
                            const FractionalIdeal& I) {
  check_parent(L, I, "ideal_scale");
  if (alg_is_zero(c)) throw domain_error("ideal_scale: scalar must be nonzero");
  return canonicalize(L, scaled_columns(L, c, I));
}

Rat ideal_norm_oriented(const EtaleAlgebra& L, const FractionalIdeal& I) {
  check_parent(L, I, "ideal_norm_oriented");
  const Rat det(intmat_det(I.basis));
  const Rat den_pow(pow_int(I.den, static_cast<unsigned long>(L.n)));
  return Rat(det / den_pow / pow_rat(L.f.f[0], L.n - 1));
}

Rat ideal_norm_oriented_basis(const EtaleAlgebra& L, const QMat& columns) {
  if (columns.rows != static_cast<std::size_t>(L.n) || columns.cols != columns.rows) {
    throw domain_error("ideal_norm_oriented_basis: need an n x n coordinate matrix");
  }
  Rat det = mat_det(columns);
  if (det == 0) throw domain_error("ideal_norm_oriented_basis: columns are not a basis");
  return Rat(det / pow_rat(L.f.f[0], L.n - 1));
}

bool ideal_contains(const EtaleAlgebra& L, const FractionalIdeal& I, const AlgElement& x) {
  check_parent(L, I, "ideal_contains");
  auto coords = power_coords(L, x);
  for (auto& c : coords) c *= I.den;
  auto t = mat_solve(intmat_to_q(I.basis), coords);
  if (!t) throw std::logic_error("ideal_contains: canonical basis is singular");
  for (const auto& c : *t) {
    if (!is_integer(c)) return false;
  }
  return true;
}

bool ideal_subset(const EtaleAlgebra& L, const FractionalIdeal& a, const FractionalIdeal& b) {
  check_parent(L, a, "ideal_subset");
  check_parent(L, b, "ideal_subset");
  const std::size_t n = static_cast<std::size_t>(L.n);
  const Rat inv_den = make_rat(Int(1), a.den);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = Rat(a.basis.at(i, j)) * inv_den;
    if (!ideal_contains(L, b, alg_from_coords(L, col))) return false;
  }
  return true;
}

bool is_fractional_ideal(const EtaleAlgebra& L, const FractionalIdeal& I) {
  check_parent(L, I, "is_fractional_ideal");
  const std::size_t n = static_cast<std::size_t>(L.n);
  const Rat inv_den = make_rat(Int(1), I.den);
  for (const auto& z : zeta_basis(L)) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rat> col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = Rat(I.basis.at(i, j)) * inv_den;
      if (!ideal_contains(L, I, alg_mul(L, z, alg_from_coords(L, col)))) return false;
    }
  }
  return true;
}

QMat ideal_basis_q(const FractionalIdeal& I) {
  QMat out(I.basis.rows, I.basis.cols, Rat(0));
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = make_rat(I.basis.a[i], I.den);
  return out;
}

}  // namespace qpencil
