#include "qpencil/etale.hpp"

namespace qpencil {

EtaleAlgebra etale_make(const QForm& f) {
  if (f.n < 2) throw domain_error("etale algebra: degree must be >= 2");
  if (f.f.at(0) == 0) throw domain_error("etale algebra: leading coefficient must be nonzero");
  if (binary_discriminant(f) == 0) throw domain_error("etale algebra: discriminant must be nonzero");
  QPoly dehom = binary_to_poly(f);
  QPoly g = poly_scale(dehom, Rat(Rat(1) / f.f[0]));
  return EtaleAlgebra{f, std::move(g), f.n};
}

AlgElement alg_make(const EtaleAlgebra& L, QPoly p) {
  return AlgElement{poly_mod(std::move(p), L.g)};
}

AlgElement alg_from_rat(const EtaleAlgebra&, const Rat& c) {
  return AlgElement{c == 0 ? QPoly() : poly_constant(c)};
}

AlgElement alg_theta(const EtaleAlgebra& L) { return alg_make(L, poly_monomial<Rat>(1, Rat(1))); }

AlgElement alg_one(const EtaleAlgebra&) { return AlgElement{poly_constant(Rat(1))}; }

bool alg_is_zero(const AlgElement& a) { return a.residue.is_zero(); }

AlgElement alg_add(const EtaleAlgebra&, const AlgElement& a, const AlgElement& b) {
  return AlgElement{poly_add(a.residue, b.residue)};
}

AlgElement alg_sub(const EtaleAlgebra&, const AlgElement& a, const AlgElement& b) {
  return AlgElement{poly_sub(a.residue, b.residue)};
}

AlgElement alg_mul(const EtaleAlgebra& L, const AlgElement& a, const AlgElement& b) {
  return AlgElement{poly_mod(poly_mul(a.residue, b.residue), L.g)};
}

AlgElement alg_scale(const AlgElement& a, const Rat& c) {
  return AlgElement{poly_scale(a.residue, c)};
}

AlgElement alg_inv(const EtaleAlgebra& L, const AlgElement& a) {
  if (alg_is_zero(a)) throw domain_error("algebra inverse: zero element");
  auto xg = poly_xgcd(a.residue, L.g);
  if (xg.g.deg() != 0) {
    throw domain_error("algebra inverse: zero divisor (gcd with g has positive degree)");
  }
  return alg_make(L, xg.u);
}

std::vector<Rat> power_coords(const EtaleAlgebra& L, const AlgElement& a) {
  std::vector<Rat> out(static_cast<std::size_t>(L.n), Rat(0));
  for (std::size_t i = 0; i < a.residue.c.size(); ++i) out[i] = a.residue.c[i];
  return out;
}

AlgElement alg_from_coords(const EtaleAlgebra& L, const std::vector<Rat>& coords) {
  if (coords.size() != static_cast<std::size_t>(L.n)) {
    throw domain_error("alg_from_coords: need exactly n coordinates");
  }
  return AlgElement{QPoly(coords)};
}

QMat alg_mult_matrix(const EtaleAlgebra& L, const AlgElement& a) {
  const std::size_t n = static_cast<std::size_t>(L.n);
  QMat m(n, n, Rat(0));
  AlgElement cur = a;
  for (std::size_t j = 0; j < n; ++j) {
    auto coords = power_coords(L, cur);
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = coords[i];
    if (j + 1 < n) cur = alg_mul(L, cur, alg_theta(L));
  }
  return m;
}

Rat element_norm(const EtaleAlgebra& L, const AlgElement& a) {
  if (alg_is_zero(a)) return Rat(0);
  return mat_det(alg_mult_matrix(L, a));
}

Rat element_trace(const EtaleAlgebra& L, const AlgElement& a) {
  QMat m = alg_mult_matrix(L, a);
  Rat t(0);
  for (std::size_t i = 0; i < m.rows; ++i) t += m.at(i, i);
  return t;
}

std::vector<AlgElement> zeta_basis(const EtaleAlgebra& L) {
  std::vector<AlgElement> out;
  out.reserve(static_cast<std::size_t>(L.n) - 1);
  for (int k = 1; k < L.n; ++k) {
    // zeta_k = sum_{i=0}^{k-1} f_i theta^{k-i}; degree k < n, already reduced.
    std::vector<Rat> c(static_cast<std::size_t>(k) + 1, Rat(0));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(k - i)] = L.f.f[static_cast<std::size_t>(i)];
    out.push_back(AlgElement{QPoly(std::move(c))});
  }
  return out;
}

OrderData build_order(const EtaleAlgebra& L) {
  const std::size_t n = static_cast<std::size_t>(L.n);
  std::vector<AlgElement> basis;
  basis.reserve(n);
  basis.push_back(alg_one(L));
  for (auto& z : zeta_basis(L)) basis.push_back(std::move(z));

  OrderData out;
  out.basis = QMat(n, n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    auto coords = power_coords(L, basis[j]);
    for (std::size_t i = 0; i < n; ++i) out.basis.at(i, j) = coords[i];
  }
  auto binv = mat_det_inv(out.basis);
  if (!binv.inverse) throw std::logic_error("build_order: basis matrix is singular");

  const bool integral = binary_form_is_integral(L.f);
  out.table.assign(n, std::vector<std::vector<Rat>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      AlgElement prod = alg_mul(L, basis[i], basis[j]);
      std::vector<Rat> coords = mat_apply(*binv.inverse, power_coords(L, prod));
      if (integral) {
        for (const auto& c : coords) {
          if (!is_integer(c)) {
            throw std::logic_error("build_order: multiplication table failed to close over Z");
          }
        }
      }
      out.table[i][j] = coords;
      out.table[j][i] = std::move(coords);
    }
  }

  QMat gram(n, n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rat t = element_trace(L, alg_mul(L, basis[i], basis[j]));
      gram.at(i, j) = t;
      gram.at(j, i) = t;
    }
  }
  out.disc = mat_det(gram);
  return out;
}

AlgElement f_prime_theta(const EtaleAlgebra& L) {
  return alg_make(L, poly_scale(poly_derivative(L.g), L.f.f[0]));
}

bool trace_dual_check(const EtaleAlgebra& L) {
  const std::size_t n = static_cast<std::size_t>(L.n);
  if (L.n < 2) return false;
  // Basis of I(n-2): {1, theta, ..., theta^{n-2}, zeta_{n-1}}.
  std::vector<AlgElement> in2;
  for (int k = 0; k <= L.n - 2; ++k) in2.push_back(alg_make(L, poly_monomial<Rat>(static_cast<std::size_t>(k), Rat(1))));
  in2.push_back(zeta_basis(L).back());

  AlgElement w = alg_inv(L, f_prime_theta(L));
  std::vector<AlgElement> dual;
  dual.reserve(n);
  for (const auto& b : in2) dual.push_back(alg_mul(L, w, b));

  std::vector<AlgElement> rbasis;
  rbasis.push_back(alg_one(L));
  for (auto& z : zeta_basis(L)) rbasis.push_back(std::move(z));

  QMat gram(n, n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rat t = element_trace(L, alg_mul(L, rbasis[i], dual[j]));
      if (!is_integer(t)) return false;
      gram.at(i, j) = t;
    }
  }
  Rat det = mat_det(gram);
  return det == 1 || det == -1;
}

}  // namespace qpencil
