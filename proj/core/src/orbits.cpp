#include "qpencil/orbits.hpp"

namespace qpencil {

namespace {

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace

void triple_validate(const EtaleAlgebra& L, const OrbitTriple& t) {
  if (L.n < 4) throw domain_error("triple: requires n >= 4");
  if (!(t.I.parent == L.f)) throw domain_error("triple: ideal belongs to a different algebra");
  if (t.s == 0) throw domain_error("triple: s must be nonzero");

  // Norm law: N(alpha) = s^2 f0^{n-3}. A zero norm (non-invertible alpha)
  // fails here as well, since s is nonzero.
  const Rat target = Rat(t.s * t.s * pow_rat(L.f.f[0], L.n - 3));
  if (element_norm(L, t.alpha) != target) {
    throw domain_error("triple norm violation: N(alpha) != s^2 f0^(n-3)");
  }

  // Orientation law: the ideal norm matches s up to the sign carried by the
  // basis orientation.
  if (rat_abs(ideal_norm_oriented(L, t.I)) != rat_abs(t.s)) {
    throw domain_error("triple orientation violation: |N(I)| != |s|");
  }

  // Containment law: I * I inside alpha * I(n-3).
  const FractionalIdeal square = ideal_multiply(L, t.I, t.I);
  const FractionalIdeal bound = ideal_scale(L, t.alpha, ideal_If(L, L.n - 3));
  if (!ideal_subset(L, square, bound)) {
    throw domain_error("triple containment violation: I^2 not inside alpha I(n-3)");
  }
}

QMat oriented_ideal_basis(const EtaleAlgebra& L, const FractionalIdeal& I, const Rat& s) {
  QMat b = ideal_basis_q(I);
  Rat cur = ideal_norm_oriented_basis(L, b);
  if (cur == s) return b;
  for (std::size_t i = 0; i < b.rows; ++i) b.at(i, 0) = Rat(-b.at(i, 0));
  if (ideal_norm_oriented_basis(L, b) != s) {
    throw domain_error("oriented_ideal_basis: |N(I)| != |s|");
  }
  return b;
}

QPencil pencil_from_ideal_basis(const EtaleAlgebra& L, const AlgElement& alpha,
                                const QMat& basis_columns) {
  if (L.n < 4) throw domain_error("pencil_from_ideal_basis: requires n >= 4");
  const std::size_t n = static_cast<std::size_t>(L.n);
  if (basis_columns.rows != n || basis_columns.cols != n) {
    throw domain_error("pencil_from_ideal_basis: need an n x n coordinate matrix");
  }
  const AlgElement alpha_inv = alg_inv(L, alpha);

  std::vector<AlgElement> b;
  b.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = basis_columns.at(i, j);
    b.push_back(alg_from_coords(L, col));
  }

  const Rat& f0 = L.f.f[0];
  const Rat& f1 = L.f.f[1];
  QMat A(n, n, Rat(0));
  QMat B(n, n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      AlgElement prod = alg_mul(L, alg_mul(L, b[i], b[j]), alpha_inv);
      auto co = power_coords(L, prod);
      // Coordinates of zeta_{n-1} and zeta_{n-2} in the mixed basis
      // {1, theta, ..., theta^{n-3}, zeta_{n-2}, zeta_{n-1}}: only those two
      // basis vectors reach the top two power-basis coordinates.
      Rat c_top = Rat(co[n - 1] / f0);
      Rat c_sub = Rat((co[n - 2] - f1 * c_top) / f0);
      A.at(i, j) = c_top;
      A.at(j, i) = c_top;
      B.at(i, j) = c_sub;
      B.at(j, i) = c_sub;
    }
  }
  return pencil_make(A, B);
}

QPencil pencil_from_triple(const EtaleAlgebra& L, const OrbitTriple& t) {
  triple_validate(L, t);
  return pencil_from_ideal_basis(L, t.alpha, oriented_ideal_basis(L, t.I, t.s));
}

OrbitTriple triple_scale(const EtaleAlgebra& L, const OrbitTriple& t, const AlgElement& c) {
  const Rat nc = element_norm(L, c);
  if (nc == 0) throw domain_error("triple_scale: scaling element must have nonzero norm");
  return OrbitTriple{ideal_scale(L, c, t.I), alg_mul(L, alg_mul(L, c, c), t.alpha),
                     Rat(nc * t.s)};
}

QProjElem triple_equivalence_witness(const EtaleAlgebra& L, const OrbitTriple& t,
                                     const AlgElement& c) {
  triple_validate(L, t);
  const OrbitTriple t2 = triple_scale(L, t, c);
  triple_validate(L, t2);

  const std::size_t n = static_cast<std::size_t>(L.n);
  const QMat b1 = oriented_ideal_basis(L, t.I, t.s);
  const QMat b2 = oriented_ideal_basis(L, t2.I, t2.s);

  // c * b1 is another oriented basis of c I; M expresses it in b2.
  QMat cb1(n, n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = b1.at(i, j);
    auto coords = power_coords(L, alg_mul(L, c, alg_from_coords(L, col)));
    for (std::size_t i = 0; i < n; ++i) cb1.at(i, j) = coords[i];
  }
  auto inv = mat_det_inv(b2);
  if (!inv.inverse) throw std::logic_error("equivalence witness: degenerate target basis");
  const QMat M = mat_mul(*inv.inverse, cb1);
  for (const auto& e : M.a) {
    if (!is_integer(e)) throw std::logic_error("equivalence witness: change of basis not integral");
  }

  QProjElem w = proj_make(mat_transpose(M), Rat(1));  // also checks det = 1
  const QPencil p1 = pencil_from_ideal_basis(L, t.alpha, b1);
  const QPencil p2 = pencil_from_ideal_basis(L, t2.alpha, b2);
  if (!(proj_act(w, p2) == p1)) {
    throw std::logic_error("equivalence witness: verification failed");
  }
  return w;
}

}  // namespace qpencil
