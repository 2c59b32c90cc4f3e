#include "qpencil/descent.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "qpencil/census.hpp"

namespace qpencil {

namespace {

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

void check_on_curve(const EtaleAlgebra& L, const Rat& x0, const Rat& y0, const Rat& z0) {
  if (x0 == 0 && y0 == 0) throw domain_error("curve point: (x0, y0) must not be (0, 0)");
  if (Rat(z0 * z0) != binary_form_eval(L.f, x0, y0)) {
    throw domain_error("curve point: z0^2 != f(x0, y0)");
  }
}

/// x0 for y0 normalized to 1; affine points only.
Rat affine_x(const EtaleAlgebra& L, const CurvePoint& q, const char* who) {
  check_on_curve(L, q.x0, q.y0, q.z0);
  if (q.y0 == 0) throw domain_error(std::string(who) + ": point must be affine (y0 != 0)");
  return Rat(q.x0 / q.y0);
}

AlgElement theta_power(const EtaleAlgebra& L, int k) {
  return alg_make(L, poly_monomial<Rat>(static_cast<std::size_t>(k), Rat(1)));
}

QMat columns_of(const EtaleAlgebra& L, const std::vector<AlgElement>& elts) {
  const std::size_t n = static_cast<std::size_t>(L.n);
  QMat m(n, elts.size(), Rat(0));
  for (std::size_t j = 0; j < elts.size(); ++j) {
    auto coords = power_coords(L, elts[j]);
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = coords[i];
  }
  return m;
}

/// Basis elements of I(k): {1, theta, ..., theta^k, zeta_{k+1}, ..., zeta_{n-1}}.
std::vector<AlgElement> If_basis_elements(const EtaleAlgebra& L, int k) {
  std::vector<AlgElement> out;
  for (int i = 0; i <= k; ++i) out.push_back(theta_power(L, i));
  const auto zs = zeta_basis(L);
  for (int j = k + 1; j <= L.n - 1; ++j) out.push_back(zs[static_cast<std::size_t>(j - 1)]);
  return out;
}

}  // namespace

CurvePoint curve_point_make(const EtaleAlgebra& L, const Rat& x0, const Rat& y0,
                            const Rat& z0) {
  check_on_curve(L, x0, y0, z0);
  return CurvePoint{x0, y0, z0};
}

MumfordDivisor validate_mumford(const EtaleAlgebra& L, const QPoly& P, const QPoly& R) {
  if (P.is_zero() || P.lc() != 1) throw domain_error("mumford: P must be monic");
  const int m = static_cast<int>(P.deg());
  if (m < 1 || m % 2 == 0) throw domain_error("mumford: P must have odd degree");
  if (poly_gcd(P, poly_derivative(P)).deg() > 0) {
    throw domain_error("mumford: P must be squarefree");
  }
  if (!R.is_zero() && R.deg() >= P.deg()) {
    throw domain_error("mumford: deg R must be below deg P");
  }
  const QPoly fpoly = binary_to_poly(L.f);
  if (!poly_mod(poly_sub(poly_mul(R, R), fpoly), P).is_zero()) {
    throw domain_error("mumford: R^2 - f(x,1) is not divisible by P");
  }
  MumfordDivisor d{P, R, false, poly_is_integral(P) && poly_is_integral(R)};
  if (poly_gcd(P, L.g).deg() > 0) {
    if (m > 1) throw domain_error("mumford: only degree-1 divisors may share a root with g");
    d.shares_root_with_g = true;
  }
  return d;
}

AlgElement x_minus_T(const EtaleAlgebra& L, const CurvePoint& q) {
  const Rat x = affine_x(L, q, "x_minus_T");
  if (q.z0 != 0) return alg_sub(L, alg_from_rat(L, x), alg_theta(L));
  const QPoly h0{{Rat(-x), Rat(1)}};
  const QPoly h1 = poly_divexact(binary_to_poly(L.f), h0);
  return alg_make(L, poly_sub(h1, h0));
}

AlgElement x_minus_T(const EtaleAlgebra& L, const MumfordDivisor& d) {
  const MumfordDivisor v = validate_mumford(L, d.P, d.R);
  if (v.shares_root_with_g) {
    if (!d.shares_root_with_g) {
      throw domain_error("x_minus_T: divisor shares a root with g but is not flagged");
    }
    const Rat a = Rat(-v.P.c[0]);
    return x_minus_T(L, CurvePoint{a, Rat(1), Rat(0)});
  }
  return alg_make(L, v.P);
}

QPencil extended_pencil(const EtaleAlgebra& L, const AlgElement& alpha) {
  const int n = L.n;
  const std::size_t dim = static_cast<std::size_t>(n) + 2;
  QMat a(dim, dim, Rat(0));
  QMat b(dim, dim, Rat(0));
  // top[k] = theta^{n-1} coefficient of alpha * theta^k mod g.
  std::vector<Rat> top;
  AlgElement w = alpha;
  const AlgElement th = alg_theta(L);
  for (int k = 0; k <= 2 * n - 1; ++k) {
    top.push_back(power_coords(L, w)[static_cast<std::size_t>(n - 1)]);
    w = alg_mul(L, w, th);
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
      a.at(i, j) = top[i + j];
      b.at(i, j) = top[i + j + 1];
    }
  }
  a.at(dim - 2, dim - 2) = Rat(1);
  b.at(dim - 2, dim - 1) = Rat(1);
  b.at(dim - 1, dim - 2) = Rat(1);
  return pencil_make(std::move(a), std::move(b));
}

QMat plane_columns(const EtaleAlgebra& L, const IsotropicPlane& plane) {
  const std::size_t n = static_cast<std::size_t>(L.n);
  QMat m(n + 2, plane.basis.size(), Rat(0));
  for (std::size_t j = 0; j < plane.basis.size(); ++j) {
    const auto coords = power_coords(L, plane.basis[j].lambda);
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = coords[i];
    m.at(n, j) = plane.basis[j].a;
    m.at(n + 1, j) = plane.basis[j].b;
  }
  return m;
}

bool plane_is_isotropic(const QPencil& pencil, const QMat& columns) {
  if (columns.rows != pencil.dim()) {
    throw domain_error("plane: column height must match the pencil dimension");
  }
  const QMat ct = mat_transpose(columns);
  for (const QMat* m : {&pencil.A, &pencil.B}) {
    const QMat gram = mat_mul(ct, mat_mul(*m, columns));
    for (const auto& e : gram.a) {
      if (e != 0) return false;
    }
  }
  return true;
}

SolublePlane soluble_plane_from_point(const EtaleAlgebra& L, const CurvePoint& q) {
  const int n = L.n;
  if (n < 4 || n % 2 != 0) {
    throw domain_error("soluble plane: requires even degree >= 4");
  }
  const Rat x = affine_x(L, q, "soluble plane");
  const int gi = (n - 2) / 2;
  const AlgElement alpha = x_minus_T(L, q);
  const AlgElement th = alg_theta(L);

  std::vector<AlgElement> lam;
  if (q.z0 != 0) {
    for (int i = 0; i <= gi; ++i) lam.push_back(theta_power(L, i));
  } else {
    const QPoly h0{{Rat(-x), Rat(1)}};
    const QPoly h1 = poly_divexact(binary_to_poly(L.f), h0);
    lam.push_back(alg_sub(L, alg_make(L, h1), alg_from_rat(L, poly_eval(h1, x))));
    const AlgElement shifted = alg_sub(L, th, alg_from_rat(L, x));
    AlgElement p = shifted;
    for (int i = 1; i <= gi; ++i) {
      lam.push_back(p);
      p = alg_mul(L, p, shifted);
    }
  }

  IsotropicPlane plane;
  const Rat half = make_rat(Int(1), Int(2));
  for (int i = 0; i <= gi; ++i) {
    const AlgElement prod = alg_mul(L, alg_mul(L, alpha, th), alg_mul(L, lam[static_cast<std::size_t>(i)], lam[static_cast<std::size_t>(gi)]));
    const Rat tail = power_coords(L, prod)[static_cast<std::size_t>(n - 1)];
    Rat a = (i == gi) ? Rat(1) : Rat(0);
    Rat b = (i == gi) ? Rat(-tail * half) : Rat(-tail);
    plane.basis.push_back(PlaneVector{lam[static_cast<std::size_t>(i)], a, b});
  }

  SolublePlane out{extended_pencil(L, alpha), std::move(plane)};
  if (!plane_is_isotropic(out.pencil, plane_columns(L, out.plane))) {
    throw std::logic_error("soluble plane: isotropy verification failed");
  }
  return out;
}

SignedTriples one_point_integral_orbit(const EtaleAlgebra& L, const Rat& c) {
  const int n = L.n;
  if (n < 4 || n % 2 != 0) {
    throw domain_error("one point orbit: requires even degree >= 4");
  }
  if (!binary_form_is_integral(L.f)) {
    throw domain_error("one point orbit: form must be integral");
  }
  if (c == 0) throw domain_error("one point orbit: c must be nonzero");
  if (L.f.f[static_cast<std::size_t>(n)] != Rat(c * c)) {
    throw domain_error("one point orbit: f_n must equal c^2");
  }
  std::vector<AlgElement> gens;
  gens.push_back(alg_from_rat(L, c));
  for (int i = 1; i <= (n - 2) / 2; ++i) gens.push_back(theta_power(L, i));
  const auto zs = zeta_basis(L);
  for (int k = n / 2; k <= n - 1; ++k) gens.push_back(zs[static_cast<std::size_t>(k - 1)]);
  FractionalIdeal I = ideal_from_columns(L, columns_of(L, gens));
  const Rat s = rat_abs(Rat(c / pow_rat(L.f.f[0], (n - 2) / 2)));
  SignedTriples out{OrbitTriple{I, alg_theta(L), s}, OrbitTriple{std::move(I), alg_theta(L), Rat(-s)}};
  triple_validate(L, out.plus);
  triple_validate(L, out.minus);
  return out;
}

SignedTriples integral_orbit_from_divisor(const EtaleAlgebra& L, const MumfordDivisor& d) {
  const int n = L.n;
  if (n < 4 || n % 2 != 0) {
    throw domain_error("divisor orbit: requires even degree >= 4");
  }
  if (!binary_form_is_integral(L.f)) {
    throw domain_error("divisor orbit: form must be integral");
  }
  const MumfordDivisor v = validate_mumford(L, d.P, d.R);
  if (v.shares_root_with_g) {
    throw domain_error("divisor orbit: divisor shares a root with g (use the point construction)");
  }
  if (!v.integral) throw domain_error("divisor orbit: P and R must be integral");
  const int m = static_cast<int>(v.P.deg());
  if (m > n / 2) throw domain_error("divisor orbit: divisor degree must be at most g + 1");

  const AlgElement alpha = alg_make(L, v.P);
  const AlgElement relt = alg_make(L, v.R);
  std::vector<AlgElement> gens;
  for (const auto& u : If_basis_elements(L, 0)) gens.push_back(alg_mul(L, relt, u));
  for (const auto& u : If_basis_elements(L, (n - 3 - m) / 2)) {
    gens.push_back(alg_mul(L, alpha, u));
  }
  FractionalIdeal I = ideal_from_columns(L, columns_of(L, gens));
  const Rat s = Rat(rat_abs(resultant(v.P, v.R)) / pow_rat(rat_abs(L.f.f[0]), (n - 3 + m) / 2));
  if (s == 0) throw std::logic_error("divisor orbit: resolvent resultant vanished");
  SignedTriples out{OrbitTriple{I, alpha, s}, OrbitTriple{std::move(I), alpha, Rat(-s)}};
  triple_validate(L, out.plus);
  triple_validate(L, out.minus);
  return out;
}

QForm scaling_bridge_reduce(const QForm& f) {
  if (!binary_form_is_integral(f)) {
    throw domain_error("scaling bridge: form must be integral");
  }
  std::vector<Rat> coeffs;
  Rat p16(1);
  for (int i = f.n; i >= 0; --i) {
    const Rat r = Rat(f.f[static_cast<std::size_t>(i)] / p16);
    if (!is_integer(r)) {
      throw domain_error("scaling bridge: coefficient not divisible by 16^(n-i)");
    }
    coeffs.push_back(r);
    p16 = Rat(p16 * 16);
  }
  std::vector<Rat> leading_first(coeffs.rbegin(), coeffs.rend());
  return binary_form_make(f.n, std::move(leading_first));
}

QPencil scaling_bridge_step(const QPencil& p) {
  return pencil_make(mat_scale(p.A, Rat(4)), p.B);
}

std::optional<Rat> norm_condition_verify(const EtaleAlgebra& L, const AlgElement& alpha) {
  const Rat ratio = Rat(element_norm(L, alpha) / L.f.f[0]);
  if (ratio == 0 || !is_square(ratio)) return std::nullopt;
  return sqrt_exact(ratio);
}

NormConditionResult norm_condition_search(const EtaleAlgebra& L, long bound) {
  if (bound < 0) throw domain_error("norm condition: bound must be nonnegative");
  if (L.n % 2 == 0) {
    if (real_classification(L.f).definiteness == Definiteness::NegativeDefinite) {
      return NormConditionResult{NormConditionStatus::RefusedNegativeDefinite, std::nullopt, Rat(0)};
    }
  }
  const std::size_t n = static_cast<std::size_t>(L.n);
  std::vector<long> idx(n, -bound);
  for (;;) {
    std::vector<Rat> coords(n);
    for (std::size_t i = 0; i < n; ++i) coords[i] = Rat(idx[i]);
    const AlgElement alpha = alg_from_coords(L, coords);
    if (!alg_is_zero(alpha)) {
      if (auto r = norm_condition_verify(L, alpha)) {
        return NormConditionResult{NormConditionStatus::Witness, alpha, *r};
      }
    }
    // lexicographic odometer, last coordinate fastest
    std::size_t pos = n;
    while (pos > 0 && idx[pos - 1] == bound) {
      idx[pos - 1] = -bound;
      --pos;
    }
    if (pos == 0) break;
    ++idx[pos - 1];
  }
  return NormConditionResult{NormConditionStatus::AbsentWithinBound, std::nullopt, Rat(0)};
}

}  // namespace qpencil
