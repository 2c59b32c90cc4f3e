#pragma once

/// @file poly.hpp
/// Dense univariate polynomials over an exact field (Rat or FpElem).
///
/// Coefficients are stored lowest degree first and kept normalized (no
/// trailing zeros); the zero polynomial has an empty coefficient vector and
/// degree -1. Every operation is exact. Resultants use the Euclidean
/// remainder sequence with the classical correction factors, so they agree
/// with the Sylvester determinant; an independent Sylvester/Bareiss oracle
/// lives in the tests.

#include <algorithm>
#include <vector>

#include "qpencil/numeric.hpp"
#include "qpencil/prime_field.hpp"

namespace qpencil {

template <class K>
struct FieldOps;

template <>
struct FieldOps<Rat> {
  static Rat zero(const Rat&) { return Rat(0); }
  static Rat one(const Rat&) { return Rat(1); }
  static Rat from_long(long v, const Rat&) { return Rat(v); }
  static bool is_zero(const Rat& x) { return x == 0; }
  static Rat add(const Rat& a, const Rat& b) { return a + b; }
  static Rat sub(const Rat& a, const Rat& b) { return a - b; }
  static Rat mul(const Rat& a, const Rat& b) { return a * b; }
  static Rat neg(const Rat& a) { return -a; }
  static Rat inv(const Rat& a) {
    if (a == 0) throw domain_error("rational inverse of zero");
    return Rat(1) / a;
  }
  static bool eq(const Rat& a, const Rat& b) { return a == b; }
};

template <>
struct FieldOps<FpElem> {
  static FpElem zero(const FpElem& like) { return FpElem{0, like.p}; }
  static FpElem one(const FpElem& like) { return FpElem{1 % like.p, like.p}; }
  static FpElem from_long(long v, const FpElem& like) { return fp_reduce(Int(v), like.p); }
  static bool is_zero(const FpElem& x) { return x.v == 0; }
  static FpElem add(const FpElem& a, const FpElem& b) { return fp_add(a, b); }
  static FpElem sub(const FpElem& a, const FpElem& b) { return fp_sub(a, b); }
  static FpElem mul(const FpElem& a, const FpElem& b) { return fp_mul(a, b); }
  static FpElem neg(const FpElem& a) { return fp_neg(a); }
  static FpElem inv(const FpElem& a) { return fp_inv(a); }
  static bool eq(const FpElem& a, const FpElem& b) { return a == b; }
};

template <class K>
struct Poly {
  using Ops = FieldOps<K>;

  std::vector<K> c;  ///< ascending degree, normalized

  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize() {
    while (!c.empty() && Ops::is_zero(c.back())) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }

  const K& lc() const {
    if (c.empty()) throw domain_error("leading coefficient of the zero polynomial");
    return c.back();
  }

  /// Coefficient of x^i, with zeros implied past the end.
  K coeff(std::size_t i, const K& like) const {
    return i < c.size() ? c[i] : Ops::zero(like);
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (!Ops::eq(a.c[i], b.c[i])) return false;
    }
    return true;
  }
};

using QPoly = Poly<Rat>;
using FpPoly = Poly<FpElem>;

template <class K>
Poly<K> poly_constant(const K& value) {
  return Poly<K>({value});
}

/// x^k with the field context of `like`.
template <class K>
Poly<K> poly_monomial(std::size_t k, const K& like) {
  std::vector<K> c(k + 1, FieldOps<K>::zero(like));
  c[k] = FieldOps<K>::one(like);
  return Poly<K>(c);
}

template <class K>
Poly<K> poly_add(const Poly<K>& a, const Poly<K>& b) {
  using Ops = FieldOps<K>;
  std::vector<K> out;
  const std::size_t n = std::max(a.c.size(), b.c.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < a.c.size() && i < b.c.size()) {
      out.push_back(Ops::add(a.c[i], b.c[i]));
    } else if (i < a.c.size()) {
      out.push_back(a.c[i]);
    } else {
      out.push_back(b.c[i]);
    }
  }
  return Poly<K>(std::move(out));
}

template <class K>
Poly<K> poly_neg(const Poly<K>& a) {
  using Ops = FieldOps<K>;
  std::vector<K> out = a.c;
  for (auto& x : out) x = Ops::neg(x);
  return Poly<K>(std::move(out));
}

template <class K>
Poly<K> poly_sub(const Poly<K>& a, const Poly<K>& b) {
  return poly_add(a, poly_neg(b));
}

template <class K>
Poly<K> poly_scale(const Poly<K>& a, const K& s) {
  using Ops = FieldOps<K>;
  std::vector<K> out = a.c;
  for (auto& x : out) x = Ops::mul(x, s);
  return Poly<K>(std::move(out));
}

template <class K>
Poly<K> poly_mul(const Poly<K>& a, const Poly<K>& b) {
  using Ops = FieldOps<K>;
  if (a.is_zero() || b.is_zero()) return Poly<K>();
  std::vector<K> out(a.c.size() + b.c.size() - 1, Ops::zero(a.c[0]));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      out[i + j] = Ops::add(out[i + j], Ops::mul(a.c[i], b.c[j]));
    }
  }
  return Poly<K>(std::move(out));
}

template <class K>
struct PolyDivMod {
  Poly<K> quot;
  Poly<K> rem;
};

template <class K>
PolyDivMod<K> poly_divmod(const Poly<K>& a, const Poly<K>& b) {
  using Ops = FieldOps<K>;
  if (b.is_zero()) throw domain_error("polynomial division by zero");
  if (a.deg() < b.deg()) return {Poly<K>(), a};
  const K lcb_inv = Ops::inv(b.lc());
  std::vector<K> rem = a.c;
  std::vector<K> quot(a.c.size() - b.c.size() + 1, Ops::zero(b.lc()));
  for (int k = a.deg() - b.deg(); k >= 0; --k) {
    K q = Ops::mul(rem[k + b.deg()], lcb_inv);
    quot[k] = q;
    if (!Ops::is_zero(q)) {
      for (std::size_t j = 0; j < b.c.size(); ++j) {
        rem[k + j] = Ops::sub(rem[k + j], Ops::mul(q, b.c[j]));
      }
    }
  }
  return {Poly<K>(std::move(quot)), Poly<K>(std::move(rem))};
}

template <class K>
Poly<K> poly_mod(const Poly<K>& a, const Poly<K>& b) {
  return poly_divmod(a, b).rem;
}

/// Division known to be exact; throws if a remainder appears.
template <class K>
Poly<K> poly_divexact(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw domain_error("poly_divexact: division leaves a remainder");
  return q;
}

template <class K>
Poly<K> poly_monic(const Poly<K>& a) {
  using Ops = FieldOps<K>;
  if (a.is_zero()) return a;
  return poly_scale(a, Ops::inv(a.lc()));
}

/// Monic gcd via the Euclidean algorithm.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

/// Extended gcd: returns (g, u, v) monic with u*a + v*b = g.
template <class K>
struct PolyXgcd {
  Poly<K> g, u, v;
};

template <class K>
PolyXgcd<K> poly_xgcd(const Poly<K>& a, const Poly<K>& b) {
  using Ops = FieldOps<K>;
  if (a.is_zero() && b.is_zero()) throw domain_error("poly_xgcd of two zero polynomials");
  const K one = Ops::one(a.is_zero() ? b.lc() : a.lc());
  Poly<K> r0 = a, r1 = b;
  Poly<K> u0 = poly_constant(one), u1;
  Poly<K> v0, v1 = poly_constant(one);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly<K> u2 = poly_sub(u0, poly_mul(q, u1));
    Poly<K> v2 = poly_sub(v0, poly_mul(q, v1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  const K s = Ops::inv(r0.lc());
  return {poly_scale(r0, s), poly_scale(u0, s), poly_scale(v0, s)};
}

template <class K>
K poly_eval(const Poly<K>& a, const K& x) {
  using Ops = FieldOps<K>;
  K acc = Ops::zero(x);
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) {
    acc = Ops::add(Ops::mul(acc, x), *it);
  }
  return acc;
}

template <class K>
Poly<K> poly_derivative(const Poly<K>& a) {
  using Ops = FieldOps<K>;
  if (a.deg() < 1) return Poly<K>();
  std::vector<K> out;
  out.reserve(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    K mult = Ops::zero(a.c[i]);
    const K one = Ops::one(a.c[i]);
    for (std::size_t k = 0; k < i; ++k) mult = Ops::add(mult, one);
    out.push_back(Ops::mul(a.c[i], mult));
  }
  return Poly<K>(std::move(out));
}

/// Substitution a(b(x)) by Horner's rule.
template <class K>
Poly<K> poly_compose(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> acc;
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) {
    acc = poly_add(poly_mul(acc, b), poly_constant(*it));
  }
  return acc;
}

/// base^e mod m, with an arbitrary-precision exponent.
template <class K>
Poly<K> poly_powmod(Poly<K> base, Int e, const Poly<K>& m) {
  using Ops = FieldOps<K>;
  if (e < 0) throw domain_error("poly_powmod: negative exponent");
  if (m.deg() < 1) throw domain_error("poly_powmod: modulus must have degree >= 1");
  Poly<K> result = poly_constant(Ops::one(m.lc()));
  base = poly_mod(base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = poly_mod(poly_mul(result, base), m);
    base = poly_mod(poly_mul(base, base), m);
    e >>= 1;
  }
  return result;
}

template <class K>
K k_pow(const K& a, std::size_t e) {
  using Ops = FieldOps<K>;
  K r = Ops::one(a);
  for (std::size_t i = 0; i < e; ++i) r = Ops::mul(r, a);
  return r;
}

/// Resultant Res(a, b) matching the Sylvester determinant convention:
/// Res(a,b) = lc(a)^{deg b} lc(b)^{deg a} prod(alpha_i - beta_j).
template <class K>
K resultant(const Poly<K>& a, const Poly<K>& b) {
  using Ops = FieldOps<K>;
  if (a.is_zero() || b.is_zero()) {
    throw domain_error("resultant: arguments must be nonzero");
  }
  const K one = Ops::one(a.lc());
  Poly<K> f = a, g = b;
  K acc = one;
  bool negate = false;
  if (f.deg() < g.deg()) {
    if ((f.deg() * g.deg()) % 2 == 1) negate = !negate;
    std::swap(f, g);
  }
  while (g.deg() > 0) {
    Poly<K> r = poly_mod(f, g);
    if (r.is_zero()) return Ops::zero(one);  // common factor of positive degree
    acc = Ops::mul(acc, k_pow(g.lc(), static_cast<std::size_t>(f.deg() - r.deg())));
    if ((f.deg() * g.deg()) % 2 == 1) negate = !negate;
    f = std::move(g);
    g = std::move(r);
  }
  // g is a nonzero constant: Res(f, c) = c^{deg f}.
  acc = Ops::mul(acc, k_pow(g.lc(), static_cast<std::size_t>(f.deg())));
  return negate ? Ops::neg(acc) : acc;
}

/// disc(a) = (-1)^{d(d-1)/2} Res(a, a') / lc(a), d = deg a >= 1.
template <class K>
K poly_discriminant(const Poly<K>& a) {
  using Ops = FieldOps<K>;
  if (a.deg() < 1) throw domain_error("poly_discriminant: degree must be >= 1");
  Poly<K> d = poly_derivative(a);
  K res = d.is_zero() ? Ops::zero(a.lc()) : resultant(a, d);
  K out = Ops::mul(res, Ops::inv(a.lc()));
  const int e = (a.deg() * (a.deg() - 1) / 2) % 2;
  return e ? Ops::neg(out) : out;
}

// --- Rational-specific helpers -------------------------------------------

/// True iff every coefficient is an integer.
bool poly_is_integral(const QPoly& a);

/// Smallest positive d with d*a integral, and the scaled polynomial.
struct IntegralScaled {
  QPoly poly;
  Int den;
};
IntegralScaled poly_clear_denominators(const QPoly& a);

/// Reduce an integral polynomial mod p.
FpPoly poly_to_fp(const QPoly& a, std::uint64_t p);

/// Lift an F_p polynomial to integer coefficients in [0, p).
QPoly poly_from_fp(const FpPoly& a);

QPoly poly_from_ints(const std::vector<Int>& ascending);

/// Number of distinct real roots in (a, b], or over all of R.
/// Requires a squarefree polynomial (throws otherwise).
int sturm_real_root_count(const QPoly& f);
int sturm_real_root_count(const QPoly& f, const Rat& a, const Rat& b);

/// All rational roots of an integral polynomial (exact, via divisor scan
/// of trailing/leading coefficients + evaluation).
std::vector<Rat> rational_roots(const QPoly& f);

}  // namespace qpencil
