#pragma once

/// @file binary_form.hpp
/// Binary n-ic forms f(x,y) = f_0 x^n + f_1 x^{n-1} y + ... + f_n y^n with
/// exact coefficients, GL_2 substitutions, the discriminant in the fixed
/// normalization below, and the real component label (m, tau).
///
/// Discriminant normalization: when f_0 != 0,
///   disc(f) = (-1)^{n(n-1)/2} Res(f(x,1), d/dx f(x,1)) / f_0.
/// When f_0 = 0 the value is defined by covariance under unimodular
/// substitutions, disc(f o gamma) = det(gamma)^{n(n-1)} disc(f), which is
/// well defined because n(n-1) is even.

#include <cstdint>
#include <vector>

#include "qpencil/matrix.hpp"
#include "qpencil/numeric.hpp"
#include "qpencil/poly.hpp"

namespace qpencil {

template <class K>
struct BinaryForm {
  int n = 0;         ///< degree
  std::vector<K> f;  ///< length n+1, leading coefficient f[0] first
};

using QForm = BinaryForm<Rat>;
using FpForm = BinaryForm<FpElem>;

/// Builds a degree-n form, checking the coefficient count.
template <class K>
BinaryForm<K> binary_form_make(int n, std::vector<K> coeffs) {
  if (n < 1) throw domain_error("binary form: degree must be >= 1");
  if (coeffs.size() != static_cast<std::size_t>(n) + 1) {
    throw domain_error("binary form: need exactly n+1 coefficients");
  }
  return BinaryForm<K>{n, std::move(coeffs)};
}

template <class K>
bool form_is_zero(const BinaryForm<K>& f) {
  for (const auto& c : f.f) {
    if (!FieldOps<K>::is_zero(c)) return false;
  }
  return true;
}

template <class K>
bool operator==(const BinaryForm<K>& a, const BinaryForm<K>& b) {
  if (a.n != b.n) return false;
  for (std::size_t i = 0; i < a.f.size(); ++i) {
    if (!FieldOps<K>::eq(a.f[i], b.f[i])) return false;
  }
  return true;
}

template <class K>
K binary_form_eval(const BinaryForm<K>& f, const K& x, const K& y) {
  using Ops = FieldOps<K>;
  // Horner in x with running powers of y.
  K acc = Ops::zero(x);
  for (int i = 0; i <= f.n; ++i) acc = Ops::add(Ops::mul(acc, x), Ops::mul(f.f[static_cast<std::size_t>(i)], k_pow(y, static_cast<std::size_t>(i))));
  return acc;
}

/// Dehomogenization f(x, 1) as a polynomial (ascending coefficients).
template <class K>
Poly<K> binary_to_poly(const BinaryForm<K>& f) {
  std::vector<K> c(f.f.rbegin(), f.f.rend());
  return Poly<K>(std::move(c));
}

/// Homogenizes p to a degree-n form (requires deg p <= n).
template <class K>
BinaryForm<K> binary_from_poly(const Poly<K>& p, int n, const K& like) {
  using Ops = FieldOps<K>;
  if (p.deg() > n) throw domain_error("binary_from_poly: polynomial degree exceeds n");
  std::vector<K> coeffs(static_cast<std::size_t>(n) + 1, Ops::zero(like));
  for (int i = 0; i <= p.deg(); ++i) {
    coeffs[static_cast<std::size_t>(n - i)] = p.c[static_cast<std::size_t>(i)];
  }
  return binary_form_make(n, std::move(coeffs));
}

/// Substitution f(gamma (x,y)^T): with gamma = [[a,b],[c,d]] this is
/// f(a x + b y, c x + d y). Composition law: (f o g1) o g2 = f o (g1 g2).
template <class K>
BinaryForm<K> gl2_transform(const BinaryForm<K>& f, const Mat<K>& gamma) {
  using Ops = FieldOps<K>;
  if (gamma.rows != 2 || gamma.cols != 2) throw domain_error("gl2_transform: need a 2x2 matrix");
  if (Ops::is_zero(mat_det(gamma))) throw domain_error("gl2_transform: singular substitution");
  const K like = gamma.a[0];
  const K zero = Ops::zero(like);
  // pow1[j] = coefficients of (a x + b y)^j, pow2[j] of (c x + d y)^j,
  // both leading-first (index k = coefficient of x^{j-k} y^k).
  auto conv = [&](const std::vector<K>& u, const std::vector<K>& v) {
    std::vector<K> out(u.size() + v.size() - 1, zero);
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        out[i + j] = Ops::add(out[i + j], Ops::mul(u[i], v[j]));
      }
    }
    return out;
  };
  const std::vector<K> lin1{gamma.at(0, 0), gamma.at(0, 1)};
  const std::vector<K> lin2{gamma.at(1, 0), gamma.at(1, 1)};
  std::vector<std::vector<K>> pow1{{Ops::one(like)}}, pow2{{Ops::one(like)}};
  for (int j = 1; j <= f.n; ++j) {
    pow1.push_back(conv(pow1.back(), lin1));
    pow2.push_back(conv(pow2.back(), lin2));
  }
  std::vector<K> out(static_cast<std::size_t>(f.n) + 1, zero);
  for (int i = 0; i <= f.n; ++i) {
    if (Ops::is_zero(f.f[static_cast<std::size_t>(i)])) continue;
    auto term = conv(pow1[static_cast<std::size_t>(f.n - i)], pow2[static_cast<std::size_t>(i)]);
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = Ops::add(out[k], Ops::mul(f.f[static_cast<std::size_t>(i)], term[k]));
    }
  }
  return binary_form_make(f.n, std::move(out));
}

/// disc(f) in the normalization documented at the top of this header.
/// The generic implementation is valid over fields of characteristic zero;
/// the F_p overload below evaluates the same universal integer polynomial by
/// lifting to Z and reducing, which sidesteps characteristic-p derivative
/// degree drops.
template <class K>
K binary_discriminant(const BinaryForm<K>& f) {
  using Ops = FieldOps<K>;
  if (form_is_zero(f)) throw domain_error("binary_discriminant: zero form");
  const K like = f.f[0];
  if (!Ops::is_zero(f.f[0])) {
    return poly_discriminant(binary_to_poly(f));
  }
  // Leading coefficient vanishes: substitute (x,y) -> (x, kx+y), which has
  // determinant 1 and new leading coefficient f(1,k); over an infinite field
  // some k in 1..n works because f(1,y) is a nonzero polynomial of degree
  // <= n with f(1,0) = 0 already excluded.
  for (int k = 1; k <= f.n; ++k) {
    const K kk = Ops::from_long(k, like);
    if (!Ops::is_zero(binary_form_eval(f, Ops::one(like), kk))) {
      Mat<K> gamma(2, 2, Ops::zero(like));
      gamma.at(0, 0) = Ops::one(like);
      gamma.at(1, 0) = kk;
      gamma.at(1, 1) = Ops::one(like);
      return binary_discriminant(gl2_transform(f, gamma));
    }
  }
  throw std::logic_error("binary_discriminant: no unit value over an infinite field");
}

/// F_p discriminant: the universal integer discriminant of a lift, reduced
/// mod p. (A direct resultant over F_p would be wrong whenever the
/// characteristic-p derivative drops degree.)
FpElem binary_discriminant(const FpForm& f);

// --- Rational-coefficient helpers ------------------------------------------

bool binary_form_is_integral(const QForm& f);

/// max |f_i| for an integral form.
Int form_height(const QForm& f);

FpForm form_to_fp(const QForm& f, std::uint64_t p);
QForm form_from_fp(const FpForm& f);
QForm form_from_ints(const std::vector<Int>& leading_first);

/// Real component data for an even-degree form with disc != 0 and f_0 != 0:
/// f(x,1) has 2m real roots, and tau ranges over tau_class_count(m, n)
/// classes of sign assignments.
struct ComponentLabel {
  int m = 0;
  Int tau_count;
};

ComponentLabel real_component_label(const QForm& f);

/// Number of tau classes: 2^{2m-2} for m > 1, 1 for m = 1; for m = 0 it is
/// 2 when n = 0 (mod 4) and 1 when n = 2 (mod 4).
Int tau_class_count(int m, int n);

/// Canonical representatives of the tau classes for m >= 1: sign vectors
/// s in {+-1}^{2m} with product equal to lead_sign, taken modulo global
/// negation by fixing s[0] = +1. Empty for m = 0.
std::vector<std::vector<int>> tau_sign_classes(int m, int lead_sign);

}  // namespace qpencil
