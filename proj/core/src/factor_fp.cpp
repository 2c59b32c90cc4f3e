#include "qpencil/factor_fp.hpp"

#include <algorithm>
#include <random>

namespace qpencil {

namespace {

bool factor_less(const FpFactor& a, const FpFactor& b) {
  if (a.factor.deg() != b.factor.deg()) return a.factor.deg() < b.factor.deg();
  for (int i = a.factor.deg(); i >= 0; --i) {
    const auto av = a.factor.c[static_cast<std::size_t>(i)].v;
    const auto bv = b.factor.c[static_cast<std::size_t>(i)].v;
    if (av != bv) return av < bv;
  }
  return a.multiplicity < b.multiplicity;
}

FpPoly random_poly(int max_deg, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<FpElem> c;
  c.reserve(static_cast<std::size_t>(max_deg) + 1);
  for (int i = 0; i <= max_deg; ++i) {
    c.push_back(FpElem{rng() % p, p});
  }
  return FpPoly(std::move(c));
}

/// Splits a monic squarefree product of r >= 1 irreducibles, all of degree d.
void equal_degree_split(const FpPoly& f, int d, std::mt19937_64& rng,
                        std::vector<FpPoly>& out) {
  if (f.deg() == d) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = f.lc().p;
  const Int q = Int(static_cast<unsigned long>(p));
  Int e = (pow_int(q, static_cast<unsigned long>(d)) - 1) / 2;
  const FpElem one{1 % p, p};
  for (;;) {
    FpPoly t = random_poly(f.deg() - 1, p, rng);
    if (t.deg() < 1) continue;
    FpPoly g = poly_gcd(t, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(poly_divexact(f, g), d, rng, out);
      return;
    }
    FpPoly h = poly_powmod(t, e, f);  // t^((q^d-1)/2) mod f
    h = poly_sub(h, poly_constant(one));
    g = poly_gcd(h, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(poly_divexact(f, g), d, rng, out);
      return;
    }
  }
}

/// Distinct-degree split of a monic squarefree f; emits (factor product, d).
void distinct_degree(const FpPoly& f, std::mt19937_64& rng,
                     std::vector<FpPoly>& out) {
  const std::uint64_t p = f.lc().p;
  const Int q = Int(static_cast<unsigned long>(p));
  FpPoly rest = f;
  FpPoly h = poly_monomial<FpElem>(1, f.lc());  // x
  FpPoly x = h;
  int d = 0;
  while (rest.deg() > 0) {
    ++d;
    if (2 * d > rest.deg()) {
      // What remains is a single irreducible factor.
      out.push_back(rest);
      break;
    }
    h = poly_powmod(h, q, rest);  // x^(q^d) mod rest
    FpPoly g = poly_gcd(poly_sub(h, x), rest);
    if (g.deg() > 0) {
      equal_degree_split(g, d, rng, out);
      rest = poly_divexact(rest, g);
      h = poly_mod(h, rest);
    }
  }
}

/// Squarefree decomposition in characteristic p; appends (g_i, mult) pairs
/// with g_i monic squarefree and pairwise coprime.
void squarefree_decompose(const FpPoly& f, int mult,
                          std::vector<std::pair<FpPoly, int>>& out) {
  const std::uint64_t p = f.lc().p;
  FpPoly fp = poly_derivative(f);
  if (fp.is_zero()) {
    // f = v(x^p); over F_p the coefficients are their own p-th roots.
    std::vector<FpElem> v;
    for (std::size_t i = 0; i < f.c.size(); i += static_cast<std::size_t>(p)) {
      v.push_back(f.c[i]);
    }
    squarefree_decompose(FpPoly(std::move(v)), mult * static_cast<int>(p), out);
    return;
  }
  FpPoly c = poly_gcd(f, fp);
  FpPoly w = poly_divexact(f, c);
  int i = 1;
  while (w.deg() > 0) {
    FpPoly y = poly_gcd(w, c);
    FpPoly z = poly_divexact(w, y);
    if (z.deg() > 0) out.emplace_back(poly_monic(z), mult * i);
    w = std::move(y);
    c = poly_divexact(c, w);
    ++i;
  }
  // Leftover c collects the factors whose multiplicity is divisible by p;
  // it has zero derivative, so the recursion takes its p-th root and scales.
  if (c.deg() > 0) squarefree_decompose(poly_monic(c), mult, out);
}

}  // namespace

FpFactorization factor_prime_field(const FpPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw domain_error("factor_prime_field: zero polynomial");
  FpFactorization result;
  result.unit = f.lc();
  if (f.deg() == 0) return result;

  std::mt19937_64 rng(seed);
  FpPoly monic = poly_monic(f);

  std::vector<std::pair<FpPoly, int>> squarefree_parts;
  squarefree_decompose(monic, 1, squarefree_parts);

  for (const auto& [part, mult] : squarefree_parts) {
    std::vector<FpPoly> irreducibles;
    distinct_degree(part, rng, irreducibles);
    for (auto& irr : irreducibles) {
      result.factors.push_back(FpFactor{poly_monic(irr), mult});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), factor_less);
  return result;
}

FpPoly factorization_product(const FpFactorization& fac) {
  FpPoly acc = poly_constant(fac.unit);
  for (const auto& [factor, mult] : fac.factors) {
    for (int i = 0; i < mult; ++i) acc = poly_mul(acc, factor);
  }
  return acc;
}

bool fp_poly_irreducible(const FpPoly& f, std::uint64_t seed) {
  if (f.deg() < 1) throw domain_error("fp_poly_irreducible: degree must be >= 1");
  FpFactorization fac = factor_prime_field(f, seed);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace qpencil
