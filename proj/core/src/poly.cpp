#include "qpencil/poly.hpp"

#include <algorithm>

namespace qpencil {

bool poly_is_integral(const QPoly& a) {
  return std::all_of(a.c.begin(), a.c.end(), [](const Rat& x) { return is_integer(x); });
}

IntegralScaled poly_clear_denominators(const QPoly& a) {
  Int den(1);
  for (const auto& x : a.c) den = lcm(den, Int(x.get_den()));
  return {poly_scale(a, Rat(den)), den};
}

FpPoly poly_to_fp(const QPoly& a, std::uint64_t p) {
  std::vector<FpElem> c;
  c.reserve(a.c.size());
  for (const auto& x : a.c) {
    if (!is_integer(x)) {
      throw domain_error("poly_to_fp: coefficient " + x.get_str() + " is not integral");
    }
    c.push_back(fp_reduce(Int(x.get_num()), p));
  }
  return FpPoly(std::move(c));
}

QPoly poly_from_fp(const FpPoly& a) {
  std::vector<Rat> c;
  c.reserve(a.c.size());
  for (const auto& x : a.c) c.emplace_back(static_cast<unsigned long>(x.v));
  return QPoly(std::move(c));
}

QPoly poly_from_ints(const std::vector<Int>& ascending) {
  std::vector<Rat> c;
  c.reserve(ascending.size());
  for (const auto& x : ascending) c.emplace_back(x);
  return QPoly(std::move(c));
}

namespace {

std::vector<QPoly> sturm_chain(const QPoly& f) {
  std::vector<QPoly> chain{f, poly_derivative(f)};
  while (!chain.back().is_zero() && chain.back().deg() > 0) {
    QPoly r = poly_neg(poly_mod(chain[chain.size() - 2], chain.back()));
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

void require_squarefree(const QPoly& f) {
  if (f.deg() < 1) throw domain_error("sturm: degree must be >= 1");
  if (poly_gcd(f, poly_derivative(f)).deg() > 0) {
    throw domain_error("sturm: polynomial is not squarefree");
  }
}

}  // namespace

int sturm_real_root_count(const QPoly& f) {
  require_squarefree(f);
  auto chain = sturm_chain(f);
  std::vector<int> at_minus, at_plus;
  for (const auto& p : chain) {
    if (p.is_zero()) continue;
    const int lc_sign = sign(p.lc());
    at_plus.push_back(lc_sign);
    at_minus.push_back(p.deg() % 2 == 0 ? lc_sign : -lc_sign);
  }
  return variations(at_minus) - variations(at_plus);
}

int sturm_real_root_count(const QPoly& f, const Rat& a, const Rat& b) {
  require_squarefree(f);
  if (!(a < b)) throw domain_error("sturm: empty interval");
  if (poly_eval(f, a) == 0 || poly_eval(f, b) == 0) {
    throw domain_error("sturm: interval endpoint is a root");
  }
  auto chain = sturm_chain(f);
  std::vector<int> at_a, at_b;
  for (const auto& p : chain) {
    if (p.is_zero()) continue;
    at_a.push_back(sign(poly_eval(p, a)));
    at_b.push_back(sign(poly_eval(p, b)));
  }
  return variations(at_a) - variations(at_b);
}

namespace {

/// All positive divisors of |v|; throws if |v| resists small-prime factoring
/// or has too many divisors to enumerate.
std::vector<Int> positive_divisors(Int v) {
  if (v < 0) v = -v;
  if (v == 0) throw domain_error("divisors of zero requested");
  std::vector<std::pair<Int, unsigned>> fac;
  Int rest = v;
  for (Int p(2); p * p <= rest && p < (1 << 20); p += (p == 2 ? 1 : 2)) {
    if (rest % p == 0) {
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      fac.emplace_back(p, e);
    }
  }
  if (rest > 1) {
    if (mpz_probab_prime_p(rest.get_mpz_t(), 30) == 0) {
      throw domain_error("rational_roots: coefficient too large to factor exactly");
    }
    fac.emplace_back(rest, 1);
  }
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : fac) {
    const std::size_t base = divs.size();
    if (base * (e + 1) > (1u << 16)) {
      throw domain_error("rational_roots: too many divisors to enumerate");
    }
    Int pe(1);
    for (unsigned k = 1; k <= e; ++k) {
      pe *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rat> rational_roots(const QPoly& f) {
  if (f.is_zero()) throw domain_error("rational_roots: zero polynomial");
  QPoly g = poly_clear_denominators(f).poly;
  std::vector<Rat> roots;
  // Strip powers of x.
  std::size_t k = 0;
  while (k < g.c.size() && g.c[k] == 0) ++k;
  if (k > 0) {
    roots.emplace_back(0);
    g = QPoly(std::vector<Rat>(g.c.begin() + static_cast<long>(k), g.c.end()));
  }
  if (g.deg() < 1) return roots;
  const Int a0 = to_int(g.c.front());
  const Int an = to_int(g.lc());
  for (const Int& p : positive_divisors(a0)) {
    for (const Int& q : positive_divisors(an)) {
      if (gcd(p, q) != 1) continue;
      for (int s : {1, -1}) {
        Rat cand(s * p, q);
        cand.canonicalize();
        if (poly_eval(g, cand) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace qpencil
