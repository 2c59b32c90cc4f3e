#include "qpencil/census.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "qpencil/factor_fp.hpp"
#include "qpencil/pencil.hpp"
#include "qpencil/prime_field.hpp"

namespace qpencil {

namespace {

/// Orbit count exponent shared by count and stabilizer: with m distinct
/// irreducible factors, 2^m / 2^{m-1} / 2^{m-2} by parity profile.
int trichotomy_exponent(int n, const std::vector<int>& factor_degrees) {
  bool some_odd = false;
  for (int d : factor_degrees) {
    if (d % 2 != 0) some_odd = true;
  }
  const int m = static_cast<int>(factor_degrees.size());
  if (some_odd) return m - 2;  // odd-degree factors come in pairs, so m >= 2
  return n % 4 == 0 ? m : m - 1;
}

bool rat_is_square(const Rat& z) {
  if (z < 0) return false;
  return is_square(Int(z.get_num())) && is_square(Int(z.get_den()));
}

/// Whether a quartic with no rational roots splits into two rational
/// quadratic factors. Decided through the resolvent cubic of the depressed
/// quartic y^4 + p y^2 + q y + r: a splitting (y^2+uy+v)(y^2-uy+w) with
/// u != 0 forces z = u^2 to be a rational square root of
/// z^3 + 2p z^2 + (p^2-4r) z - q^2, and a splitting with u = 0 forces q = 0
/// and p^2 - 4r to be a rational square; both directions are exact.
bool quartic_splits_into_quadratics(const QPoly& tail) {
  QPoly t = poly_monic(tail);
  const Rat p3 = t.c[3];
  QPoly shift(std::vector<Rat>{Rat(-p3 / 4), Rat(1)});
  QPoly d = poly_compose(t, shift);
  if (!(d.c[3] == 0)) throw std::logic_error("quartic split: depression failed");
  const Rat p = d.c[2];
  const Rat q = d.c[1];
  const Rat r = d.c[0];
  QPoly resolvent(std::vector<Rat>{Rat(-q * q), Rat(p * p - 4 * r), Rat(2 * p), Rat(1)});
  for (const Rat& z : rational_roots(resolvent)) {
    if (z == 0) {
      if (rat_is_square(Rat(p * p - 4 * r))) return true;
    } else if (z > 0 && rat_is_square(z)) {
      return true;
    }
  }
  return false;
}

EvenOddCount count_from_degrees(const std::vector<int>& degs, bool complete) {
  EvenOddCount out;
  bool some_odd = false;
  for (int d : degs) {
    if (d % 2 != 0) some_odd = true;
  }
  out.odd_exists = some_odd;
  out.complete = complete;
  const unsigned long m = degs.size();
  out.even_count = pow_int(Int(2), some_odd ? m - 1 : m);
  return out;
}

}  // namespace

Int sl_group_order(int n, const Int& q) {
  if (n < 1 || q < 2) throw domain_error("sl_group_order: need n >= 1 and q >= 2");
  Int res = pow_int(q, static_cast<unsigned long>(n) * static_cast<unsigned long>(n - 1) / 2);
  for (int i = 2; i <= n; ++i) {
    res *= Int(pow_int(q, static_cast<unsigned long>(i)) - 1);
  }
  return res;
}

CensusReport census_Fq(const FpForm& f) {
  if (f.n < 2 || f.n % 2 != 0) {
    throw domain_error("census: degree must be even and >= 2");
  }
  if (fp_is_zero(f.f[0])) throw domain_error("census: leading coefficient is zero");
  if (fp_is_zero(binary_discriminant(f))) throw domain_error("census: discriminant is zero");

  CensusReport rep;
  rep.q = f.f[0].p;
  rep.f = f;
  const FpFactorization fac = factor_prime_field(binary_to_poly(f));
  for (const FpFactor& piece : fac.factors) {
    if (piece.multiplicity != 1) {
      throw std::logic_error("census: repeated factor despite nonzero discriminant");
    }
    rep.factor_degrees.push_back(piece.factor.deg());
  }
  std::sort(rep.factor_degrees.begin(), rep.factor_degrees.end());

  const int e = trichotomy_exponent(f.n, rep.factor_degrees);
  rep.orbit_count = pow_int(Int(2), static_cast<unsigned long>(e));
  rep.stabilizer_size = rep.orbit_count;
  const Int sl = sl_group_order(f.n, Int(static_cast<unsigned long>(rep.q)));
  rep.mass = Int(rep.orbit_count * sl / rep.stabilizer_size);
  return rep;
}

Int stabilizer_size_field(const FpForm& f) { return census_Fq(f).stabilizer_size; }

Int stabilizer_size_field(const QForm& f) { return real_classification(f).stabilizer_size; }

RealClassReport real_classification(const QForm& f) {
  if (f.n < 2 || f.n % 2 != 0) {
    throw domain_error("real classification: degree must be even and >= 2");
  }
  if (f.f[0] == 0) throw domain_error("real classification: leading coefficient is zero");
  if (binary_discriminant(f) == 0) {
    throw domain_error("real classification: discriminant is zero");
  }

  RealClassReport rep;
  rep.r1 = sturm_real_root_count(binary_to_poly(f));
  rep.r2 = (f.n - rep.r1) / 2;
  rep.m = rep.r1 / 2;
  const int half = f.n / 2;
  if (rep.r1 == 0) {
    const bool positive = f.f[0] > 0;
    rep.definiteness = positive ? Definiteness::PositiveDefinite : Definiteness::NegativeDefinite;
    rep.stabilizer_size =
        pow_int(Int(2), static_cast<unsigned long>(f.n % 4 == 0 ? half : half - 1));
    if (positive) {
      rep.orbit_count = f.n % 4 == 0 ? Int(2) : Int(1);
      rep.soluble_count = rep.orbit_count;
    } else {
      rep.orbit_count = 0;
      rep.soluble_count = 0;
    }
  } else {
    rep.definiteness = Definiteness::Indefinite;
    rep.orbit_count = pow_int(Int(2), static_cast<unsigned long>(rep.r1 - 2));
    rep.soluble_count = pow_int(Int(2), static_cast<unsigned long>(rep.m - 1));
    rep.stabilizer_size = pow_int(Int(2), static_cast<unsigned long>(half + rep.m - 2));
  }
  return rep;
}

EvenOddCount even_odd_factorization_count(const FpForm& f) {
  if (fp_is_zero(binary_discriminant(f))) {
    throw domain_error("even_odd_factorization_count: discriminant is zero");
  }
  std::vector<int> degs;
  if (fp_is_zero(f.f[0])) degs.push_back(1);  // the linear factor vanishing at infinity
  const FpPoly p = binary_to_poly(f);
  if (p.deg() >= 1) {
    for (const FpFactor& piece : factor_prime_field(p).factors) {
      degs.push_back(piece.factor.deg());
    }
  }
  return count_from_degrees(degs, true);
}

EvenOddCount even_odd_factorization_count(const QForm& f) {
  if (binary_discriminant(f) == 0) {
    throw domain_error("even_odd_factorization_count: discriminant is zero");
  }
  std::vector<int> degs;
  if (f.f[0] == 0) degs.push_back(1);  // the linear factor vanishing at infinity
  QPoly p = binary_to_poly(f);
  bool complete = true;

  std::vector<Rat> roots;
  bool roots_known = true;
  try {
    roots = rational_roots(p);
  } catch (const domain_error&) {
    roots_known = false;  // coefficients too large to factor; keep one block
  }
  if (!roots_known) {
    if (p.deg() >= 1) degs.push_back(p.deg());
    return count_from_degrees(degs, false);
  }
  for (const Rat& r : roots) {
    degs.push_back(1);
    p = poly_divexact(p, QPoly(std::vector<Rat>{Rat(-r), Rat(1)}));
  }

  // Root-free tail: degree 2 and 3 tails are irreducible, a degree 4 tail
  // either splits into two quadratics or is irreducible, and a tail of
  // degree >= 5 is kept as a single unresolved block.
  const int d = p.deg();
  if (d == 2 || d == 3) {
    degs.push_back(d);
  } else if (d == 4) {
    bool split = false;
    bool decided = true;
    try {
      split = quartic_splits_into_quadratics(p);
    } catch (const domain_error&) {
      decided = false;
    }
    if (!decided) {
      degs.push_back(4);
      complete = false;
    } else if (split) {
      degs.push_back(2);
      degs.push_back(2);
    } else {
      degs.push_back(4);
    }
  } else if (d >= 5) {
    degs.push_back(d);
    complete = false;
  }
  return count_from_degrees(degs, complete);
}

namespace {

FpMat decode_symmetric(std::uint32_t s, std::uint64_t q) {
  const FpElem a00 = fp_make(s % q, q);
  const FpElem a01 = fp_make((s / q) % q, q);
  const FpElem a11 = fp_make(s / (q * q), q);
  FpMat m(2, 2, a00);
  m.at(0, 1) = a01;
  m.at(1, 0) = a01;
  m.at(1, 1) = a11;
  return m;
}

std::uint32_t encode_symmetric(const FpMat& m, std::uint64_t q) {
  return static_cast<std::uint32_t>(m.at(0, 0).v + q * m.at(0, 1).v + q * q * m.at(1, 1).v);
}

}  // namespace

std::vector<BruteOrbitRow> brute_force_census_n2(std::uint64_t q) {
  if (q != 3 && q != 5) throw domain_error("brute force census: q must be 3 or 5");
  const std::uint32_t q3 = static_cast<std::uint32_t>(q * q * q);
  const std::uint32_t q6 = q3 * q3;

  // Invariant form of every pair, keyed so that ascending key order is
  // lexicographic in (f0, f1, f2).
  std::vector<std::uint32_t> form_of_pair(q6);
  std::vector<std::vector<std::uint32_t>> pairs_by_form(q3);
  for (std::uint32_t ia = 0; ia < q3; ++ia) {
    const FpMat A = decode_symmetric(ia, q);
    for (std::uint32_t ib = 0; ib < q3; ++ib) {
      const FpMat B = decode_symmetric(ib, q);
      const FpForm f = invariant_form(pencil_make(A, B));
      const std::uint32_t key =
          static_cast<std::uint32_t>((f.f[0].v * q + f.f[1].v) * q + f.f[2].v);
      const std::uint32_t pair = ia * q3 + ib;
      form_of_pair[pair] = key;
      pairs_by_form[key].push_back(pair);
    }
  }

  // One representative per class of the projective unimodular group: scale
  // each invertible 2x2 matrix so its first nonzero entry is 1, and pair it
  // with t = det^{-1}.
  std::vector<FpProjElem> group;
  for (std::uint64_t g00 = 0; g00 < q; ++g00) {
    for (std::uint64_t g01 = 0; g01 < q; ++g01) {
      for (std::uint64_t g10 = 0; g10 < q; ++g10) {
        for (std::uint64_t g11 = 0; g11 < q; ++g11) {
          std::uint64_t first = g00 != 0 ? g00 : g01 != 0 ? g01 : g10 != 0 ? g10 : g11;
          if (first != 1) continue;
          FpMat g(2, 2, fp_make(g00, q));
          g.at(0, 1) = fp_make(g01, q);
          g.at(1, 0) = fp_make(g10, q);
          g.at(1, 1) = fp_make(g11, q);
          const FpElem det = mat_det(g);
          if (fp_is_zero(det)) continue;
          group.push_back(proj_make(g, fp_inv(det)));
        }
      }
    }
  }
  if (group.size() != static_cast<std::size_t>(q3 - q)) {
    throw std::logic_error("brute force census: unexpected projective group size");
  }

  std::vector<char> visited(q6, 0);
  std::vector<BruteOrbitRow> rows;
  rows.reserve(q3);
  for (std::uint32_t key = 0; key < q3; ++key) {
    BruteOrbitRow row;
    const std::uint64_t f0 = key / (q * q);
    const std::uint64_t f1 = (key / q) % q;
    const std::uint64_t f2 = key % q;
    row.f = binary_form_make(
        2, std::vector<FpElem>{fp_make(f0, q), fp_make(f1, q), fp_make(f2, q)});
    row.pair_count = Int(static_cast<unsigned long>(pairs_by_form[key].size()));
    row.valid = f0 != 0 && !fp_is_zero(binary_discriminant(row.f));
    if (row.valid) {
      for (const std::uint32_t start : pairs_by_form[key]) {
        if (visited[start]) continue;
        const FpMat A = decode_symmetric(start / q3, q);
        const FpMat B = decode_symmetric(start % q3, q);
        const FpPencil rep = pencil_make(A, B);
        std::unordered_set<std::uint32_t> orbit;
        for (const FpProjElem& w : group) {
          const FpPencil image = proj_act(w, rep);
          const std::uint32_t pair =
              encode_symmetric(image.A, q) * q3 + encode_symmetric(image.B, q);
          if (form_of_pair[pair] != key) {
            throw std::logic_error("brute force census: action changed the invariant form");
          }
          orbit.insert(pair);
        }
        for (const std::uint32_t pair : orbit) visited[pair] = 1;
        row.orbit_sizes.push_back(Int(static_cast<unsigned long>(orbit.size())));
      }
      std::sort(row.orbit_sizes.begin(), row.orbit_sizes.end(),
                [](const Int& a, const Int& b) { return a > b; });
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string brute_census_csv(const std::vector<BruteOrbitRow>& rows) {
  std::string out = "f0,f1,f2,pair_count,orbit_sizes\n";
  for (const BruteOrbitRow& row : rows) {
    out += std::to_string(row.f.f[0].v);
    out += ',';
    out += std::to_string(row.f.f[1].v);
    out += ',';
    out += std::to_string(row.f.f[2].v);
    out += ',';
    out += to_string(row.pair_count);
    out += ',';
    for (std::size_t i = 0; i < row.orbit_sizes.size(); ++i) {
      if (i > 0) out += ';';
      out += to_string(row.orbit_sizes[i]);
    }
    out += '\n';
  }
  return out;
}

Rat local_mass_factor(const std::string& place, int genus) {
  if (genus < 0) throw domain_error("local_mass_factor: genus must be >= 0");
  const Int two_g = pow_int(Int(2), static_cast<unsigned long>(genus));
  if (place == "infinity") return make_rat(Int(1), two_g);
  if (place == "2") return Rat(two_g);
  const Int p = parse_int(place);
  if (p < 3 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0 || p % 2 == 0) {
    throw domain_error("local_mass_factor: place must be infinity, 2, or an odd prime");
  }
  return Rat(1);
}

Int odd_binomial_partial_sum(unsigned long m, unsigned long k) {
  Int sum = 0;
  for (unsigned long j = 1; j <= k; j += 2) {
    Int term;
    mpz_bin_uiui(term.get_mpz_t(), m, j);
    sum += term;
  }
  return sum;
}

namespace {

long arg_long(const std::string& s) {
  const Int v = parse_int(s);
  if (!v.fits_slong_p()) throw domain_error("small_constant: argument out of range");
  return v.get_si();
}

}  // namespace

Rat small_constant(const std::string& kind, const std::vector<std::string>& args) {
  if (kind == "sl_order") {
    if (args.size() != 2) throw domain_error("small_constant: sl_order takes n and q");
    return Rat(sl_group_order(static_cast<int>(arg_long(args[0])), parse_int(args[1])));
  }
  if (kind == "mass_factor") {
    if (args.size() != 2) throw domain_error("small_constant: mass_factor takes place and genus");
    return local_mass_factor(args[0], static_cast<int>(arg_long(args[1])));
  }
  if (kind == "odd_binomial_sum") {
    if (args.size() != 2) throw domain_error("small_constant: odd_binomial_sum takes m and k");
    const long m = arg_long(args[0]);
    const long k = arg_long(args[1]);
    if (m < 0 || k < 0) throw domain_error("small_constant: arguments must be nonnegative");
    return Rat(odd_binomial_partial_sum(static_cast<unsigned long>(m),
                                        static_cast<unsigned long>(k)));
  }
  if (kind == "tau_count") {
    if (args.size() != 2) throw domain_error("small_constant: tau_count takes m and n");
    return Rat(tau_class_count(static_cast<int>(arg_long(args[0])),
                               static_cast<int>(arg_long(args[1]))));
  }
  throw domain_error("unknown constant kind: " + kind);
}

}  // namespace qpencil
