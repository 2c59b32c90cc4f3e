#pragma once

/// @file census.hpp
/// Orbit counting for pairs of symmetric bilinear forms with a fixed
/// nondegenerate invariant form: exact counts and stabilizer sizes over
/// prime fields (driven by the parity profile of the irreducible factors)
/// and over the real numbers (driven by the real root count), plus an
/// exhaustive brute-force oracle for n = 2 over tiny fields and a few
/// named constants used by the counting formulas.

#include <cstdint>
#include <string>
#include <vector>

#include "qpencil/binary_form.hpp"

namespace qpencil {

/// |SL_n(F_q)| = q^{n(n-1)/2} * prod_{i=2}^{n} (q^i - 1).
Int sl_group_order(int n, const Int& q);

/// Exact orbit count over F_q for one invariant form.
struct CensusReport {
  std::uint64_t q = 0;
  FpForm f;
  std::vector<int> factor_degrees;  ///< degrees of the distinct irreducible factors, ascending
  Int orbit_count;
  Int stabilizer_size;
  Int mass;  ///< orbit_count * |SL_n(F_q)| / stabilizer_size
};

/// Counts the orbits of pairs with invariant form f over F_q, for even n.
/// With m distinct irreducible factors the count is 2^m when every factor
/// has even degree and n = 0 (mod 4), 2^{m-1} when every factor has even
/// degree and n = 2 (mod 4), and 2^{m-2} when some factor has odd degree;
/// the stabilizer of any pair has the same size, so the total number of
/// pairs (the mass) is |SL_n(F_q)|.
/// Requires n even, f0 != 0, disc != 0; throws domain_error otherwise.
CensusReport census_Fq(const FpForm& f);

/// Stabilizer size of a pair with invariant form f, over F_q.
Int stabilizer_size_field(const FpForm& f);

/// Stabilizer size of a pair with invariant form f, over the real numbers.
Int stabilizer_size_field(const QForm& f);

enum class Definiteness { Indefinite, PositiveDefinite, NegativeDefinite };

/// Orbit counts over the real numbers for one invariant form of even
/// degree n: f(x,1) has r1 real and 2*r2 complex roots, m = r1/2.
struct RealClassReport {
  int r1 = 0;
  int r2 = 0;
  int m = 0;
  Definiteness definiteness = Definiteness::Indefinite;
  Int orbit_count;
  Int soluble_count;
  Int stabilizer_size;  ///< reported even when orbit_count is 0
};

/// Classifies pairs over the real numbers. Negative definite forms admit
/// no pairs at all; positive definite forms admit two orbits when
/// n = 0 (mod 4) and one when n = 2 (mod 4), all soluble, with stabilizer
/// size 2^{n/2} resp. 2^{n/2-1}; indefinite forms (r1 > 0) admit 2^{r1-2}
/// orbits of which 2^{m-1} are soluble, with stabilizer size 2^{n/2+m-2}.
/// Requires n even, f0 != 0, disc != 0.
RealClassReport real_classification(const QForm& f);

/// Factor-subset counting for the 2-torsion of the relevant class groups.
struct EvenOddCount {
  Int even_count;           ///< number of factor subsets with even total degree
  bool odd_exists = false;  ///< some irreducible factor has odd degree
  bool complete = true;     ///< factorization fully resolved (always true over F_p)
};

/// Over F_p the factorization is complete, so the subset count is exact:
/// 2^m when every factor has even degree, otherwise 2^{m-1}.
/// Requires disc != 0 (the form may have f0 = 0; the factor y then counts
/// as one linear factor).
EvenOddCount even_odd_factorization_count(const FpForm& f);

/// Over the rationals the factorization is resolved as far as rational
/// roots plus quadratic splittings of a quartic tail reach: tails of degree
/// <= 4 are fully resolved, a tail of degree >= 5 is kept as one block and
/// `complete` is false (then even_count is a lower bound and odd_exists may
/// be under-reported). Requires disc != 0.
EvenOddCount even_odd_factorization_count(const QForm& f);

/// One row of the exhaustive n = 2 enumeration over F_q.
struct BruteOrbitRow {
  FpForm f;                      ///< invariant form, coefficients (f0, f1, f2)
  bool valid = false;            ///< disc != 0 and f0 != 0
  Int pair_count;                ///< number of pairs (A,B) with this invariant form
  std::vector<Int> orbit_sizes;  ///< descending; filled only for valid rows
};

/// Enumerates all q^6 pairs of symmetric 2x2 matrices over F_q, groups them
/// by invariant form, and decomposes each valid group into orbits under the
/// projective unimodular action. Rows are sorted by (f0, f1, f2).
/// Intended for q in {3, 5}; larger q is rejected.
std::vector<BruteOrbitRow> brute_force_census_n2(std::uint64_t q);

/// CSV rendering: header "f0,f1,f2,pair_count,orbit_sizes" with the sizes
/// ';'-joined (empty for invalid rows).
std::string brute_census_csv(const std::vector<BruteOrbitRow>& rows);

/// Local mass factor a_v for genus g: 2^{-g} at the infinite place, 2^g at
/// the even place, 1 at odd places (pass the prime as decimal string).
Rat local_mass_factor(const std::string& place, int genus);

/// S_m(k) = C(m,1) + C(m,3) + ... over odd indices j <= k.
Int odd_binomial_partial_sum(unsigned long m, unsigned long k);

/// Named-constant dispatcher (CLI surface):
///   "sl_order" n q | "mass_factor" place genus |
///   "odd_binomial_sum" m k | "tau_count" m n.
/// Throws domain_error on an unknown kind or malformed arguments.
Rat small_constant(const std::string& kind, const std::vector<std::string>& args);

}  // namespace qpencil
