#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "qpencil/census.hpp"

using namespace qpencil;

namespace {

QForm qform(std::initializer_list<long> leading_first) {
  std::vector<Rat> c;
  for (long v : leading_first) c.emplace_back(v);
  const int n = static_cast<int>(c.size()) - 1;
  return binary_form_make(n, std::move(c));
}

FpForm fpform(std::uint64_t p, std::initializer_list<long> leading_first) {
  std::vector<FpElem> c;
  for (long v : leading_first) c.push_back(fp_reduce(Int(v), p));
  const int n = static_cast<int>(c.size()) - 1;
  return binary_form_make(n, std::move(c));
}

/// Product of forms with nonzero leading coefficients.
QForm form_product(const std::vector<QForm>& factors) {
  QPoly acc = poly_constant(Rat(1));
  int n = 0;
  for (const QForm& f : factors) {
    acc = poly_mul(acc, binary_to_poly(f));
    n += f.n;
  }
  return binary_from_poly(acc, n, Rat(1));
}

FpForm random_valid_fpform(std::mt19937_64& rng, int n, std::uint64_t p) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    std::vector<FpElem> c(static_cast<std::size_t>(n) + 1, fp_make(0, p));
    for (auto& v : c) v = fp_make(dist(rng), p);
    if (c[0].v == 0) continue;
    FpForm f = binary_form_make(n, std::move(c));
    if (!fp_is_zero(binary_discriminant(f))) return f;
  }
}

}  // namespace

TEST_CASE("special linear group orders") {
  CHECK(sl_group_order(2, Int(3)) == 24);
  CHECK(sl_group_order(2, Int(5)) == 120);
  CHECK(sl_group_order(2, Int(7)) == 336);
  CHECK(sl_group_order(4, Int(5)) == Int("29016000000"));
  CHECK(sl_group_order(1, Int(9)) == 1);
  CHECK_THROWS_AS(sl_group_order(0, Int(3)), domain_error);
  CHECK_THROWS_AS(sl_group_order(2, Int(1)), domain_error);
}

TEST_CASE("finite field census fixtures") {
  // n = 2, q = 3: x^2 + y^2 is irreducible (one even factor, n = 2 mod 4).
  const CensusReport r1 = census_Fq(fpform(3, {1, 0, 1}));
  CHECK(r1.q == 3);
  CHECK(r1.factor_degrees == std::vector<int>{2});
  CHECK(r1.orbit_count == 1);
  CHECK(r1.stabilizer_size == 1);
  CHECK(r1.mass == 24);

  // n = 2, q = 3: x^2 - y^2 splits into two odd-degree factors.
  const CensusReport r2 = census_Fq(fpform(3, {1, 0, -1}));
  CHECK(r2.factor_degrees == std::vector<int>{1, 1});
  CHECK(r2.orbit_count == 1);
  CHECK(r2.stabilizer_size == 1);
  CHECK(r2.mass == 24);

  // n = 4, q = 5: product of four distinct linear factors (roots 0,1,2,3).
  const CensusReport r3 = census_Fq(fpform(5, {1, -6, 11, -6, 0}));
  CHECK(r3.factor_degrees == std::vector<int>{1, 1, 1, 1});
  CHECK(r3.orbit_count == 4);
  CHECK(r3.stabilizer_size == 4);
  CHECK(r3.mass == sl_group_order(4, Int(5)));

  // n = 4, q = 3: two distinct irreducible quadratics, n = 0 mod 4 -> 2^2.
  const CensusReport r4 = census_Fq(fpform(3, {1, 1, 3, 1, 2}));
  CHECK(r4.factor_degrees == std::vector<int>{2, 2});
  CHECK(r4.orbit_count == 4);
  CHECK(r4.stabilizer_size == 4);

  // Errors: zero discriminant, zero leading coefficient, odd degree.
  CHECK_THROWS_AS(census_Fq(fpform(3, {1, 2, 1})), domain_error);
  CHECK_THROWS_AS(census_Fq(fpform(3, {0, 1, 1})), domain_error);
  CHECK_THROWS_AS(census_Fq(fpform(3, {1, 0, 0, 1})), domain_error);

  CHECK(stabilizer_size_field(fpform(3, {1, 0, 1})) == 1);
}

TEST_CASE("mass identity over random forms") {
  std::mt19937_64 rng(0xce9505);
  for (const std::uint64_t q : {3ull, 5ull, 7ull, 11ull, 13ull}) {
    for (const int n : {2, 4, 6}) {
      for (int trial = 0; trial < 25; ++trial) {
        const FpForm f = random_valid_fpform(rng, n, q);
        const CensusReport rep = census_Fq(f);
        CHECK(rep.orbit_count == rep.stabilizer_size);
        CHECK(rep.orbit_count >= 1);
        CHECK(rep.mass == sl_group_order(n, Int(static_cast<unsigned long>(q))));
        int degsum = 0;
        for (int d : rep.factor_degrees) degsum += d;
        CHECK(degsum == n);
      }
    }
  }
}

TEST_CASE("exhaustive pair enumeration over tiny fields") {
  for (const std::uint64_t q : {3ull, 5ull}) {
    CAPTURE(q);
    const auto rows = brute_force_census_n2(q);
    REQUIRE(rows.size() == q * q * q);
    const Int group_order = sl_group_order(2, Int(static_cast<unsigned long>(q)));
    Int total = 0;
    int valid_rows = 0;
    for (const auto& row : rows) {
      total += row.pair_count;
      if (!row.valid) {
        CHECK(row.orbit_sizes.empty());
        continue;
      }
      ++valid_rows;
      // Every valid form carries exactly |SL_2(F_q)| pairs.
      CHECK(row.pair_count == group_order);
      const CensusReport rep = census_Fq(row.f);
      CHECK(Int(static_cast<unsigned long>(row.orbit_sizes.size())) == rep.orbit_count);
      Int seen = 0;
      for (const Int& size : row.orbit_sizes) {
        seen += size;
        // Orbit size x stabilizer size = |PGL_2(F_q)| = |SL_2(F_q)|.
        CHECK(Int(size * rep.stabilizer_size) == group_order);
      }
      CHECK(seen == row.pair_count);
    }
    CHECK(total == Int(pow_int(Int(static_cast<unsigned long>(q)), 6)));
    CHECK(valid_rows > 0);
  }
  CHECK_THROWS_AS(brute_force_census_n2(7), domain_error);
}

TEST_CASE("brute force table serializes to CSV") {
  const auto rows = brute_force_census_n2(3);
  const std::string csv = brute_census_csv(rows);
  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "f0,f1,f2,pair_count,orbit_sizes");
  bool found_unit_circle = false;
  std::size_t data_lines = 0;
  while (std::getline(in, line)) {
    ++data_lines;
    if (line == "1,0,1,24,24") found_unit_circle = true;
  }
  CHECK(data_lines == rows.size());
  CHECK(found_unit_circle);
}

TEST_CASE("real classification fixtures") {
  const QForm pos4 = form_product({qform({1, 0, 1}), qform({1, 0, 2})});
  const RealClassReport a = real_classification(pos4);
  CHECK(a.r1 == 0);
  CHECK(a.r2 == 2);
  CHECK(a.definiteness == Definiteness::PositiveDefinite);
  CHECK(a.orbit_count == 2);
  CHECK(a.soluble_count == 2);
  CHECK(a.stabilizer_size == 4);

  QForm neg4 = pos4;
  for (auto& coeff : neg4.f) coeff = Rat(-coeff);
  const RealClassReport b = real_classification(neg4);
  CHECK(b.definiteness == Definiteness::NegativeDefinite);
  CHECK(b.orbit_count == 0);
  CHECK(b.soluble_count == 0);
  CHECK(b.stabilizer_size == 4);  // reported even with no orbits

  const QForm split4 = form_product({qform({1, 0, -1}), qform({1, 0, -4})});
  const RealClassReport c = real_classification(split4);
  CHECK(c.r1 == 4);
  CHECK(c.r2 == 0);
  CHECK(c.m == 2);
  CHECK(c.definiteness == Definiteness::Indefinite);
  CHECK(c.orbit_count == 4);
  CHECK(c.soluble_count == 2);
  CHECK(c.stabilizer_size == 4);
  CHECK(stabilizer_size_field(split4) == 4);

  // n = 2 sanity row.
  const RealClassReport d = real_classification(qform({1, 0, -1}));
  CHECK(d.r1 == 2);
  CHECK(d.orbit_count == 1);
  CHECK(d.soluble_count == 1);
  CHECK(d.stabilizer_size == 1);
  const RealClassReport e = real_classification(qform({1, 0, 1}));
  CHECK(e.orbit_count == 1);  // positive definite, n = 2 mod 4
  CHECK(e.stabilizer_size == 1);

  // n = 6: positive definite (n = 2 mod 4) and fully split.
  const QForm pos6 = form_product({qform({1, 0, 1}), qform({1, 0, 2}), qform({1, 0, 3})});
  const RealClassReport g = real_classification(pos6);
  CHECK(g.orbit_count == 1);
  CHECK(g.soluble_count == 1);
  CHECK(g.stabilizer_size == 4);
  const QForm split6 =
      form_product({qform({1, 0, -1}), qform({1, 0, -4}), qform({1, 0, -9})});
  const RealClassReport h = real_classification(split6);
  CHECK(h.r1 == 6);
  CHECK(h.orbit_count == 16);
  CHECK(h.soluble_count == 4);
  CHECK(h.stabilizer_size == 16);

  CHECK_THROWS_AS(real_classification(qform({1, 2, 1})), domain_error);
  CHECK_THROWS_AS(real_classification(qform({0, 1, 1})), domain_error);
  CHECK_THROWS_AS(real_classification(qform({1, 0, 0, 1})), domain_error);
}

TEST_CASE("even and odd factor subset counts over prime fields") {
  const EvenOddCount a = even_odd_factorization_count(fpform(3, {1, 0, 1}));
  CHECK(a.even_count == 2);
  CHECK_FALSE(a.odd_exists);
  CHECK(a.complete);

  // x^4 + 1 = (x^2+2)(x^2+3) over F_5: two even factors.
  const EvenOddCount b = even_odd_factorization_count(fpform(5, {1, 0, 0, 0, 1}));
  CHECK(b.even_count == 4);
  CHECK_FALSE(b.odd_exists);

  const EvenOddCount c = even_odd_factorization_count(fpform(3, {1, 0, -1}));
  CHECK(c.even_count == 2);
  CHECK(c.odd_exists);

  const EvenOddCount d = even_odd_factorization_count(fpform(5, {1, -6, 11, -6, 0}));
  CHECK(d.even_count == 8);  // four odd factors
  CHECK(d.odd_exists);

  // Vanishing leading coefficient: the factor at infinity counts as linear.
  const EvenOddCount e = even_odd_factorization_count(fpform(3, {0, 1, 0}));
  CHECK(e.even_count == 2);
  CHECK(e.odd_exists);

  CHECK_THROWS_AS(even_odd_factorization_count(fpform(3, {1, 2, 1})), domain_error);
}

TEST_CASE("even and odd factor subset counts over the rationals") {
  // Fully split quartic: four linear factors.
  const EvenOddCount a =
      even_odd_factorization_count(form_product({qform({1, 0, -1}), qform({1, 0, -4})}));
  CHECK(a.even_count == 8);
  CHECK(a.odd_exists);
  CHECK(a.complete);

  // x^4 + 1 is irreducible: the resolvent cubic has no usable rational root.
  const EvenOddCount b = even_odd_factorization_count(qform({1, 0, 0, 0, 1}));
  CHECK(b.even_count == 2);
  CHECK_FALSE(b.odd_exists);
  CHECK(b.complete);

  // x^4 + 4 = (x^2+2x+2)(x^2-2x+2): biquadratic splitting.
  const EvenOddCount c = even_odd_factorization_count(qform({1, 0, 0, 0, 4}));
  CHECK(c.even_count == 4);
  CHECK_FALSE(c.odd_exists);
  CHECK(c.complete);

  // x^4 + 2x^2 + x + 2 = (x^2+x+1)(x^2-x+2): split via a nonzero
  // square root of the resolvent cubic.
  const EvenOddCount d = even_odd_factorization_count(qform({1, 0, 2, 1, 2}));
  CHECK(d.even_count == 4);
  CHECK_FALSE(d.odd_exists);
  CHECK(d.complete);

  // x^4 + x + 1 is irreducible and has no rational roots.
  const EvenOddCount e = even_odd_factorization_count(qform({1, 0, 0, 1, 1}));
  CHECK(e.even_count == 2);
  CHECK_FALSE(e.odd_exists);
  CHECK(e.complete);

  // Linear factor times an irreducible cubic.
  const EvenOddCount g =
      even_odd_factorization_count(form_product({qform({1, -1}), qform({1, 0, 0, -2})}));
  CHECK(g.even_count == 2);
  CHECK(g.odd_exists);
  CHECK(g.complete);

  // Degree >= 5 tails stay unresolved: (x - 1)(x^5 - x - 1).
  const EvenOddCount h =
      even_odd_factorization_count(form_product({qform({1, -1}), qform({1, 0, 0, 0, -1, -1})}));
  CHECK(h.even_count == 2);
  CHECK(h.odd_exists);
  CHECK_FALSE(h.complete);

  // Vanishing leading coefficient: x y (x^2 + y^2).
  const EvenOddCount i = even_odd_factorization_count(qform({0, 1, 0, 1, 0}));
  CHECK(i.even_count == 4);
  CHECK(i.odd_exists);
  CHECK(i.complete);

  CHECK_THROWS_AS(even_odd_factorization_count(qform({1, 2, 1})), domain_error);
}

TEST_CASE("named small constants") {
  CHECK(small_constant("sl_order", {"2", "3"}) == Rat(24));
  CHECK(small_constant("sl_order", {"4", "5"}) == Rat(Int("29016000000")));

  CHECK(local_mass_factor("infinity", 2) == make_rat(Int(1), Int(4)));
  CHECK(local_mass_factor("2", 2) == Rat(4));
  CHECK(local_mass_factor("7", 2) == Rat(1));
  CHECK(Rat(local_mass_factor("infinity", 2) * local_mass_factor("2", 2) *
            local_mass_factor("7", 2)) == Rat(1));
  CHECK_THROWS_AS(local_mass_factor("4", 2), domain_error);
  CHECK_THROWS_AS(local_mass_factor("9", 2), domain_error);
  CHECK_THROWS_AS(local_mass_factor("infinity", -1), domain_error);

  CHECK(odd_binomial_partial_sum(3, 3) == 4);
  CHECK(odd_binomial_partial_sum(1, 1) == 1);
  CHECK(odd_binomial_partial_sum(4, 3) == 8);
  // Partial odd sums stay below 2^g for genus up to 12 and odd cutoffs k < g.
  for (int g = 2; g <= 12; ++g) {
    for (int k = 1; k < g; k += 2) {
      CHECK(odd_binomial_partial_sum(static_cast<unsigned long>(g + 1),
                                     static_cast<unsigned long>(k)) <
            pow_int(Int(2), static_cast<unsigned long>(g)));
    }
  }

  CHECK(small_constant("mass_factor", {"infinity", "3"}) == make_rat(Int(1), Int(8)));
  CHECK(small_constant("odd_binomial_sum", {"3", "3"}) == Rat(4));
  CHECK(small_constant("tau_count", {"1", "4"}) == Rat(tau_class_count(1, 4)));
  CHECK(small_constant("tau_count", {"0", "4"}) == Rat(2));
  CHECK_THROWS_WITH_AS(small_constant("bogus", {}), "unknown constant kind: bogus",
                       domain_error);
  CHECK_THROWS_AS(small_constant("sl_order", {"2"}), domain_error);
}
