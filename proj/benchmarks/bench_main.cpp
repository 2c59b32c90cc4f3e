/// @file bench_main.cpp
/// Microbenchmarks for the hot kernels: discriminants, Hermite normal form,
/// orbit counting, the exhaustive n = 2 oracle, and the one-point orbit
/// round trip. All inputs are fixed so runs are comparable.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "qpencil/binary_form.hpp"
#include "qpencil/census.hpp"
#include "qpencil/descent.hpp"
#include "qpencil/etale.hpp"
#include "qpencil/ideal.hpp"
#include "qpencil/matrix.hpp"
#include "qpencil/orbits.hpp"
#include "qpencil/pencil.hpp"

namespace {

using namespace qpencil;

QForm golden_quartic() {
  return form_from_ints({Int(3), Int(-12), Int(0), Int(11), Int(-11)});
}

QForm sample_sextic() {
  return form_from_ints({Int(2), Int(1), Int(3), Int(1), Int(1), Int(1), Int(4)});
}

void BM_discriminant_quartic(benchmark::State& state) {
  const QForm f = golden_quartic();
  for (auto _ : state) {
    benchmark::DoNotOptimize(binary_discriminant(f));
  }
}
BENCHMARK(BM_discriminant_quartic);

void BM_discriminant_sextic(benchmark::State& state) {
  const QForm f = sample_sextic();
  for (auto _ : state) {
    benchmark::DoNotOptimize(binary_discriminant(f));
  }
}
BENCHMARK(BM_discriminant_sextic);

void BM_hermite_normal_form(benchmark::State& state) {
  const std::size_t rows = 8, cols = 16;
  std::mt19937_64 rng(0xbe9c);
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m.at(i, j) = Int(static_cast<long>(rng() % 199) - 99);
    }
  }
  // Scaled identity columns pin the rank without collapsing the lattice.
  for (std::size_t i = 0; i < rows; ++i) m.at(i, cols - rows + i) += 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hnf_column_style(m));
  }
}
BENCHMARK(BM_hermite_normal_form);

void BM_census_n4_q13(benchmark::State& state) {
  std::vector<FpElem> c;
  for (std::uint64_t v : {1, 0, 0, 1, 1}) c.push_back(fp_make(v, 13));
  const FpForm f = binary_form_make(4, std::move(c));
  for (auto _ : state) {
    benchmark::DoNotOptimize(census_Fq(f));
  }
}
BENCHMARK(BM_census_n4_q13);

void BM_census_n6_q7(benchmark::State& state) {
  std::vector<FpElem> c;
  for (std::uint64_t v : {2, 1, 3, 1, 1, 1, 4}) c.push_back(fp_make(v, 7));
  const FpForm f = binary_form_make(6, std::move(c));
  for (auto _ : state) {
    benchmark::DoNotOptimize(census_Fq(f));
  }
}
BENCHMARK(BM_census_n6_q7);

void BM_brute_force_q3(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_census_n2(3));
  }
}
BENCHMARK(BM_brute_force_q3);

void BM_one_point_orbit_roundtrip(benchmark::State& state) {
  const QForm f = form_from_ints({Int(1), Int(0), Int(0), Int(1), Int(4)});
  const EtaleAlgebra L = etale_make(f);
  for (auto _ : state) {
    SignedTriples st = one_point_integral_orbit(L, Rat(2));
    QPencil pencil = pencil_from_triple(L, st.plus);
    benchmark::DoNotOptimize(invariant_form(pencil));
  }
}
BENCHMARK(BM_one_point_orbit_roundtrip);

void BM_ideal_product_sextic(benchmark::State& state) {
  const EtaleAlgebra L = etale_make(sample_sextic());
  const FractionalIdeal I1 = ideal_If(L, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ideal_multiply(L, I1, I1));
  }
}
BENCHMARK(BM_ideal_product_sextic);

void BM_real_classification(benchmark::State& state) {
  const QForm f = form_from_ints({Int(1), Int(0), Int(-5), Int(0), Int(4)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(real_classification(f));
  }
}
BENCHMARK(BM_real_classification);

}  // namespace

BENCHMARK_MAIN();
