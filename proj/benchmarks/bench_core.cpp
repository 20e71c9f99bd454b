#include <benchmark/benchmark.h>

#include <random>

#include "cwb/indcat.hpp"
#include "cwb/koszul.hpp"
#include "cwb/matlis.hpp"

namespace {

using namespace cwb;

Matrix random_int_matrix(std::size_t n, unsigned seed) {
  const Ring z = Ring::integers();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-20, 20);
  Matrix m(z, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, z.from_int(d(rng)));
  return m;
}

void BM_SmithIntegers(benchmark::State& st) {
  const Matrix m = random_int_matrix(static_cast<std::size_t>(st.range(0)), 7);
  for (auto _ : st) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithIntegers)->Arg(4)->Arg(8)->Arg(16);

void BM_SmithPolynomials(benchmark::State& st) {
  const Ring r = Ring::poly(Ring::prime_field(2), "x");
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  std::mt19937_64 rng(11);
  Matrix m(r, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem e = r.zero();
      for (int k = 0; k < 4; ++k)
        if (rng() & 1) e = r.add(e, r.pow(r.variable(), k));
      m.set(i, j, e);
    }
  for (auto _ : st) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithPolynomials)->Arg(4)->Arg(8);

void BM_HomModule(benchmark::State& st) {
  const Ring z = Ring::integers();
  std::vector<Elem> d;
  for (long k = 1; k <= st.range(0); ++k) d.push_back(z.from_int(1L << k));
  const PresentedModule m = PresentedModule::diagonal(z, d);
  for (auto _ : st) benchmark::DoNotOptimize(hom_module(m, m));
}
BENCHMARK(BM_HomModule)->Arg(2)->Arg(4)->Arg(6);

void BM_LambdaTower(benchmark::State& st) {
  const Ring z = Ring::integers();
  const Complex a = Complex::concentrated(z, 0);
  const Ideal I(z, {z.from_int(2)});
  for (auto _ : st) benchmark::DoNotOptimize(tower_report(a, I, static_cast<std::size_t>(st.range(0)), TowerMode::Lambda));
}
BENCHMARK(BM_LambdaTower)->Arg(4)->Arg(8);

void BM_KoszulHomology(benchmark::State& st) {
  const Ring q = Ring::poly(Ring::rationals(), "x");
  std::vector<Elem> xs;
  for (long k = 0; k < st.range(0); ++k) xs.push_back(q.add(q.variable(), q.from_int(k)));
  const Complex k = koszul(q, xs);
  for (auto _ : st)
    for (int n = k.lo(); n <= k.hi(); ++n) benchmark::DoNotOptimize(homology(k, n));
}
BENCHMARK(BM_KoszulHomology)->Arg(2)->Arg(3)->Arg(4);

void BM_DoubleDual(benchmark::State& st) {
  const Ring r = Ring::modular(1L << st.range(0));
  std::vector<Elem> d;
  for (long k = 1; k <= st.range(0); ++k) d.push_back(r.from_int(1L << k));
  const PresentedModule m = PresentedModule::diagonal(r, d);
  for (auto _ : st) benchmark::DoNotOptimize(double_dual_check(m));
}
BENCHMARK(BM_DoubleDual)->Arg(2)->Arg(3)->Arg(4);

void BM_PrueferEnd(benchmark::State& st) {
  const Ring z = Ring::integers();
  const ObjectSequence p = prufer_tower(z, z.from_int(2));
  for (auto _ : st) benchmark::DoNotOptimize(hom_formal(p, p, static_cast<std::size_t>(st.range(0))));
}
BENCHMARK(BM_PrueferEnd)->Arg(3)->Arg(5);

void BM_HomotopyHom(benchmark::State& st) {
  const Ring z = Ring::integers();
  std::vector<Elem> xs;
  for (long k = 0; k < st.range(0); ++k) xs.push_back(z.from_int(2 * k + 2));
  const Complex k = koszul(z, xs);
  for (auto _ : st) benchmark::DoNotOptimize(homotopy_hom(k, k));
}
BENCHMARK(BM_HomotopyHom)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
