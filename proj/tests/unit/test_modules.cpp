#include <doctest.h>

#include "support.hpp"

using namespace cwb;
using namespace cwb::test;

namespace {

const Ring Z = Ring::integers();

PresentedModule zc(long n) { return PresentedModule::cyclic(Z, Z.from_int(n)); }

Matrix scalar(const Ring& r, long v) { return Matrix::from_rows(r, {{r.from_int(v)}}); }

std::size_t len(const PresentedModule& m) { return length(m).value(); }

}  // namespace

TEST_CASE("hom_module examples") {
  CHECK(is_isomorphic(hom_module(zc(4), zc(6)).module, zc(2)));
  const PresentedModule m = PresentedModule::diagonal(Z, {Z.from_int(2), Z.from_int(0), Z.from_int(9)});
  CHECK(is_isomorphic(hom_module(PresentedModule::free(Z, 1), m).module, m));
  CHECK(is_zero_module(hom_module(m, PresentedModule::zero(Z)).module));
}

TEST_CASE("Hom(Z/a, Z/b) is Z/gcd(a, b)") {
  for (long a = 1; a <= 12; ++a)
    for (long b = 1; b <= 12; ++b) CHECK(is_isomorphic(hom_module(zc(a), zc(b)).module, zc(std::gcd(a, b))));
}

TEST_CASE("hom_module agrees with enumeration for total length <= 4") {
  Rng rng(11);
  for (const Ring& r : {zmod(8), truncated_poly(2, 3)}) {
    for (unsigned a = 0; a <= 4; ++a)
      for (unsigned b = 0; a + b <= 4; ++b)
        for (const auto& pa : partitions(a, 3))
          for (const auto& pb : partitions(b, 3)) {
            const Concrete M = r.kind() == RingKind::Modular ? concrete_chain(r, 2, pa) : concrete_truncated(r, 2, pa, &rng);
            const Concrete N = r.kind() == RingKind::Modular ? concrete_chain(r, 2, pb) : concrete_truncated(r, 2, pb, &rng);
            const HomModule h = hom_module(M.module, N.module);
            const auto homs = enumerate_homs(M, N);
            INFO(r.name() << " " << describe(M.module) << " -> " << describe(N.module));
            CHECK(library_size(h.module, 2) == homs.size());
            // every enumerated map is a combination of the library's generators
            for (const auto& f : homs) {
              const ModuleMorphism lf = to_library(M, N, f);
              CHECK(same_map(h.to_morphism(h.to_coords(lf)), lf));
            }
          }
  }
}

TEST_CASE("kernel, cokernel and image examples") {
  const ModuleMorphism two(PresentedModule::free(Z, 1), PresentedModule::free(Z, 1), scalar(Z, 2));
  CHECK(is_isomorphic(cokernel(two).module, zc(2)));
  const ModuleMorphism twice(zc(4), zc(4), scalar(Z, 2));
  const SubmoduleResult k = kernel(twice);
  CHECK(is_isomorphic(k.module, zc(2)));
  // generated by the class of 2
  CHECK(k.inclusion.target().represents_zero(k.inclusion.matrix() - scalar(Z, 2)));
  CHECK(is_zero_module(image(ModuleMorphism::zero(zc(5), zc(7))).module));
}

TEST_CASE("length examples") {
  CHECK(length(zc(4)) == 2u);
  CHECK(length(PresentedModule::zero(Z)) == 0u);
  CHECK_FALSE(length(PresentedModule::free(Z, 1)).has_value());
  CHECK(length(zc(360)) == 6u);
  const Ring q = poly_ring(0);
  CHECK(length(PresentedModule::cyclic(q, q.parse("x^2*(x^2+1)"))) == 3u);
}

TEST_CASE("socle and socle_series examples") {
  const Ideal p(Z, {Z.from_int(2)});
  const SubmoduleResult s = socle(zc(8), p);
  CHECK(is_isomorphic(s.module, zc(2)));
  CHECK(s.inclusion.target().represents_zero(s.inclusion.matrix() - scalar(Z, 4)));
  const PresentedModule semisimple = PresentedModule::diagonal(Z, {Z.from_int(2), Z.from_int(2)});
  CHECK(is_isomorphic(socle(semisimple, p).module, semisimple));
  CHECK(is_zero_module(socle(PresentedModule::zero(Z), p).module));

  const auto series = socle_series(zc(8), p, 5);
  std::vector<std::size_t> lengths;
  for (const auto& x : series) lengths.push_back(len(x.module));
  CHECK(lengths == std::vector<std::size_t>{0, 1, 2, 3, 3, 3});
  const auto ss = socle_series(semisimple, p, 3);
  CHECK(len(ss[1].module) == 2);
  CHECK(len(ss[3].module) == 2);
  for (const auto& x : socle_series(PresentedModule::zero(Z), p, 3)) CHECK(is_zero_module(x.module));
}

TEST_CASE("socle layers: soc^(n+1)/soc^n is soc(M/soc^n), and length is additive") {
  Rng rng(12);
  for (const Ring& r : {zmod(8), truncated_poly(2, 3), square_zero_algebra(), Ring::integers()}) {
    for (int k = 0; k < 12; ++k) {
      PresentedModule m;
      Ideal I = r.kind() == RingKind::Integers ? Ideal(r, {r.from_int(2)}) : LocalArtinianRing::from(r).maximal;
      if (r.kind() == RingKind::Integers) {
        m = PresentedModule::diagonal(r, {r.from_int(std::vector<long>{4, 6, 8, 12}[uniform(rng, 0, 3)]),
                                          r.from_int(uniform(rng, 1, 16))});
      } else if (r.kind() == RingKind::FiniteAlgebra) {
        const auto classes = square_zero_classes(3);
        const auto& c = classes[uniform(rng, 0, classes.size() - 1)];
        m = concrete_square_zero(r, c.a, c.b, c.x1, c.y1, &rng).module;
      } else {
        const auto parts = partitions(uniform(rng, 0, 5), 3);
        const auto& part = parts[uniform(rng, 0, parts.size() - 1)];
        m = r.kind() == RingKind::Modular ? concrete_chain(r, 2, part).module : concrete_truncated(r, 2, part, &rng).module;
      }
      INFO(r.name() << " " << describe(m));
      const auto series = socle_series(m, I, 4);
      for (std::size_t n = 0; n + 1 < series.size(); ++n) {
        const QuotientResult q = quotient(m, series[n].inclusion.matrix());
        const PresentedModule layer = image(compose(q.projection, series[n + 1].inclusion)).module;
        CHECK(is_isomorphic(layer, socle(q.module, I).module));
        CHECK(len(series[n + 1].module) == len(series[n].module) + len(layer));
      }
    }
  }
}

TEST_CASE("adic_stage examples and tower maps") {
  const Ideal two(Z, {Z.from_int(2)});
  CHECK(is_isomorphic(adic_stage(PresentedModule::free(Z, 1), two, 3).module, zc(8)));
  CHECK(is_zero_module(adic_stage(PresentedModule::free(Z, 1), two, 0).module));
  CHECK(is_isomorphic(adic_stage(zc(4), two, 5).module, zc(4)));

  const Ring k = poly_ring(2);
  const PresentedModule m = PresentedModule::diagonal(k, {k.zero(), k.parse("x^3+x")});
  const Ideal I(k, {k.parse("x^2"), k.parse("x+1")});
  for (std::size_t n = 1; n <= 4; ++n) {
    const AdicStage hi = adic_stage(m, I, n), mid = adic_stage(m, I, n - 1);
    REQUIRE(hi.tower);
    CHECK(is_surjective(*hi.tower));
    CHECK(same_map(compose(*hi.tower, adic_stage(m, I, n + 1).projection), hi.projection));
    if (n >= 2) {
      const ModuleMorphism two_step = compose(*mid.tower, *hi.tower);
      const ModuleMorphism direct = unchecked_morphism(adic_stage(m, I, n + 1).module, adic_stage(m, I, n - 1).module,
                                                       Matrix::identity(k, m.generators()));
      CHECK(same_map(two_step, direct));
    }
  }
}

TEST_CASE("factors_through_projective examples") {
  const ModuleMorphism into_free(zc(1), PresentedModule::free(Z, 2), Matrix(Z, 2, 1));
  CHECK(factors_through_projective(into_free).factors);
  CHECK_FALSE(factors_through_projective(ModuleMorphism::identity(zc(2))).factors);
  CHECK(factors_through_projective(ModuleMorphism::zero(zc(2), zc(4))).factors);
  const ModuleMorphism to_free(PresentedModule::free(Z, 2), zc(4), Matrix::from_rows(Z, {{Z.from_int(1), Z.from_int(3)}}));
  const ProjectiveFactorization f = factors_through_projective(to_free);
  REQUIRE(f.factors);
  CHECK(same_map(compose(*f.from_free, *f.to_free), to_free));
}

TEST_CASE("factoring through a projective is unchanged by a split monomorphism") {
  Rng rng(13);
  for (const Ring& r : {zmod(4), zmod(8), truncated_poly(2, 2)}) {
    for (int k = 0; k < 15; ++k) {
      const auto pick = [&] {
        const auto parts = partitions(uniform(rng, 1, 3), 2);
        const auto& part = parts[uniform(rng, 0, parts.size() - 1)];
        return r.kind() == RingKind::Modular ? concrete_chain(r, 2, part) : concrete_truncated(r, 2, part, &rng);
      };
      const Concrete M = pick(), N = pick(), P = pick();
      const auto homs = enumerate_homs(M, N);
      const ModuleMorphism f = to_library(M, N, homs[uniform(rng, 0, homs.size() - 1)]);
      const DirectSum s = direct_sum(r, {N.module, P.module});
      INFO(r.name() << " " << describe(M.module) << " -> " << describe(N.module));
      CHECK(factors_through_projective(f).factors == factors_through_projective(compose(s.injections[0], f)).factors);
    }
  }
}

TEST_CASE("simplify returns an isomorphic presentation with inverse maps") {
  Rng rng(14);
  for (const Ring& r : {Ring::integers(), poly_ring(3), zmod(12), square_zero_algebra()}) {
    for (int k = 0; k < 20; ++k) {
      const std::size_t g = uniform(rng, 0, 3);
      const PresentedModule m(r, g, random_matrix(r, rng, g, uniform(rng, 0, 3), 4));
      const Simplified s = simplify(m);
      CHECK(invariants(s.module) == invariants(m));
      CHECK(same_map(compose(s.from, s.to), ModuleMorphism::identity(m)));
      CHECK(same_map(compose(s.to, s.from), ModuleMorphism::identity(s.module)));
    }
  }
}

TEST_CASE("kernel and cokernel satisfy |M| = |ker f| |im f|") {
  Rng rng(15);
  for (const Ring& r : {zmod(8), zmod(9), truncated_poly(2, 3), square_zero_algebra()}) {
    const long p = r.kind() == RingKind::Modular && r.modulus() == 9 ? 3 : 2;
    for (int k = 0; k < 10; ++k) {
      const auto pick = [&] {
        if (r.kind() == RingKind::FiniteAlgebra) {
          const auto classes = square_zero_classes(3);
          const auto& c = classes[uniform(rng, 0, classes.size() - 1)];
          return concrete_square_zero(r, c.a, c.b, c.x1, c.y1, &rng);
        }
        const auto parts = partitions(uniform(rng, 0, 3), r.kind() == RingKind::Modular && p == 3 ? 2 : 3);
        const auto& part = parts[uniform(rng, 0, parts.size() - 1)];
        return r.kind() == RingKind::Modular ? concrete_chain(r, p, part) : concrete_truncated(r, p, part, &rng);
      };
      const Concrete M = pick(), N = pick();
      const auto homs = enumerate_homs(M, N);
      const ConcreteMap& h = homs[uniform(rng, 0, homs.size() - 1)];
      const ModuleMorphism f = to_library(M, N, h);
      const KernelCount want = count_kernel(M, N, h);
      CHECK(library_size(kernel(f).module, p) == want.kernel);
      CHECK(library_size(image(f).module, p) == want.image);
      CHECK(library_size(cokernel(f).module, p) * want.image == N.size());
      CHECK(is_injective(f) == (want.kernel == 1));
      CHECK(is_surjective(f) == (want.image == N.size()));
      // the kernel inclusion composes to zero, the cokernel projection kills the image
      CHECK(is_zero_map(compose(f, kernel(f).inclusion)));
      CHECK(is_zero_map(compose(cokernel(f).projection, f)));
    }
  }
}

TEST_CASE("isomorphism test and describe") {
  CHECK(describe(PresentedModule::diagonal(Z, {Z.from_int(6), Z.from_int(4)})) ==
        describe(PresentedModule::diagonal(Z, {Z.from_int(2), Z.from_int(12)})));
  CHECK(is_isomorphic(PresentedModule::diagonal(Z, {Z.from_int(6), Z.from_int(4)}),
                      PresentedModule::diagonal(Z, {Z.from_int(2), Z.from_int(12)})));
  CHECK_FALSE(is_isomorphic(zc(4), PresentedModule::diagonal(Z, {Z.from_int(2), Z.from_int(2)})));
  CHECK(describe(PresentedModule::zero(Z)) == "0");
  CHECK_THROWS_AS(ModuleMorphism(zc(2), zc(3), scalar(Z, 1)), InvalidArgument);
}
