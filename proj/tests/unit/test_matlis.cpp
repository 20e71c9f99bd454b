#include <doctest.h>

#include "support.hpp"

using namespace cwb;
using namespace cwb::test;

namespace {

struct LocalCase {
  Ring ring;
  long q;
  unsigned n;  // nilpotency of the maximal ideal
};

std::vector<LocalCase> local_cases() {
  return {{zmod(8), 2, 3},
          {zmod(9), 3, 2},
          {Ring::prime_field(5), 5, 1},
          {truncated_poly(2, 3), 2, 3},
          {truncated_poly(3, 2), 3, 2},
          {square_zero_algebra(), 2, 2}};
}

/// E(k) as a concrete module, built by hand.
Concrete concrete_envelope(const LocalCase& c, Rng& rng) {
  if (c.ring.kind() == RingKind::FiniteAlgebra) return concrete_square_zero(c.ring, 2, 1, {{1, 0}}, {{0, 1}}, &rng);
  if (c.ring.kind() == RingKind::Modular) return concrete_chain(c.ring, c.q, {c.n});
  if (c.ring.kind() == RingKind::PrimeField) return concrete_vector(c.ring, c.q, 1, {IntMat{{0}}}, {c.ring.zero()}, &rng);
  return concrete_truncated(c.ring, c.q, {c.n}, &rng);
}

Concrete random_concrete(const LocalCase& c, Rng& rng, unsigned max_len) {
  if (c.ring.kind() == RingKind::FiniteAlgebra) {
    const auto classes = square_zero_classes(max_len);
    const auto& k = classes[uniform(rng, 0, classes.size() - 1)];
    return concrete_square_zero(c.ring, k.a, k.b, k.x1, k.y1, &rng);
  }
  const auto parts = partitions(uniform(rng, 0, max_len), c.n);
  const auto& part = parts[uniform(rng, 0, parts.size() - 1)];
  if (c.ring.kind() == RingKind::Modular) return concrete_chain(c.ring, c.q, part);
  if (c.ring.kind() == RingKind::PrimeField) {
    const std::size_t k = part.size();
    return concrete_vector(c.ring, c.q, k, {IntMat(k, Vec(k, 0))}, {c.ring.zero()}, &rng);
  }
  return concrete_truncated(c.ring, c.q, part, &rng);
}

}  // namespace

TEST_CASE("injective envelope examples") {
  const InjectiveEnvelope z8 = injective_envelope_simple(zmod(8));
  CHECK(is_isomorphic(z8.module, PresentedModule::cyclic(zmod(8), zmod(8).zero())));
  CHECK(z8.self_injective_model);
  CHECK(z8.socle_simple);
  CHECK(z8.injective_verified);
  CHECK(z8.ideals_tested == 4);

  const Ring t = truncated_poly(2, 3);
  const InjectiveEnvelope e3 = injective_envelope_simple(t);
  CHECK(is_isomorphic(e3.module, PresentedModule::free(t, 1)));
  CHECK(e3.injective_verified);

  const Ring sq = square_zero_algebra();
  const InjectiveEnvelope es = injective_envelope_simple(sq);
  CHECK_FALSE(es.self_injective_model);
  CHECK(length(es.module) == 3);
  CHECK(es.socle_simple);
  CHECK(es.injective_verified);
  // ideals: 0, the three lines in m, m, A
  CHECK(es.ideals_tested == 6);
  CHECK(all_ideals(LocalArtinianRing::from(sq)).size() == 6);
}

TEST_CASE("unsupported rings are rejected") {
  CHECK_THROWS_AS(LocalArtinianRing::from(zmod(6)), UnsupportedRing);
  CHECK_THROWS_AS(injective_envelope_simple(Ring::integers()), UnsupportedRing);
  CHECK_THROWS_AS(matlis_dual(PresentedModule::free(poly_ring(2), 1)), UnsupportedRing);
  CHECK(LocalArtinianRing::from(Ring::prime_field(3)).nilpotency == 1);
  CHECK(LocalArtinianRing::from(zmod(27)).nilpotency == 3);
}

TEST_CASE("Baer test: Z/2 is not injective over Z/4, Z/4 is") {
  const Ring r = zmod(4);
  const BaerResult bad = baer_test(PresentedModule::cyclic(r, r.from_int(2)));
  CHECK_FALSE(bad.injective);
  REQUIRE(bad.failing_ideal);
  CHECK(bad.failing_ideal->generators.size() == 1);
  CHECK(baer_test(PresentedModule::free(r, 1)).injective);
  CHECK(baer_test(PresentedModule::zero(r)).injective);
  const Ring sq = square_zero_algebra();
  CHECK_FALSE(baer_test(PresentedModule::free(sq, 1)).injective);
}

TEST_CASE("dual of A, k and 0") {
  for (const auto& c : local_cases()) {
    INFO(c.ring.name());
    const LocalArtinianRing a = LocalArtinianRing::from(c.ring);
    const PresentedModule k = quotient(PresentedModule::free(c.ring, 1), Matrix::from_rows(c.ring, {a.maximal.generators})).module;
    CHECK(length(k) == 1);
    CHECK(is_isomorphic(matlis_dual(PresentedModule::free(c.ring, 1)), injective_envelope_module(a)));
    CHECK(is_isomorphic(matlis_dual(k), k));
    CHECK(is_zero_module(matlis_dual(PresentedModule::zero(c.ring))));
    CHECK(double_dual_check(k).iso);
  }
}

TEST_CASE("|Hom(M, E)| equals |M|, counted by enumeration") {
  Rng rng(51);
  for (const auto& c : local_cases()) {
    INFO(c.ring.name());
    const Concrete e = concrete_envelope(c, rng);
    CHECK(is_isomorphic(e.module, injective_envelope_module(LocalArtinianRing::from(c.ring))));
    std::size_t soc = 0;
    for (const auto& v : e.elements()) soc += e.in_socle(v);
    CHECK(soc == static_cast<std::size_t>(c.q));
    for (int k = 0; k < 12; ++k) {
      const Concrete m = random_concrete(c, rng, c.q == 5 ? 2 : 3);
      CHECK(enumerate_homs(m, e).size() == m.size());
      CHECK(library_size(matlis_dual(m.module), c.q) == m.size());
    }
  }
}

TEST_CASE("double dual is an isomorphism and D preserves length") {
  Rng rng(52);
  for (const auto& c : local_cases()) {
    INFO(c.ring.name());
    for (int k = 0; k < 10; ++k) {
      const Concrete m = random_concrete(c, rng, 3);
      const DoubleDualCheck d = double_dual_check(m.module);
      CHECK(d.iso);
      CHECK(is_bijective(d.evaluation));
      CHECK(length(matlis_dual(m.module)) == length(m.module));
    }
  }
  CHECK_THROWS_AS(double_dual_check(PresentedModule::free(Ring::integers(), 1)), InvalidArgument);
}

TEST_CASE("swap_check on random pairs") {
  Rng rng(53);
  for (const auto& c : local_cases()) {
    for (int k = 0; k < 6; ++k) {
      const Concrete m = random_concrete(c, rng, 2), n = random_concrete(c, rng, 2);
      CHECK(swap_check(m.module, n.module));
    }
  }
}

TEST_CASE("D is exact on socle sequences") {
  Rng rng(54);
  for (const auto& c : local_cases()) {
    const LocalArtinianRing a = LocalArtinianRing::from(c.ring);
    const MatlisDuality D(c.ring);
    for (int k = 0; k < 8; ++k) {
      const Concrete m = random_concrete(c, rng, 3);
      const SubmoduleResult s = socle(m.module, a.maximal);
      const QuotientResult q = cokernel(s.inclusion);
      // 0 -> D(M/soc) -> D(M) -> D(soc) -> 0
      const HomModule dm = D.dual(m.module), ds = D.dual(s.module), dq = D.dual(q.module);
      const ModuleMorphism di = D.dual_map(dm, ds, s.inclusion);
      const ModuleMorphism dp = D.dual_map(dq, dm, q.projection);
      CHECK(is_surjective(di));
      CHECK(is_injective(dp));
      CHECK(is_zero_map(compose(di, dp)));
      CHECK(length(dm.module) == *length(ds.module) + *length(dq.module));
    }
  }
}

TEST_CASE("evaluation M -> D^2 M is natural") {
  Rng rng(55);
  for (const auto& c : local_cases()) {
    INFO(c.ring.name());
    const MatlisDuality D(c.ring);
    for (int k = 0; k < 6; ++k) {
      const Concrete m = random_concrete(c, rng, 2), n = random_concrete(c, rng, 2);
      const auto homs = enumerate_homs(m, n);
      const ModuleMorphism f = to_library(m, n, homs[uniform(rng, 0, homs.size() - 1)]);
      const HomModule dm = D.dual(m.module), dn = D.dual(n.module);
      const ModuleMorphism df = D.dual_map(dn, dm, f);
      const HomModule ddm = D.dual(dm.module), ddn = D.dual(dn.module);
      const ModuleMorphism ddf = D.dual_map(ddm, ddn, df);
      CHECK(same_map(compose(ddf, D.evaluation(m.module)), compose(D.evaluation(n.module), f)));
    }
  }
}

TEST_CASE("E filtration and End comparison") {
  const Ring z8 = zmod(8);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(length(E_filtration(z8, n).module) == std::min<std::size_t>(n, 3));
    const EndComparison e = end_E_compare(z8, n);
    CHECK(e.iso);
    CHECK(length(e.quotient) == std::min<std::size_t>(n, 3));
  }
  const Ring sq = square_zero_algebra();
  CHECK(length(E_filtration(sq, 1).module) == 1);
  CHECK(length(E_filtration(sq, 2).module) == 3);
  for (const auto& c : local_cases())
    for (std::size_t n = 0; n <= c.n + 1; ++n) {
      const EndComparison e = end_E_compare(c.ring, n);
      CHECK(e.iso);
      CHECK(is_isomorphic(e.hom, e.quotient));
    }
}
