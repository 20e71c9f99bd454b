#include <doctest.h>

#include "support.hpp"

using namespace cwb;
using namespace cwb::test;

namespace {

const Ring Z = Ring::integers();

PresentedModule zc(long n) { return PresentedModule::cyclic(Z, Z.from_int(n)); }
Matrix scalar(const Ring& r, long v) { return Matrix::from_rows(r, {{r.from_int(v)}}); }
Complex kz(long p) { return koszul(Z, {Z.from_int(p)}); }

ModuleMorphism times(const PresentedModule& m, long c) { return scale(m.ring().from_int(c), ModuleMorphism::identity(m)); }

/// A random inverse tower of finite Z/8-modules, with the same maps kept concretely.
struct RandomTower {
  std::vector<Concrete> mods;
  std::vector<ConcreteMap> maps;  // maps[i] : mods[i+1] -> mods[i]
  InverseTower tower;
};

RandomTower random_tower(Rng& rng, std::size_t depth) {
  const Ring r = zmod(8);
  RandomTower t;
  for (std::size_t i = 0; i <= depth; ++i) {
    const auto parts = partitions(uniform(rng, 0, 3), 3);
    t.mods.push_back(concrete_chain(r, 2, parts[uniform(rng, 0, parts.size() - 1)]));
    t.tower.modules.push_back(t.mods.back().module);
  }
  for (std::size_t i = 0; i < depth; ++i) {
    const auto homs = enumerate_homs(t.mods[i + 1], t.mods[i]);
    t.maps.push_back(homs[uniform(rng, 0, homs.size() - 1)]);
    t.tower.maps.push_back(to_library(t.mods[i + 1], t.mods[i], t.maps.back()));
  }
  return t;
}

/// Size of the image of M_k -> M_i, by enumeration.
std::size_t composite_image_size(const RandomTower& t, std::size_t i, std::size_t k) {
  std::set<Vec> img;
  for (Vec v : t.mods[k].elements()) {
    for (std::size_t s = k; s > i; --s) v = apply_map(t.mods[s], t.mods[s - 1], t.maps[s - 1], v);
    img.insert(v);
  }
  return img.size();
}

}  // namespace

TEST_CASE("sequences: items, composite transitions and windows") {
  const ObjectSequence p = prufer_tower(Z, Z.from_int(2));
  CHECK(is_isomorphic(std::get<PresentedModule>(p.item(3)), zc(8)));
  const auto f = std::get<ModuleMorphism>(p.transition(1, 3));
  CHECK(f.matrix() == scalar(Z, 4));
  CHECK_FALSE(p.horizon().has_value());

  const PresentedModule a = zc(4);
  const ObjectSequence w({a, a}, {times(a, 2)});
  CHECK(w.horizon() == std::optional<std::size_t>(1));
  CHECK_THROWS_AS(w.item(2), HorizonInsufficient);
  CHECK_THROWS_AS(w.transition(1), HorizonInsufficient);
  CHECK_THROWS_AS(ObjectSequence({a, zc(2)}, {times(a, 2)}), InvalidArgument);
  CHECK_THROWS_AS(ObjectSequence({a}, {times(a, 2)}), InvalidArgument);

  // socle tower of Z/8 + Z/2 under (2): sizes 1, 4, 8, 16, 16
  const ObjectSequence s = socle_tower(PresentedModule::diagonal(Z, {Z.from_int(8), Z.from_int(2)}), Ideal(Z, {Z.from_int(2)}));
  const std::vector<std::size_t> lens{0, 2, 3, 4, 4};
  for (std::size_t i = 0; i < lens.size(); ++i) CHECK(length(std::get<PresentedModule>(s.item(i))) == lens[i]);
  for (std::size_t i = 0; i + 1 < lens.size(); ++i) CHECK(is_injective(std::get<ModuleMorphism>(s.transition(i))));
}

TEST_CASE("hom_formal of constant sequences is the Hom group") {
  const ObjectSequence x = constant_sequence(Object(zc(4))), y = constant_sequence(Object(zc(6)));
  const HomFormalResult r = hom_formal(x, y, 3);
  CHECK(is_isomorphic(r.approximation, zc(2)));
  CHECK(r.all_stabilized());
  for (const auto& c : r.certificates) CHECK(c == std::optional<std::size_t>(0));
  CHECK(r.lim.mittag_leffler);
  CHECK_THROWS_AS(hom_formal(x, y, 0), InvalidArgument);
  CHECK_THROWS_AS(hom_formal(x, constant_sequence(Object(kz(2))), 2), InvalidArgument);
}

TEST_CASE("End of the Pruefer tower at depth d is Z/2^d") {
  // colim_j Hom(Z/2^i, Z/2^j) = Z/2^i, stable from j = i; the limit over
  // i <= d of the restrictions is Z/2^d.
  const ObjectSequence p = prufer_tower(Z, Z.from_int(2));
  for (std::size_t d = 1; d <= 4; ++d) {
    const HomFormalResult r = hom_formal(p, p, d);
    CHECK(is_isomorphic(r.approximation, zc(1L << d)));
    for (std::size_t i = 0; i <= d; ++i) {
      INFO("d=" << d << " i=" << i);
      CHECK(r.certificates[i] == std::optional<std::size_t>(i));
    }
    CHECK(r.lim.mittag_leffler);
  }
  const ObjectSequence win({zc(1), zc(2)}, {ModuleMorphism(zc(1), zc(2), scalar(Z, 2))});
  CHECK_THROWS_AS(hom_formal(p, win, 3), HorizonInsufficient);
}

TEST_CASE("formal morphisms: identity, composition and compatibility") {
  const ObjectSequence p = prufer_tower(Z, Z.from_int(2));
  const FormalMorphism id = FormalMorphism::identity(p, 4);
  CHECK(id.depth() == 4);
  const FormalMorphism two = FormalMorphism::level(
      p, p, [&](std::size_t i) -> Arrow { return times(std::get<PresentedModule>(p.item(i)), 2); }, 4);
  const FormalMorphism c = compose(two, two);
  CHECK(c.depth() == 4);
  for (std::size_t i = 0; i <= 4; ++i)
    CHECK(equivalent(c.rep(i).map, Arrow(times(std::get<PresentedModule>(p.item(i)), 4))));
  CHECK(compose(id, two).depth() == 4);
  // representatives into a later stage: X_i -> Y_(i+1) by the transition
  std::vector<FormalRep> shift_reps;
  for (std::size_t i = 0; i <= 3; ++i) shift_reps.push_back(FormalRep{i, i + 1, p.transition(i)});
  const FormalMorphism sh(p, p, shift_reps);
  CHECK(compose(sh, sh).depth() == 2);
  CHECK(compose(sh, sh).rep(1).j == 3);
  // x_i followed by a non-natural family is rejected
  CHECK_THROWS_AS(FormalMorphism::level(
                      p, p,
                      [&](std::size_t i) -> Arrow {
                        const auto m = std::get<PresentedModule>(p.item(i));
                        return i == 2 ? ModuleMorphism::zero(m, m) : ModuleMorphism::identity(m);
                      },
                      4),
                  InvalidArgument);
}

TEST_CASE("is_cauchy examples") {
  const ObjectSequence p = prufer_tower(Z, Z.from_int(2));
  const TestSet tests{{Object(zc(2)), Object(zc(4)), Object(PresentedModule::free(Z, 1))}};
  const auto v = is_cauchy(p, tests, 5);
  REQUIRE(v.size() == 3);
  CHECK(v[0].stabilized_at == std::optional<std::size_t>(1));
  CHECK(v[1].stabilized_at == std::optional<std::size_t>(2));
  CHECK_FALSE(v[2].stabilized_at);
  CHECK(v[2].str(5) == "not stabilized by 5");
  CHECK(v[0].str(5) == "stabilized at 1");
  const auto c = is_cauchy(constant_sequence(Object(zc(8))), tests, 3);
  for (const auto& s : c) CHECK(s.stabilized_at == std::optional<std::size_t>(0));
  CHECK_THROWS_AS(is_cauchy(p, TestSet{}, 3), InvalidArgument);
  CHECK_THROWS_AS(is_cauchy(p, TestSet{{Object(kz(2))}}, 3), InvalidArgument);
}

TEST_CASE("eventually_invertible examples") {
  const ObjectSequence p = prufer_tower(Z, Z.from_int(2));
  const TestSet tests{{Object(zc(2)), Object(zc(4))}};
  const auto level = [&](long c) {
    return FormalMorphism::level(
        p, p, [&, c](std::size_t i) -> Arrow { return times(std::get<PresentedModule>(p.item(i)), c); }, 4);
  };
  for (const auto& v : eventually_invertible(level(1), tests, 4)) CHECK(v.stabilized_at == std::optional<std::size_t>(0));
  for (const auto& v : eventually_invertible(level(3), tests, 4)) CHECK(v.stabilized_at == std::optional<std::size_t>(0));
  // multiplication by 2 kills Hom(Z/2, Z/2^i) for every i >= 1
  for (const auto& v : eventually_invertible(level(2), tests, 4)) CHECK_FALSE(v.stabilized_at);
  CHECK_THROWS_AS(eventually_invertible(level(1), tests, 5), HorizonInsufficient);
}

TEST_CASE("lim_lim1 examples") {
  const PresentedModule a = PresentedModule::free(Z, 1);
  const InverseTower adic = adic_tower(a, Ideal(Z, {Z.from_int(3)}), 4);
  const LimResult l = lim_lim1(adic);
  CHECK(is_isomorphic(l.lim, zc(81)));
  CHECK(l.mittag_leffler);
  for (std::size_t i = 0; i < 4; ++i) CHECK(l.stable_from[i] == std::optional<std::size_t>(i));
  CHECK(l.verdict() == "lim1 zero by Mittag-Leffler at depth 4");

  const LimResult m = lim_lim1(multiplication_tower(a, Z.from_int(2), 4));
  CHECK_FALSE(m.mittag_leffler);
  CHECK(m.verdict() == "undetermined");
  CHECK(is_isomorphic(m.lim, a));
  for (std::size_t k = 0; k <= 4; ++k) CHECK(is_isomorphic(m.images[0][k], a));

  // multiplication by 2 on Z/8: the images die after three steps, which a
  // window of depth 5 witnesses only for the first two stages
  const LimResult n = lim_lim1(multiplication_tower(zc(8), Z.from_int(2), 5));
  for (std::size_t k = 0; k <= 5; ++k) CHECK(length(n.images[0][k]) == (k < 3 ? 3 - k : 0));
  CHECK(n.stable_from[0] == std::optional<std::size_t>(3));
  CHECK(n.stable_from[1] == std::optional<std::size_t>(4));
  CHECK_FALSE(n.stable_from[2]);
  CHECK_FALSE(n.mittag_leffler);
  CHECK(lim_lim1(multiplication_tower(zc(8), Z.from_int(2), 8)).stable_from[4] == std::optional<std::size_t>(7));

  InverseTower bad{{zc(2), zc(4)}, {}};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("lim of a finite window is the top module; images match enumeration") {
  Rng rng(61);
  for (int k = 0; k < 25; ++k) {
    const std::size_t depth = uniform(rng, 1, 3);
    const RandomTower t = random_tower(rng, depth);
    const LimResult l = lim_lim1(t.tower);
    CHECK(is_isomorphic(l.lim, t.tower.modules.back()));
    for (std::size_t i = 0; i <= depth; ++i)
      for (std::size_t j = i; j <= depth; ++j) CHECK(library_size(l.images[i][j - i], 2) == composite_image_size(t, i, j));
    // surjective towers are Mittag-Leffler from the start
    bool onto = true;
    for (const auto& f : t.tower.maps) onto = onto && is_surjective(f);
    if (onto) {
      CHECK(l.mittag_leffler);
      for (std::size_t i = 0; i < depth; ++i) CHECK(l.stable_from[i] == std::optional<std::size_t>(i));
    }
  }
}

TEST_CASE("hocolim examples") {
  const Complex a = Complex::concentrated(Z, 0);
  const HocolimCheck c = hocolim_check(constant_sequence(Object(kz(2))), 3, a);
  CHECK(c.iso);
  CHECK(is_isomorphic(c.colim, zc(2)));
  const HocolimCheck m = hocolim_check(multiplication_sequence(Object(a), Z.from_int(2)), 3, a);
  CHECK(m.iso);
  CHECK(is_isomorphic(m.hom, PresentedModule::free(Z, 1)));
  CHECK_THROWS_AS(hocolim_finite(prufer_tower(Z, Z.from_int(2)), 2), InvalidArgument);
  const Hocolim h0 = hocolim_finite(constant_sequence(Object(kz(3))), 0);
  CHECK(is_isomorphic(homology(h0.telescope, 0), zc(3)));
}

TEST_CASE("finite telescopes have the homology of the last term and satisfy the colimit property") {
  Rng rng(62);
  for (int k = 0; k < 10; ++k) {
    const Complex x = random_complex(Z, rng, -1, 3, 2);
    std::vector<Object> items;
    std::vector<Arrow> maps;
    for (int i = 0; i < 3; ++i) items.emplace_back(x);
    for (int i = 0; i < 2; ++i) maps.emplace_back(random_self_map(x, rng, Z.from_int(uniform(rng, -2, 2))));
    const ObjectSequence s(items, maps);
    const Hocolim h = hocolim_finite(s, 2);
    for (int n = -2; n <= 2; ++n) CHECK(is_isomorphic(homology(h.telescope, n), homology(x, n)));
    for (const Complex& t : {Complex::concentrated(Z, 0), Complex::concentrated(Z, 1), kz(2)})
      CHECK(hocolim_check(s, 2, t).iso);
  }
}

TEST_CASE("phantom examples") {
  const Ring r = zmod(4);
  const PresentedModule a = PresentedModule::free(r, 1), k = PresentedModule::cyclic(r, r.from_int(2));
  const Arrow two = scale(r.from_int(2), ModuleMorphism::identity(a));
  // Hom(k, A) = 2A is killed by 2, Hom(A, A) = A is not
  const PhantomReport soc = phantom_check(two, TestSet{{Object(k)}});
  CHECK(soc.phantom);
  const PhantomReport free = phantom_check(two, TestSet{{Object(k), Object(a)}});
  CHECK_FALSE(free.phantom);
  CHECK(free.vanishes == std::vector<bool>{true, false});
  CHECK(phantom_check(zero_arrow(Object(a), Object(k)), TestSet{{Object(a)}}).phantom);
  CHECK_FALSE(phantom_check(identity_arrow(Object(k)), TestSet{{Object(k)}}).phantom);
  // p on K(p) is null-homotopic, hence zero against every test
  const Arrow p = scale(Z.from_int(3), ChainMap::identity(kz(3)));
  CHECK(phantom_check(p, TestSet{{Object(Complex::concentrated(Z, 0)), Object(kz(3)), Object(kz(9))}}).phantom);
}

TEST_CASE("phantomless_check: Mittag-Leffler and undetermined cases") {
  const ObjectSequence p = prufer_tower(Z, Z.from_int(3));
  const HomFormalResult good = phantomless_check(p, p, 3);
  CHECK(good.lim.mittag_leffler);
  CHECK(good.lim.verdict() == "lim1 zero by Mittag-Leffler at depth 3");
  // X_i = Z with transitions 2: the tower of Hom(X_i, Z) is Z <-2- Z <-2- ...
  const ObjectSequence x = multiplication_sequence(Object(PresentedModule::free(Z, 1)), Z.from_int(2));
  const HomFormalResult bad = phantomless_check(x, constant_sequence(Object(PresentedModule::free(Z, 1))), 3);
  CHECK_FALSE(bad.lim.mittag_leffler);
  CHECK(bad.lim.verdict() == "undetermined");
}

TEST_CASE("truncation tower and restricted Yoneda") {
  const BoundedAboveComplex k2 = BoundedAboveComplex::perfect(kz(2));
  const ObjectSequence t = truncation_tower(k2);
  CHECK(std::get<Complex>(t.item(0)) == Complex::concentrated(Z, 0));
  CHECK(std::get<Complex>(t.item(1)) == kz(2));
  CHECK(std::get<Complex>(t.item(3)) == kz(2));

  const YonedaReport r = restricted_yoneda_check(k2, k2, 3);
  CHECK(r.groups.size() == 4);
  // Hom_K(K(2), K(2)) -> H^0 K(2) sends the identity to a generator
  CHECK(r.stabilized_from == std::optional<std::size_t>(0));
  CHECK(r.matches_direct == std::optional<bool>(true));
  CHECK(is_isomorphic(r.lim.lim, zc(2)));

  const YonedaReport zero = restricted_yoneda_check(k2, BoundedAboveComplex::perfect(Complex::zero(Z)), 2);
  for (const auto& g : zero.groups) CHECK(is_zero_module(g));
  CHECK(zero.matches_direct == std::optional<bool>(true));

  // ... -2-> Z/4 -2-> Z/4 resolving Z/2; against Y = Z/2 the groups are Ext^0 = Z/2 at every stage
  const Ring r4 = zmod(4);
  const BoundedAboveComplex res(Complex::concentrated(r4, 0), ExtensionRule{ExtensionRule::Kind::Periodic, {scalar(r4, 2)}});
  const YonedaReport per = restricted_yoneda_check(res, BoundedAboveComplex::perfect(Complex::concentrated(r4, 0)), 4);
  CHECK_FALSE(per.matches_direct.has_value());
  CHECK(per.horizon_sufficient());
  CHECK(is_isomorphic(per.lim.lim, PresentedModule::cyclic(r4, r4.from_int(2))));
}

TEST_CASE("finite-definition subgroups of Hom(A, Z/8)") {
  const PresentedModule a = PresentedModule::free(Z, 1);
  const Object x(zc(8));
  const FdSubgroup u2 = fd_subgroup(Arrow(times(a, 2)), x), u4 = fd_subgroup(Arrow(times(a, 4)), x);
  CHECK(length(u2.module) == 2);
  CHECK(length(u4.module) == 1);
  CHECK(length(fd_sum(u2, u4).module) == 2);
  CHECK(length(fd_intersect(u2, u4).module) == 1);
  CHECK(length(fd_subgroup(identity_arrow(Object(a)), x).module) == 3);
  CHECK(is_injective(u2.inclusion));
  const FdSubgroup other = fd_subgroup(Arrow(times(a, 2)), Object(zc(4)));
  CHECK_THROWS_AS(fd_sum(u2, other), InvalidArgument);
  // the same subgroups in the homotopy category of complexes
  const Complex c = Complex::concentrated(Z, 0);
  const Object xc(kz(8));
  const auto via = [&](long v) { return Arrow(ChainMap(c, c, {{0, scalar(Z, v)}})); };
  const FdSubgroup c2 = fd_subgroup(via(2), xc), c4 = fd_subgroup(via(4), xc);
  CHECK(length(c2.module) == 2);
  CHECK(length(fd_sum(c2, c4).module) == 2);
  CHECK(length(fd_intersect(c2, c4).module) == 1);
}
