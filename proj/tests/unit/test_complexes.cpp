#include <doctest.h>

#include "support.hpp"

using namespace cwb;
using namespace cwb::test;

namespace {

const Ring Z = Ring::integers();

Matrix scalar(const Ring& r, long v) { return Matrix::from_rows(r, {{r.from_int(v)}}); }

Complex kz(long p) { return koszul(Z, {Z.from_int(p)}); }

bool d_squared_zero(const Complex& x) {
  for (int n = x.lo(); n <= x.hi(); ++n)
    if (!(x.d(n + 1) * x.d(n)).is_zero()) return false;
  return true;
}

bool all_homology_zero(const Complex& x) {
  for (int n = x.lo(); n <= x.hi(); ++n)
    if (!is_zero_module(homology(x, n))) return false;
  return true;
}

/// Rank of a matrix over F_p by elimination on plain integers.
std::size_t rank_mod_p(const Matrix& m, long p) {
  std::vector<std::vector<long>> a(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = std::get<mpz_class>(m(i, j)).get_si() % p;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    long inv = 1;
    while ((a[rank][c] * inv) % p != 1) ++inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const long f = (a[i][c] * inv) % p;
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("shift examples") {
  Rng rng(21);
  const Complex x = random_complex(Z, rng, -1, 3, 2);
  CHECK(shift(x, 0) == x);
  CHECK(shift(shift(x, 1), -1) == x);
  const Complex a = shift(Complex::concentrated(Z, 0), 1);
  CHECK(a.lo() == -1);
  CHECK(a.hi() == -1);
}

TEST_CASE("cone examples") {
  Rng rng(22);
  const Complex x = random_complex(Z, rng, -1, 3, 2);
  CHECK(all_homology_zero(cone(ChainMap::identity(x)).cone));
  const Complex y = random_complex(Z, rng, 0, 2, 2);
  const Complex c0 = cone(ChainMap::zero(x, y)).cone;
  for (int n = -3; n <= 3; ++n) CHECK(c0.rank(n) == x.rank(n + 1) + y.rank(n));
  const Complex a = Complex::concentrated(Z, 0);
  const Complex c = cone(ChainMap(a, a, {{0, scalar(Z, 2)}})).cone;
  CHECK(is_isomorphic(homology(c, 0), PresentedModule::cyclic(Z, Z.from_int(2))));
}

TEST_CASE("d o d = 0 for every construction on random complexes") {
  Rng rng(23);
  for (const Ring& r : {Z, truncated_poly(2, 2), poly_ring(3)}) {
    for (int k = 0; k < 15; ++k) {
      const Complex x = random_complex(r, rng, -1, 3, 3), y = random_complex(r, rng, -1, 3, 2);
      CHECK(d_squared_zero(x));
      CHECK(d_squared_zero(shift(x, 3)));
      CHECK(d_squared_zero(tensor_complex(x, y)));
      CHECK(d_squared_zero(hom_complex(x, y)));
      const ChainMap f = random_self_map(x, rng, random_elem(r, rng));
      CHECK(d_squared_zero(cone(f).cone));
      CHECK(d_squared_zero(truncate_ge(x, 0).complex));
    }
  }
}

TEST_CASE("cone triangle: consecutive maps compose to zero up to an explicit homotopy") {
  Rng rng(24);
  for (int k = 0; k < 15; ++k) {
    const Complex x = random_complex(Z, rng, -1, 3, 2);
    const ChainMap g = random_self_map(x, rng, Z.from_int(3));
    const ConeResult c = cone(g);
    const auto h = find_homotopy(compose(c.inclusion, g));
    REQUIRE(h.has_value());
    // verify the homotopy independently: f = d h + h d
    const ChainMap fg = compose(c.inclusion, g);
    auto hom = [&](int n) -> Matrix {
      for (const auto& [deg, m] : *h)
        if (deg == n) return m;
      return Matrix(Z, c.cone.rank(n - 1), x.rank(n));
    };
    for (int n = x.lo(); n <= x.hi(); ++n) CHECK(fg.component(n) == c.cone.d(n - 1) * hom(n) + hom(n + 1) * x.d(n));
    CHECK(same_components(compose(c.projection, c.inclusion), ChainMap::zero(x, shift(x, 1))));
  }
}

TEST_CASE("tensor and hom complex examples") {
  Rng rng(25);
  const Complex x = random_complex(Z, rng, -1, 3, 2);
  CHECK(tensor_complex(x, Complex::concentrated(Z, 0)) == x);
  const Complex t = tensor_complex(Complex::concentrated(Z, 0, 2), Complex::concentrated(Z, 1, 3));
  CHECK(t.lo() == 1);
  CHECK(t.hi() == 1);
  CHECK(t.rank(1) == 6);
  const Complex h = hom_complex(kz(2), Complex::concentrated(Z, 0));
  int nonzero = 0;
  for (int n = h.lo(); n <= h.hi(); ++n)
    if (!is_zero_module(homology(h, n))) {
      ++nonzero;
      CHECK(is_isomorphic(homology(h, n), PresentedModule::cyclic(Z, Z.from_int(2))));
    }
  CHECK(nonzero == 1);
}

TEST_CASE("Hom-tensor adjunction on H^0") {
  Rng rng(26);
  for (const Ring& r : {Z, truncated_poly(2, 2)}) {
    for (int k = 0; k < 10; ++k) {
      const Complex x = random_complex(r, rng, -1, 2, 2), kk = random_complex(r, rng, -1, 2, 2),
                    y = random_complex(r, rng, -1, 3, 2);
      CHECK(is_isomorphic(homology(hom_complex(tensor_complex(x, kk), y), 0),
                          homology(hom_complex(x, hom_complex(kk, y)), 0)));
    }
  }
}

TEST_CASE("homology examples") {
  Rng rng(27);
  CHECK(all_homology_zero(cone(ChainMap::identity(random_complex(Z, rng, 0, 3, 2))).cone));
  const Complex k = kz(5);
  CHECK(is_isomorphic(homology(k, 0), PresentedModule::cyclic(Z, Z.from_int(5))));
  CHECK(is_zero_module(homology(k, -1)));
  CHECK(is_zero_module(homology(Complex::zero(Z), 0)));
}

TEST_CASE("homology over GF(p) matches ranks computed by independent elimination") {
  Rng rng(28);
  for (long p : {2L, 3L, 5L}) {
    const Ring f = Ring::prime_field(p);
    for (int k = 0; k < 20; ++k) {
      const Complex x = random_complex(f, rng, -2, 4, 3);
      for (int n = x.lo(); n <= x.hi(); ++n) {
        const std::size_t dim = x.rank(n) - rank_mod_p(x.d(n), p) - rank_mod_p(x.d(n - 1), p);
        CHECK(length(homology(x, n)) == dim);
      }
    }
  }
}

TEST_CASE("homotopy_hom examples") {
  const Complex a = Complex::concentrated(Z, 0);
  CHECK(is_isomorphic(homotopy_hom(a, a).module, PresentedModule::free(Z, 1)));
  CHECK(is_isomorphic(homotopy_hom(kz(2), kz(2)).module, PresentedModule::cyclic(Z, Z.from_int(2))));
  CHECK(is_isomorphic(homotopy_hom(kz(3), kz(3)).module, PresentedModule::cyclic(Z, Z.from_int(3))));
  const Complex contractible = cone(ChainMap::identity(kz(4))).cone;
  CHECK(is_zero_module(homotopy_hom(kz(2), contractible).module));
}

TEST_CASE("Hom_K(K(2), K(2)) by brute force over small chain maps") {
  // Chain endomorphisms of (Z --2--> Z) are pairs (a, a); null-homotopic
  // ones are (2s, 2s). Enumerate a in [-6, 6] and count classes mod homotopy.
  const Complex k = kz(2);
  const HomotopyHomGroup g = homotopy_hom(k, k);
  std::set<std::string> classes;
  for (long a = -6; a <= 6; ++a) {
    const ChainMap f(k, k, {{-1, scalar(Z, a)}, {0, scalar(Z, a)}});
    const Matrix c = g.to_coords(f);
    const bool null = g.module.represents_zero(c);
    CHECK(null == (a % 2 == 0));
    classes.insert(null ? "0" : "1");
  }
  CHECK(classes.size() == 2);
}

TEST_CASE("homotopy_hom(A[0], Y) is H^0(Y)") {
  Rng rng(29);
  for (const Ring& r : {Z, poly_ring(2), truncated_poly(2, 3)}) {
    for (int k = 0; k < 12; ++k) {
      const Complex y = random_complex(r, rng, -1, 3, 3);
      CHECK(is_isomorphic(homotopy_hom(Complex::concentrated(r, 0), y).module, homology(y, 0)));
    }
  }
}

TEST_CASE("null-homotopic maps are found and vanish in Hom_K") {
  Rng rng(30);
  for (int k = 0; k < 12; ++k) {
    const Complex x = random_complex(Z, rng, -1, 3, 2);
    const ChainMap f = random_self_map(x, rng, Z.zero());
    CHECK(find_homotopy(f).has_value());
    const HomotopyHomGroup g = homotopy_hom(x, x);
    CHECK(g.module.represents_zero(g.to_coords(f)));
  }
}

TEST_CASE("truncate_ge examples and degreewise agreement") {
  const Complex k = kz(2);
  CHECK(truncate_ge(k, -5).complex == k);
  CHECK(truncate_ge(k, 1).complex.empty());
  const Complex t = truncate_ge(k, 0).complex;
  CHECK(t == Complex::concentrated(Z, 0));
  Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    const Complex x = random_complex(Z, rng, -2, 4, 2);
    for (int n = -2; n <= 2; ++n) {
      const Truncation tr = truncate_ge(x, n);
      for (int m = n; m <= x.hi(); ++m) {
        CHECK(tr.complex.rank(m) == x.rank(m));
        CHECK(tr.complex.d(m) == x.d(m));
        CHECK(tr.inclusion.component(m) == Matrix::identity(Z, x.rank(m)));
      }
      for (int m = x.lo(); m < n; ++m) CHECK(tr.complex.rank(m) == 0);
      // the cone of the inclusion is concentrated in degrees < n
      const Complex c = cone(tr.inclusion).cone;
      for (int m = n; m <= x.hi(); ++m) CHECK(is_zero_module(homology(c, m)));
    }
  }
}

TEST_CASE("is_acyclic and quasi_iso_check examples") {
  Rng rng(32);
  CHECK(is_acyclic(cone(ChainMap::identity(random_complex(Z, rng, 0, 2, 2))).cone));
  const Complex a = Complex::concentrated(Z, 0);
  CHECK_FALSE(is_acyclic(cone(ChainMap::zero(Complex::zero(Z), a)).cone));
  const Complex k = kz(3);
  CHECK_FALSE(is_acyclic(k));
  CHECK(is_acyclic(kz(-1)));
  CHECK(quasi_iso_check(ChainMap::identity(k)));
  CHECK(quasi_iso_check(ChainMap(a, shift(shift(a, 1), -1), {{0, scalar(Z, -1)}})));
  CHECK_FALSE(quasi_iso_check(ChainMap(a, a, {{0, scalar(Z, 2)}})));
  CHECK(is_acyclic(Complex(Z, -1, {1, 1}, {scalar(Z, 1)})));
}
