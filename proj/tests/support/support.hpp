#pragma once

// Hand-rolled generators and brute-force oracles shared by the unit and
// acceptance tests. Oracles work on concrete finite modules (an abelian
// group with explicit action matrices) and never call the library's
// module algorithms.

#include <cwb/complex.hpp>
#include <cwb/indcat.hpp>
#include <cwb/koszul.hpp>
#include <cwb/matlis.hpp>
#include <cwb/module.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace cwb::test {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// ---------------------------------------------------------------- rings

inline Ring zmod(long m) { return Ring::modular(m); }

inline Ring poly_ring(long p, const std::string& var = "x") {
  return Ring::poly(p > 0 ? Ring::prime_field(p) : Ring::rationals(), var);
}

/// k[x]/(x^n), k = F_p (or Q when p == 0).
inline Ring truncated_poly(long p, unsigned n) {
  const Ring poly = poly_ring(p);
  return Ring::poly_quot(poly, poly.pow(poly.variable(), n));
}

/// F_2[x,y]/(x^2, xy, y^2).
inline Ring square_zero_algebra() {
  AlgebraTable t;
  t.names = {"1", "x", "y"};
  t.product.assign(3, std::vector<std::vector<long>>(3, std::vector<long>(3, 0)));
  for (std::size_t j = 0; j < 3; ++j) {
    t.product[0][j][j] = 1;
    t.product[j][0][j] = 1;
  }
  return Ring::finite_algebra(2, t);
}

// ---------------------------------------------------------------- random elements

inline Elem random_elem(const Ring& r, Rng& rng, long spread = 6) {
  switch (r.kind()) {
    case RingKind::Integers:
      return r.from_int(uniform(rng, -spread, spread));
    case RingKind::Modular:
    case RingKind::PrimeField:
      return r.from_mpz(mpz_class(uniform(rng, 0, r.modulus().get_si() - 1)));
    case RingKind::Rationals: {
      const long den = uniform(rng, 1, 3);
      return r.canonical(Elem(mpq_class(uniform(rng, -spread, spread), den)));
    }
    case RingKind::Poly:
    case RingKind::PolyQuot: {
      const Ring f = r.coefficient_field();
      Elem acc = r.zero();
      const long deg = uniform(rng, 0, 2);
      for (long i = 0; i <= deg; ++i) {
        const Elem c = random_elem(f, rng, 3);
        const Elem term = r.mul(r.parse(f.format(c)), r.pow(r.variable(), static_cast<unsigned long>(i)));
        acc = r.add(acc, term);
      }
      return acc;
    }
    case RingKind::FiniteAlgebra: {
      std::vector<Elem> coords;
      const Ring f = r.cover();
      for (std::size_t j = 0; j < r.algebra_dim(); ++j) coords.push_back(random_elem(f, rng));
      return r.from_cover_coords(coords);
    }
  }
  return r.zero();
}

inline Elem random_unit(const Ring& r, Rng& rng) {
  for (int tries = 0; tries < 64; ++tries) {
    Elem u = random_elem(r, rng, 2);
    if (r.is_unit(u)) return u;
  }
  return r.one();
}

inline Matrix random_matrix(const Ring& r, Rng& rng, std::size_t rows, std::size_t cols, long spread = 6) {
  Matrix m(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_elem(r, rng, spread));
  return m;
}

/// A random invertible matrix and its inverse, built from elementary operations.
struct Invertible {
  Matrix p, p_inv;
};

inline Invertible random_invertible(const Ring& r, Rng& rng, std::size_t n, int ops = 6) {
  Matrix p = Matrix::identity(r, n), q = Matrix::identity(r, n);
  for (int k = 0; k < ops && n > 0; ++k) {
    const std::size_t i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 1);
    Matrix e = Matrix::identity(r, n), e_inv = Matrix::identity(r, n);
    if (i != j) {
      const Elem c = random_elem(r, rng, 2);
      e.set(i, j, c);
      e_inv.set(i, j, r.neg(c));
    } else {
      const Elem u = random_unit(r, rng);
      e.set(i, i, u);
      e_inv.set(i, i, *r.inverse(u));
    }
    p = e * p;
    q = q * e_inv;
  }
  return {p, q};
}

// ---------------------------------------------------------------- random complexes

/// Random bounded complex: a sum of one- and two-term pieces, conjugated by
/// random invertible matrices in every degree. Support lies in
/// [lo, lo + width - 1]; every rank is at most max_rank.
inline Complex random_complex(const Ring& r, Rng& rng, int lo, int width, std::size_t max_rank) {
  std::vector<std::size_t> ranks(width, 0);
  struct Piece {
    int at;  // offset of the first term
    bool two;
    Elem a;
  };
  std::vector<Piece> pieces;
  const int attempts = static_cast<int>(uniform(rng, 1, 2 * width));
  for (int k = 0; k < attempts; ++k) {
    const bool two = width > 1 && uniform(rng, 0, 2) > 0;
    const int at = static_cast<int>(uniform(rng, 0, width - (two ? 2 : 1)));
    if (ranks[at] >= max_rank || (two && ranks[at + 1] >= max_rank)) continue;
    pieces.push_back({at, two, random_elem(r, rng, 4)});
    ++ranks[at];
    if (two) ++ranks[at + 1];
  }
  std::vector<Matrix> diffs;
  for (int k = 0; k + 1 < width; ++k) diffs.emplace_back(r, ranks[k + 1], ranks[k]);
  std::vector<std::size_t> used(width, 0);
  for (const auto& pc : pieces) {
    const std::size_t src = used[pc.at]++;
    if (pc.two) {
      const std::size_t tgt = used[pc.at + 1]++;
      diffs[pc.at].set(tgt, src, pc.a);
    }
  }
  std::vector<Invertible> basis;
  for (int k = 0; k < width; ++k) basis.push_back(random_invertible(r, rng, ranks[k]));
  for (int k = 0; k + 1 < width; ++k) diffs[k] = basis[k + 1].p * diffs[k] * basis[k].p_inv;
  return Complex(r, lo, ranks, diffs);
}

/// Chain map homotopic to c * id: c * id + d h + h d for a random h.
inline ChainMap random_self_map(const Complex& x, Rng& rng, const Elem& c) {
  const Ring& r = x.ring();
  std::vector<std::pair<int, Matrix>> h;
  for (int n = x.lo(); n <= x.hi() + 1; ++n) h.emplace_back(n, random_matrix(r, rng, x.rank(n - 1), x.rank(n), 2));
  auto hom = [&](int n) {
    for (const auto& [k, m] : h)
      if (k == n) return m;
    return Matrix(r, x.rank(n - 1), x.rank(n));
  };
  std::vector<std::pair<int, Matrix>> comps;
  for (int n = x.lo(); n <= x.hi(); ++n) {
    Matrix f = scale(c, Matrix::identity(r, x.rank(n)));
    if (x.rank(n - 1) > 0) f = f + x.d(n - 1) * hom(n);
    if (x.rank(n + 1) > 0) f = f + hom(n + 1) * x.d(n);
    comps.emplace_back(n, f);
  }
  return ChainMap(x, x, comps);
}

// ---------------------------------------------------------------- concrete modules

using IntMat = std::vector<std::vector<long>>;  // k x k, column j = image of e_j
using Vec = std::vector<long>;

/// A finite module given concretely: the group Z/orders[0] + ... with the
/// maximal ideal acting through `ops` (ops generate the ring over Z together
/// with 1), and the library presentation whose generators are the group
/// generators.
struct Concrete {
  Ring ring;
  long q = 2;  // residue field size
  Vec orders;
  std::vector<IntMat> ops;
  PresentedModule module;

  std::size_t rank() const { return orders.size(); }

  Vec normalize(Vec v) const {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = ((v[i] % orders[i]) + orders[i]) % orders[i];
    return v;
  }
  Vec apply(const IntMat& m, const Vec& v) const {
    Vec w(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) w[i] += m[i][j] * v[j];
    return normalize(w);
  }
  Vec plus(const Vec& a, const Vec& b) const {
    Vec w(rank());
    for (std::size_t i = 0; i < rank(); ++i) w[i] = a[i] + b[i];
    return normalize(w);
  }
  Vec times(long c, const Vec& a) const {
    Vec w(rank());
    for (std::size_t i = 0; i < rank(); ++i) w[i] = c * a[i];
    return normalize(w);
  }
  bool is_zero(const Vec& v) const {
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
  }
  std::vector<Vec> elements() const {
    std::vector<Vec> out{Vec(rank(), 0)};
    for (std::size_t i = 0; i < rank(); ++i) {
      std::vector<Vec> next;
      for (const auto& v : out)
        for (long c = 0; c < orders[i]; ++c) {
          Vec w = v;
          w[i] = c;
          next.push_back(w);
        }
      out = std::move(next);
    }
    return out;
  }
  std::size_t size() const {
    std::size_t s = 1;
    for (long o : orders) s *= static_cast<std::size_t>(o);
    return s;
  }
  /// Elements killed by the maximal ideal.
  bool in_socle(const Vec& v) const {
    return std::all_of(ops.begin(), ops.end(), [&](const IntMat& m) { return is_zero(apply(m, v)); });
  }
};

inline IntMat scalar_mat(std::size_t k, long c) {
  IntMat m(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = c;
  return m;
}

/// Z/p^N-module Z/p^a_1 + ... (or k[x]/(x^N) with a cyclic decomposition
/// given by Jordan blocks when `ring` is a truncated polynomial ring).
inline Concrete concrete_chain(const Ring& ring, long p, const std::vector<unsigned>& parts) {
  Concrete c{ring, p, {}, {}, {}};
  if (ring.kind() == RingKind::Modular) {
    std::vector<Elem> d;
    for (unsigned a : parts) {
      long o = 1;
      for (unsigned k = 0; k < a; ++k) o *= p;
      c.orders.push_back(o);
      d.push_back(ring.from_int(o));
    }
    c.ops.push_back(scalar_mat(parts.size(), p));
    c.module = PresentedModule::diagonal(ring, d);
    return c;
  }
  // Jordan blocks of x over F_p: basis e, xe, x^2 e, ...
  std::size_t k = 0;
  for (unsigned a : parts) k += a;
  IntMat x(k, std::vector<long>(k, 0));
  std::size_t at = 0;
  for (unsigned a : parts) {
    for (unsigned i = 0; i + 1 < a; ++i) x[at + i + 1][at + i] = 1;
    at += a;
  }
  c.orders.assign(k, p);
  c.ops.push_back(x);
  return c;
}

/// Presentation over `ring` of F_p^k with the given operators standing for
/// the ring elements `gens`: generators e_j, relations g e_j - sum_i G_ij e_i.
inline PresentedModule present_vector_module(const Ring& ring, std::size_t k, const std::vector<IntMat>& ops,
                                             const std::vector<Elem>& gens) {
  Matrix rel(ring, k, k * ops.size());
  std::size_t col = 0;
  for (std::size_t r = 0; r < ops.size(); ++r)
    for (std::size_t j = 0; j < k; ++j, ++col) {
      for (std::size_t i = 0; i < k; ++i)
        if (ops[r][i][j] != 0) rel.set(i, col, ring.from_int(-ops[r][i][j]));
      rel.set(j, col, ring.add(rel(j, col), gens[r]));
    }
  return PresentedModule(ring, k, rel);
}

inline IntMat mat_mul_mod(const IntMat& a, const IntMat& b, long p) {
  const std::size_t n = a.size();
  IntMat c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long s = 0;
      for (std::size_t l = 0; l < n; ++l) s += a[i][l] * b[l][j];
      c[i][j] = ((s % p) + p) % p;
    }
  return c;
}

/// Random invertible matrix over F_p and its inverse.
inline std::pair<IntMat, IntMat> random_gl(Rng& rng, std::size_t n, long p) {
  IntMat a = scalar_mat(n, 1), b = scalar_mat(n, 1);
  for (int k = 0; k < 8 && n > 1; ++k) {
    const std::size_t i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 1);
    if (i == j) continue;
    const long c = uniform(rng, 1, p - 1);
    IntMat e = scalar_mat(n, 1), ei = scalar_mat(n, 1);
    e[i][j] = c;
    ei[i][j] = p - c;
    a = mat_mul_mod(e, a, p);
    b = mat_mul_mod(b, ei, p);
  }
  return {a, b};
}

/// Vector-space module with operators conjugated by a random change of basis.
inline Concrete concrete_vector(const Ring& ring, long p, std::size_t k, std::vector<IntMat> ops,
                                const std::vector<Elem>& gens, Rng* rng) {
  if (rng && k > 0) {
    auto [g, gi] = random_gl(*rng, k, p);
    for (auto& m : ops) m = mat_mul_mod(mat_mul_mod(g, m, p), gi, p);
  }
  Concrete c{ring, p, Vec(k, p), ops, present_vector_module(ring, k, ops, gens)};
  return c;
}

/// k[x]/(x^N)-module with Jordan type `parts`, optionally in a random basis.
inline Concrete concrete_truncated(const Ring& ring, long p, const std::vector<unsigned>& parts, Rng* rng) {
  Concrete base = concrete_chain(ring, p, parts);
  return concrete_vector(ring, p, base.rank(), base.ops, {ring.variable()}, rng);
}

/// Module over F_2[x,y]/(x^2,xy,y^2) from the pair of maps T -> B
/// (b x a matrices): V = T + B, x and y send T into B and kill B.
inline Concrete concrete_square_zero(const Ring& ring, std::size_t a, std::size_t b, const IntMat& x1, const IntMat& y1,
                                     Rng* rng) {
  const std::size_t k = a + b;
  IntMat x(k, std::vector<long>(k, 0)), y = x;
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < a; ++j) {
      x[a + i][j] = x1[i][j];
      y[a + i][j] = y1[i][j];
    }
  return concrete_vector(ring, 2, k, {x, y}, {ring.basis_element(1), ring.basis_element(2)}, rng);
}

// ---------------------------------------------------------------- oracles

/// A homomorphism given by the images of the group generators.
using ConcreteMap = std::vector<Vec>;

inline Vec apply_map(const Concrete& m, const Concrete& n, const ConcreteMap& f, const Vec& v) {
  Vec w(n.rank(), 0);
  for (std::size_t j = 0; j < m.rank(); ++j) w = n.plus(w, n.times(v[j], f[j]));
  return w;
}

/// Every module homomorphism M -> N, by enumeration.
inline std::vector<ConcreteMap> enumerate_homs(const Concrete& m, const Concrete& n) {
  const std::vector<Vec> targets = n.elements();
  std::vector<std::vector<Vec>> cand(m.rank());
  for (std::size_t j = 0; j < m.rank(); ++j)
    for (const auto& y : targets)
      if (n.is_zero(n.times(m.orders[j], y))) cand[j].push_back(y);
  std::vector<ConcreteMap> out;
  ConcreteMap cur(m.rank());
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == m.rank()) {
      for (std::size_t r = 0; r < m.ops.size(); ++r)
        for (std::size_t g = 0; g < m.rank(); ++g) {
          Vec eg(m.rank(), 0);
          eg[g] = 1;
          if (apply_map(m, n, cur, m.apply(m.ops[r], eg)) != n.apply(n.ops[r], cur[g])) return;
        }
      out.push_back(cur);
      return;
    }
    for (const auto& y : cand[j]) {
      cur[j] = y;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

inline ModuleMorphism to_library(const Concrete& m, const Concrete& n, const ConcreteMap& f) {
  Matrix mat(m.ring, n.rank(), m.rank());
  for (std::size_t j = 0; j < m.rank(); ++j)
    for (std::size_t i = 0; i < n.rank(); ++i) mat.set(i, j, m.ring.from_int(f[j][i]));
  return ModuleMorphism(m.module, n.module, mat);
}

struct KernelCount {
  std::size_t kernel = 0, kernel_socle = 0, image = 0, coker_socle = 0;
};

/// Sizes of ker f, soc ker f, im f and soc coker f, by enumeration.
inline KernelCount count_kernel(const Concrete& m, const Concrete& n, const ConcreteMap& f) {
  KernelCount k;
  std::set<Vec> img;
  for (const auto& v : m.elements()) {
    const Vec w = apply_map(m, n, f, v);
    img.insert(w);
    if (n.is_zero(w)) {
      ++k.kernel;
      if (m.in_socle(v)) ++k.kernel_socle;
    }
  }
  k.image = img.size();
  std::size_t lifted = 0;  // {y : m y in im f}
  for (const auto& y : n.elements()) {
    bool ok = true;
    for (const auto& op : n.ops)
      if (!img.count(n.apply(op, y))) {
        ok = false;
        break;
      }
    if (ok) ++lifted;
  }
  k.coker_socle = lifted / k.image;
  return k;
}

/// q^length(M), or 0 for infinite length.
inline std::size_t library_size(const PresentedModule& m, long q) {
  const auto len = length(m);
  if (!len) return 0;
  std::size_t s = 1;
  for (std::size_t i = 0; i < *len; ++i) s *= static_cast<std::size_t>(q);
  return s;
}

// ---------------------------------------------------------------- partitions and orbits

/// Partitions of n with parts at most `max_part`, in decreasing order.
inline std::vector<std::vector<unsigned>> partitions(unsigned n, unsigned max_part) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned a = std::min(left, cap); a >= 1; --a) {
      cur.push_back(a);
      rec(left - a, a);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

/// All invertible n x n matrices over F_2.
inline std::vector<IntMat> gl2(std::size_t n) {
  std::vector<IntMat> out;
  const std::size_t bits = n * n;
  for (std::uint32_t code = 0; code < (1u << bits); ++code) {
    IntMat m(n, std::vector<long>(n, 0));
    for (std::size_t b = 0; b < bits; ++b) m[b / n][b % n] = (code >> b) & 1;
    // rank over F_2 by elimination
    IntMat w = m;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < n; ++c) {
      std::size_t piv = rank;
      while (piv < n && w[piv][c] == 0) ++piv;
      if (piv == n) continue;
      std::swap(w[piv], w[rank]);
      for (std::size_t i = 0; i < n; ++i)
        if (i != rank && w[i][c])
          for (std::size_t l = 0; l < n; ++l) w[i][l] ^= w[rank][l];
      ++rank;
    }
    if (rank == n) out.push_back(m);
  }
  return out;
}

inline IntMat rect_mul2(const IntMat& a, const IntMat& b, std::size_t rows, std::size_t inner, std::size_t cols) {
  IntMat c(rows, std::vector<long>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      long s = 0;
      for (std::size_t l = 0; l < inner; ++l) s += a[i][l] * b[l][j];
      c[i][j] = s & 1;
    }
  return c;
}

/// Isomorphism classes of F_2[x,y]/(x^2,xy,y^2)-modules of dimension
/// <= max_dim. With B the socle and T a complement, a module is the pair
/// of maps T -> B induced by x and y, with no common kernel; classes are
/// orbits under GL(T) x GL(B).
struct SquareZeroClass {
  std::size_t a = 0, b = 0;
  IntMat x1, y1;
};

inline std::vector<SquareZeroClass> square_zero_classes(std::size_t max_dim) {
  std::vector<SquareZeroClass> out;
  for (std::size_t d = 0; d <= max_dim; ++d)
    for (std::size_t a = 0; a <= d; ++a) {
      const std::size_t b = d - a;
      if (a > 0 && b == 0) continue;  // T would lie in the socle
      const std::size_t bits = 2 * a * b;
      const auto ga = gl2(a), gb = gl2(b);
      std::set<std::vector<long>> seen;
      for (std::uint32_t code = 0; code < (1u << bits); ++code) {
        IntMat x(b, std::vector<long>(a, 0)), y = x;
        for (std::size_t k = 0; k < a * b; ++k) {
          x[k / a][k % a] = (code >> k) & 1;
          y[k / a][k % a] = (code >> (a * b + k)) & 1;
        }
        // common kernel must vanish: the stacked 2b x a matrix has rank a
        bool injective = true;
        for (std::uint32_t v = 1; v < (1u << a); ++v) {
          bool zero = true;
          for (std::size_t i = 0; i < b && zero; ++i) {
            long sx = 0, sy = 0;
            for (std::size_t j = 0; j < a; ++j)
              if ((v >> j) & 1) {
                sx ^= x[i][j];
                sy ^= y[i][j];
              }
            zero = sx == 0 && sy == 0;
          }
          if (zero) {
            injective = false;
            break;
          }
        }
        if (!injective) continue;
        std::vector<long> best;
        for (const auto& p : gb)
          for (const auto& qm : ga) {
            const IntMat px = rect_mul2(rect_mul2(p, x, b, b, a), qm, b, a, a);
            const IntMat py = rect_mul2(rect_mul2(p, y, b, b, a), qm, b, a, a);
            std::vector<long> key;
            for (const auto& row : px) key.insert(key.end(), row.begin(), row.end());
            for (const auto& row : py) key.insert(key.end(), row.begin(), row.end());
            if (best.empty() || key < best) best = key;
          }
        if (seen.insert(best).second) out.push_back({a, b, x, y});
      }
    }
  return out;
}

}  // namespace cwb::test
