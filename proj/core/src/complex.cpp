#include "cwb/complex.hpp"

#include <algorithm>
#include <sstream>

namespace cwb {

namespace {

int sign_of(int n) { return (n % 2 == 0) ? 1 : -1; }

Elem signed_one(const Ring& R, int n) { return sign_of(n) > 0 ? R.one() : R.neg(R.one()); }

}  // namespace

// ---------------------------------------------------------------- Complex

Complex::Complex(Ring ring) : ring_(std::move(ring)) {}

Complex::Complex(Ring ring, int lo, std::vector<std::size_t> ranks, std::vector<Matrix> diffs)
    : ring_(std::move(ring)), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
  if (ranks_.empty()) {
    diffs_.clear();
    lo_ = 0;
    return;
  }
  if (diffs_.size() + 1 != ranks_.size())
    throw InvalidArgument("complex with " + std::to_string(ranks_.size()) + " terms needs " +
                          std::to_string(ranks_.size() - 1) + " differentials, got " +
                          std::to_string(diffs_.size()));
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    const Matrix& m = diffs_[k];
    if (m.ring() != ring_) throw RingMismatch("differential over " + m.ring().name());
    if (m.rows() != ranks_[k + 1] || m.cols() != ranks_[k])
      throw InvalidArgument("differential in degree " + std::to_string(lo_ + static_cast<int>(k)) + " is " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                            std::to_string(ranks_[k + 1]) + "x" + std::to_string(ranks_[k]));
  }
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
    if (!(diffs_[k + 1] * diffs_[k]).is_zero())
      throw InvalidArgument("d o d != 0 in degree " + std::to_string(lo_ + static_cast<int>(k)));
  trim();
}

void Complex::trim() {
  while (!ranks_.empty() && ranks_.back() == 0) {
    ranks_.pop_back();
    if (!diffs_.empty()) diffs_.pop_back();
  }
  std::size_t drop = 0;
  while (drop < ranks_.size() && ranks_[drop] == 0) ++drop;
  if (drop > 0) {
    ranks_.erase(ranks_.begin(), ranks_.begin() + static_cast<long>(drop));
    diffs_.erase(diffs_.begin(), diffs_.begin() + static_cast<long>(std::min(drop, diffs_.size())));
    lo_ += static_cast<int>(drop);
  }
  if (ranks_.empty()) {
    lo_ = 0;
    diffs_.clear();
  }
}

Complex Complex::concentrated(const Ring& ring, int degree, std::size_t rank) {
  return Complex(ring, degree, {rank}, {});
}

Complex Complex::two_term(const Ring& ring, int lo, const Matrix& d) {
  return Complex(ring, lo, {d.cols(), d.rows()}, {d});
}

std::size_t Complex::rank(int n) const {
  if (ranks_.empty() || n < lo_ || n > hi()) return 0;
  return ranks_[static_cast<std::size_t>(n - lo_)];
}

Matrix Complex::d(int n) const {
  if (ranks_.empty() || n < lo_ || n >= hi()) return Matrix(ring_, rank(n + 1), rank(n));
  return diffs_[static_cast<std::size_t>(n - lo_)];
}

std::size_t Complex::total_rank() const {
  std::size_t t = 0;
  for (auto r : ranks_) t += r;
  return t;
}

std::string Complex::str() const {
  if (empty()) return "0";
  std::ostringstream os;
  for (int n = lo(); n <= hi(); ++n) {
    os << "[" << n << "]A^" << rank(n);
    if (n < hi()) os << " --" << d(n).str() << "--> ";
  }
  return os.str();
}

bool operator==(const Complex& a, const Complex& b) {
  return a.ring_ == b.ring_ && a.lo_ == b.lo_ && a.ranks_ == b.ranks_ && a.diffs_ == b.diffs_;
}

// ---------------------------------------------------------------- ChainMap

ChainMap::ChainMap(Complex source, Complex target, std::vector<std::pair<int, Matrix>> components, Unchecked)
    : src_(std::move(source)), tgt_(std::move(target)), comps_(std::move(components)) {
  if (src_.ring() != tgt_.ring()) throw RingMismatch("chain map between complexes over different rings");
  for (const auto& [n, m] : comps_)
    if (m.rows() != tgt_.rank(n) || m.cols() != src_.rank(n))
      throw InvalidArgument("chain map component in degree " + std::to_string(n) + " has wrong shape");
}

ChainMap::ChainMap(Complex source, Complex target, const std::vector<std::pair<int, Matrix>>& components)
    : ChainMap(std::move(source), std::move(target), components, Unchecked{}) {
  if (src_.empty() || tgt_.empty()) return;
  const int lo = std::min(src_.lo(), tgt_.lo()) - 1;
  const int hi = std::max(src_.hi(), tgt_.hi());
  for (int n = lo; n <= hi; ++n)
    if (tgt_.d(n) * component(n) != component(n + 1) * src_.d(n))
      throw InvalidArgument("components do not commute with the differentials in degree " + std::to_string(n));
}

ChainMap unchecked_chain_map(Complex source, Complex target, std::vector<std::pair<int, Matrix>> components) {
  return ChainMap(std::move(source), std::move(target), std::move(components), ChainMap::Unchecked{});
}

Matrix ChainMap::component(int n) const {
  for (const auto& [k, m] : comps_)
    if (k == n) return m;
  return Matrix(src_.ring(), tgt_.rank(n), src_.rank(n));
}

ChainMap ChainMap::identity(const Complex& x) {
  std::vector<std::pair<int, Matrix>> c;
  for (int n = x.lo(); n <= x.hi(); ++n) c.emplace_back(n, Matrix::identity(x.ring(), x.rank(n)));
  return unchecked_chain_map(x, x, std::move(c));
}

ChainMap ChainMap::zero(const Complex& x, const Complex& y) { return unchecked_chain_map(x, y, {}); }

namespace {

std::pair<int, int> joint_range(const Complex& a, const Complex& b) {
  if (a.empty() && b.empty()) return {0, -1};
  if (a.empty()) return {b.lo(), b.hi()};
  if (b.empty()) return {a.lo(), a.hi()};
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

}  // namespace

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  std::vector<std::pair<int, Matrix>> c;
  if (!f.source().empty())
    for (int n = f.source().lo(); n <= f.source().hi(); ++n) c.emplace_back(n, g.component(n) * f.component(n));
  return unchecked_chain_map(f.source(), g.target(), std::move(c));
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
  std::vector<std::pair<int, Matrix>> c;
  auto [lo, hi] = joint_range(f.source(), f.target());
  for (int n = lo; n <= hi; ++n) c.emplace_back(n, f.component(n) + g.component(n));
  return unchecked_chain_map(f.source(), f.target(), std::move(c));
}

ChainMap scale(const Elem& a, const ChainMap& f) {
  std::vector<std::pair<int, Matrix>> c;
  auto [lo, hi] = joint_range(f.source(), f.target());
  for (int n = lo; n <= hi; ++n) c.emplace_back(n, scale(a, f.component(n)));
  return unchecked_chain_map(f.source(), f.target(), std::move(c));
}

bool same_components(const ChainMap& f, const ChainMap& g) {
  auto [lo, hi] = joint_range(f.source(), f.target());
  for (int n = lo; n <= hi; ++n)
    if (f.component(n) != g.component(n)) return false;
  return true;
}

// ---------------------------------------------------------------- shift / cone

Complex shift(const Complex& x, int k) {
  if (x.empty()) return x;
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  const Elem s = signed_one(x.ring(), k);
  for (int n = x.lo(); n <= x.hi(); ++n) {
    ranks.push_back(x.rank(n));
    if (n < x.hi()) diffs.push_back(scale(s, x.d(n)));
  }
  return Complex(x.ring(), x.lo() - k, ranks, diffs);
}

ChainMap shift(const ChainMap& f, int k) {
  std::vector<std::pair<int, Matrix>> c;
  auto [lo, hi] = joint_range(f.source(), f.target());
  for (int n = lo; n <= hi; ++n) c.emplace_back(n - k, f.component(n));
  return unchecked_chain_map(shift(f.source(), k), shift(f.target(), k), std::move(c));
}

ConeResult cone(const ChainMap& f) {
  const Complex& X = f.source();
  const Complex& Y = f.target();
  const Ring& R = X.ring();
  if (X.empty() && Y.empty()) return {Complex(R), ChainMap::zero(Y, Complex(R)), ChainMap::zero(Complex(R), Complex(R))};
  int lo = Y.empty() ? X.lo() - 1 : Y.lo();
  int hi = Y.empty() ? X.hi() - 1 : Y.hi();
  if (!X.empty()) {
    lo = std::min(lo, X.lo() - 1);
    hi = std::max(hi, X.hi() - 1);
  }
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    ranks.push_back(X.rank(n + 1) + Y.rank(n));
    if (n == hi) break;
    Matrix d(R, X.rank(n + 2) + Y.rank(n + 1), X.rank(n + 1) + Y.rank(n));
    d.set_block(0, 0, -X.d(n + 1));
    d.set_block(X.rank(n + 2), 0, f.component(n + 1));
    d.set_block(X.rank(n + 2), X.rank(n + 1), Y.d(n));
    diffs.push_back(std::move(d));
  }
  Complex C(R, lo, ranks, diffs);
  const Complex X1 = shift(X, 1);
  std::vector<std::pair<int, Matrix>> inc, proj;
  for (int n = lo; n <= hi; ++n) {
    Matrix i(R, C.rank(n), Y.rank(n));
    i.set_block(X.rank(n + 1), 0, Matrix::identity(R, Y.rank(n)));
    inc.emplace_back(n, i);
    Matrix p(R, X.rank(n + 1), C.rank(n));
    p.set_block(0, 0, Matrix::identity(R, X.rank(n + 1)));
    proj.emplace_back(n, p);
  }
  return ConeResult{C, unchecked_chain_map(Y, C, std::move(inc)), unchecked_chain_map(C, X1, std::move(proj))};
}

ChainMap cone_map(const ChainMap& f, const ChainMap& f2, const ChainMap& a, const ChainMap& b) {
  if (!same_components(compose(b, f), compose(f2, a)))
    throw InvalidArgument("cone_map needs a strictly commuting square");
  const ConeResult c1 = cone(f), c2 = cone(f2);
  const Ring& R = f.source().ring();
  std::vector<std::pair<int, Matrix>> comps;
  auto [lo, hi] = joint_range(c1.cone, c2.cone);
  for (int n = lo; n <= hi; ++n) {
    Matrix m(R, c2.cone.rank(n), c1.cone.rank(n));
    m.set_block(0, 0, a.component(n + 1));
    m.set_block(f2.source().rank(n + 1), f.source().rank(n + 1), b.component(n));
    comps.emplace_back(n, m);
  }
  return unchecked_chain_map(c1.cone, c2.cone, std::move(comps));
}

ComplexSum direct_sum(const std::vector<Complex>& parts) {
  if (parts.empty()) throw InvalidArgument("direct sum of no complexes");
  const Ring& R = parts[0].ring();
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& p : parts) {
    if (p.ring() != R) throw RingMismatch("direct sum of complexes over different rings");
    if (p.empty()) continue;
    lo = any ? std::min(lo, p.lo()) : p.lo();
    hi = any ? std::max(hi, p.hi()) : p.hi();
    any = true;
  }
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    std::size_t r = 0;
    for (const auto& p : parts) r += p.rank(n);
    ranks.push_back(r);
    if (n == hi) break;
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.d(n));
    diffs.push_back(block_diag(R, blocks));
  }
  ComplexSum out{Complex(R, lo, ranks, diffs), {}, {}};
  std::vector<std::size_t> offset(static_cast<std::size_t>(std::max(0, hi - lo + 1)), 0);
  for (const auto& p : parts) {
    std::vector<std::pair<int, Matrix>> inj, proj;
    for (int n = lo; n <= hi; ++n) {
      auto& off = offset[static_cast<std::size_t>(n - lo)];
      Matrix i(R, out.sum.rank(n), p.rank(n));
      i.set_block(off, 0, Matrix::identity(R, p.rank(n)));
      off += p.rank(n);
      proj.emplace_back(n, i.transpose());
      inj.emplace_back(n, std::move(i));
    }
    out.injections.push_back(unchecked_chain_map(p, out.sum, std::move(inj)));
    out.projections.push_back(unchecked_chain_map(out.sum, p, std::move(proj)));
  }
  return out;
}

// ---------------------------------------------------------------- tensor / Hom

namespace {

// Offset of block p in (X (x) Y)^n, blocks ordered by ascending p.
std::size_t tensor_offset(const Complex& x, const Complex& y, int n, int p) {
  std::size_t off = 0;
  for (int q = x.lo(); q < p; ++q) off += x.rank(q) * y.rank(n - q);
  return off;
}

std::size_t tensor_rank(const Complex& x, const Complex& y, int n) {
  return x.empty() ? 0 : tensor_offset(x, y, n, x.hi() + 1);
}

// Offset of block p (maps X^p -> Y^(p+n)) in Hom(X, Y)^n.
std::size_t hom_offset(const Complex& x, const Complex& y, int n, int p) {
  std::size_t off = 0;
  for (int q = x.lo(); q < p; ++q) off += x.rank(q) * y.rank(q + n);
  return off;
}

std::size_t hom_rank(const Complex& x, const Complex& y, int n) {
  return x.empty() ? 0 : hom_offset(x, y, n, x.hi() + 1);
}

// Row-major vectorization.
Matrix rvec(const Matrix& m) { return vec(m.transpose()); }
Matrix unrvec(const Matrix& v, std::size_t rows, std::size_t cols) { return unvec(v, cols, rows).transpose(); }

}  // namespace

Complex tensor_complex(const Complex& x, const Complex& y) {
  if (x.ring() != y.ring()) throw RingMismatch("tensor of complexes over different rings");
  const Ring& R = x.ring();
  if (x.empty() || y.empty()) return Complex(R);
  const int lo = x.lo() + y.lo(), hi = x.hi() + y.hi();
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    ranks.push_back(tensor_rank(x, y, n));
    if (n == hi) break;
    Matrix d(R, tensor_rank(x, y, n + 1), tensor_rank(x, y, n));
    for (int p = x.lo(); p <= x.hi(); ++p) {
      const int q = n - p;
      if (x.rank(p) * y.rank(q) == 0) continue;
      const std::size_t col = tensor_offset(x, y, n, p);
      if (x.rank(p + 1) > 0)
        d.set_block(tensor_offset(x, y, n + 1, p + 1), col, kron(x.d(p), Matrix::identity(R, y.rank(q))));
      if (y.rank(q + 1) > 0)
        d.set_block(tensor_offset(x, y, n + 1, p), col,
                    scale(signed_one(R, p), kron(Matrix::identity(R, x.rank(p)), y.d(q))));
    }
    diffs.push_back(std::move(d));
  }
  return Complex(R, lo, ranks, diffs);
}

ChainMap tensor_map(const ChainMap& f, const ChainMap& g) {
  const Complex s = tensor_complex(f.source(), g.source());
  const Complex t = tensor_complex(f.target(), g.target());
  const Ring& R = s.ring();
  std::vector<std::pair<int, Matrix>> comps;
  if (s.empty() || t.empty()) return unchecked_chain_map(s, t, {});
  for (int n = s.lo(); n <= s.hi(); ++n) {
    Matrix m(R, t.rank(n), s.rank(n));
    for (int p = f.source().lo(); p <= f.source().hi(); ++p) {
      const int q = n - p;
      if (f.source().rank(p) * g.source().rank(q) == 0) continue;
      if (f.target().rank(p) * g.target().rank(q) == 0) continue;
      m.set_block(tensor_offset(f.target(), g.target(), n, p), tensor_offset(f.source(), g.source(), n, p),
                  kron(f.component(p), g.component(q)));
    }
    comps.emplace_back(n, std::move(m));
  }
  return unchecked_chain_map(s, t, std::move(comps));
}

Complex hom_complex(const Complex& x, const Complex& y) {
  if (x.ring() != y.ring()) throw RingMismatch("Hom complex over different rings");
  const Ring& R = x.ring();
  if (x.empty() || y.empty()) return Complex(R);
  const int lo = y.lo() - x.hi(), hi = y.hi() - x.lo();
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    ranks.push_back(hom_rank(x, y, n));
    if (n == hi) break;
    Matrix D(R, hom_rank(x, y, n + 1), hom_rank(x, y, n));
    for (int p = x.lo(); p <= x.hi(); ++p) {
      const std::size_t a = y.rank(p + n), b = x.rank(p);
      if (a * b == 0) continue;
      const std::size_t col = hom_offset(x, y, n, p);
      if (y.rank(p + n + 1) > 0) D.set_block(hom_offset(x, y, n + 1, p), col, kron(y.d(p + n), Matrix::identity(R, b)));
      if (x.rank(p - 1) > 0)
        D.set_block(hom_offset(x, y, n + 1, p - 1), col,
                    scale(signed_one(R, n + 1), kron(Matrix::identity(R, a), x.d(p - 1).transpose())));
    }
    diffs.push_back(std::move(D));
  }
  return Complex(R, lo, ranks, diffs);
}

Matrix hom_vector(const Complex& x, const Complex& y, int n, const std::vector<std::pair<int, Matrix>>& maps) {
  const Ring& R = x.ring();
  Matrix v(R, hom_rank(x, y, n), 1);
  for (const auto& [p, m] : maps) {
    if (x.rank(p) * y.rank(p + n) == 0) continue;
    if (m.rows() != y.rank(p + n) || m.cols() != x.rank(p)) throw InvalidArgument("hom_vector component has wrong shape");
    v.set_block(hom_offset(x, y, n, p), 0, rvec(m));
  }
  return v;
}

Matrix hom_component(const Complex& x, const Complex& y, int n, const Matrix& v, int p) {
  const std::size_t a = y.rank(p + n), b = x.rank(p);
  if (a * b == 0) return Matrix(x.ring(), a, b);
  return unrvec(v.block(hom_offset(x, y, n, p), a * b, 0, 1), a, b);
}

ChainMap hom_complex_pre(const ChainMap& g, const Complex& y) {
  const Complex& X2 = g.source();
  const Complex& X = g.target();
  const Complex s = hom_complex(X, y), t = hom_complex(X2, y);
  const Ring& R = y.ring();
  std::vector<std::pair<int, Matrix>> comps;
  auto [lo, hi] = joint_range(s, t);
  for (int n = lo; n <= hi; ++n) {
    Matrix m(R, t.rank(n), s.rank(n));
    if (!X.empty() && !X2.empty())
      for (int p = std::min(X.lo(), X2.lo()); p <= std::max(X.hi(), X2.hi()); ++p) {
        const std::size_t a = y.rank(p + n);
        if (a * X.rank(p) * X2.rank(p) == 0) continue;
        m.set_block(hom_offset(X2, y, n, p), hom_offset(X, y, n, p),
                    kron(Matrix::identity(R, a), g.component(p).transpose()));
      }
    comps.emplace_back(n, std::move(m));
  }
  return unchecked_chain_map(s, t, std::move(comps));
}

ChainMap hom_complex_post(const Complex& x, const ChainMap& h) {
  const Complex& Y = h.source();
  const Complex& Y2 = h.target();
  const Complex s = hom_complex(x, Y), t = hom_complex(x, Y2);
  const Ring& R = x.ring();
  std::vector<std::pair<int, Matrix>> comps;
  auto [lo, hi] = joint_range(s, t);
  for (int n = lo; n <= hi; ++n) {
    Matrix m(R, t.rank(n), s.rank(n));
    if (!x.empty())
      for (int p = x.lo(); p <= x.hi(); ++p) {
        if (x.rank(p) * Y.rank(p + n) * Y2.rank(p + n) == 0) continue;
        m.set_block(hom_offset(x, Y2, n, p), hom_offset(x, Y, n, p),
                    kron(h.component(p + n), Matrix::identity(R, x.rank(p))));
      }
    comps.emplace_back(n, std::move(m));
  }
  return unchecked_chain_map(s, t, std::move(comps));
}

// ---------------------------------------------------------------- homology

SubquotientModule homology_data(const Complex& x, int n) {
  const Ring& R = x.ring();
  const Matrix K = matrix_kernel(x.d(n), Matrix(R, x.rank(n + 1), 0));
  return subquotient(R, K, x.d(n - 1));
}

PresentedModule homology(const Complex& x, int n) { return homology_data(x, n).module; }

ModuleMorphism homology_map(const ChainMap& f, int n) {
  const auto hs = homology_data(f.source(), n);
  const auto ht = homology_data(f.target(), n);
  return unchecked_morphism(hs.module, ht.module, ht.coordinates(f.component(n) * hs.generators));
}

bool is_acyclic(const Complex& x) {
  if (x.empty()) return true;
  for (int n = x.lo(); n <= x.hi(); ++n)
    if (!is_zero_module(homology(x, n))) return false;
  return true;
}

bool quasi_iso_check(const ChainMap& f) { return is_acyclic(cone(f).cone); }

// ---------------------------------------------------------------- homotopy

ChainMap HomotopyHomGroup::to_chain_map(const Matrix& coords) const {
  const Matrix v = h0.generators * coords;
  std::vector<std::pair<int, Matrix>> comps;
  if (!source.empty())
    for (int p = source.lo(); p <= source.hi(); ++p) comps.emplace_back(p, hom_component(source, target, 0, v, p));
  return unchecked_chain_map(source, target, std::move(comps));
}

Matrix HomotopyHomGroup::to_coords(const ChainMap& f) const {
  std::vector<std::pair<int, Matrix>> comps;
  if (!source.empty())
    for (int p = source.lo(); p <= source.hi(); ++p) comps.emplace_back(p, f.component(p));
  return h0.coordinates(hom_vector(source, target, 0, comps));
}

HomotopyHomGroup homotopy_hom(const Complex& x, const Complex& y) {
  HomotopyHomGroup g;
  g.source = x;
  g.target = y;
  g.hom = hom_complex(x, y);
  g.h0 = homology_data(g.hom, 0);
  g.module = g.h0.module;
  for (std::size_t i = 0; i < g.module.generators(); ++i) {
    Matrix e(x.ring(), g.module.generators(), 1);
    e(i, 0) = x.ring().one();
    g.basis.push_back(g.to_chain_map(e));
  }
  return g;
}

std::optional<std::vector<std::pair<int, Matrix>>> find_homotopy(const ChainMap& f) {
  const Complex& X = f.source();
  const Complex& Y = f.target();
  if (X.empty() || Y.empty()) return std::vector<std::pair<int, Matrix>>{};
  const Complex H = hom_complex(X, Y);
  std::vector<std::pair<int, Matrix>> comps;
  for (int p = X.lo(); p <= X.hi(); ++p) comps.emplace_back(p, f.component(p));
  auto h = solve_linear(H.d(-1), hom_vector(X, Y, 0, comps));
  if (!h) return std::nullopt;
  std::vector<std::pair<int, Matrix>> out;
  for (int p = X.lo(); p <= X.hi(); ++p) out.emplace_back(p, hom_component(X, Y, -1, *h, p));
  return out;
}

ModuleMorphism homotopy_hom_map(const HomotopyHomGroup& from, const HomotopyHomGroup& to,
                                const std::optional<ChainMap>& pre, const std::optional<ChainMap>& post) {
  const Ring& R = from.source.ring();
  Matrix cols(R, to.module.generators(), 0);
  for (const auto& phi : from.basis) {
    ChainMap psi = phi;
    if (pre) psi = compose(psi, *pre);
    if (post) psi = compose(*post, psi);
    cols = hcat(cols, to.to_coords(psi));
  }
  return unchecked_morphism(from.module, to.module, cols);
}

// ---------------------------------------------------------------- truncation

Truncation truncate_ge(const Complex& x, int n) {
  const Ring& R = x.ring();
  if (x.empty() || n > x.hi()) {
    Complex z(R);
    return Truncation{z, ChainMap::zero(z, x)};
  }
  const int lo = std::max(n, x.lo());
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  std::vector<std::pair<int, Matrix>> comps;
  for (int k = lo; k <= x.hi(); ++k) {
    ranks.push_back(x.rank(k));
    if (k < x.hi()) diffs.push_back(x.d(k));
    comps.emplace_back(k, Matrix::identity(R, x.rank(k)));
  }
  Complex t(R, lo, ranks, diffs);
  return Truncation{t, unchecked_chain_map(t, x, std::move(comps))};
}

// ---------------------------------------------------------------- bounded above

BoundedAboveComplex::BoundedAboveComplex(Complex window, ExtensionRule rule)
    : window_(std::move(window)), rule_(std::move(rule)) {
  if (rule_.kind == ExtensionRule::Kind::Periodic) {
    if (rule_.period.empty()) throw InvalidArgument("periodic rule needs at least one differential");
    for (const auto& m : rule_.period)
      if (m.ring() != window_.ring()) throw RingMismatch("periodic differential over the wrong ring");
  }
  if (rule_.kind == ExtensionRule::Kind::KernelResolution && !window_.ring().is_euclidean())
    throw UnsupportedRing("kernel resolution needs a Euclidean ring, got " + window_.ring().name());
  // Validate the first extension step.
  if (rule_.kind == ExtensionRule::Kind::Periodic && !window_.empty()) (void)extended_to(window_.lo() - 2);
}

Complex BoundedAboveComplex::extended_to(int lo) const {
  if (window_.empty() || rule_.kind == ExtensionRule::Kind::Perfect || lo >= window_.lo()) return window_;
  const Ring& R = window_.ring();
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  for (int n = window_.lo(); n <= window_.hi(); ++n) {
    ranks.push_back(window_.rank(n));
    if (n < window_.hi()) diffs.push_back(window_.d(n));
  }
  int cur = window_.lo();
  std::size_t step = 0;
  while (cur > lo) {
    Matrix d;
    if (rule_.kind == ExtensionRule::Kind::Periodic) {
      d = rule_.period[step % rule_.period.size()];
      if (d.rows() != ranks.front())
        throw InvalidArgument("periodic differential has " + std::to_string(d.rows()) + " rows, term has rank " +
                              std::to_string(ranks.front()));
      if (!diffs.empty() && !(diffs.front() * d).is_zero())
        throw InvalidArgument("periodic differential does not compose to zero");
    } else {
      const Matrix top = diffs.empty() ? Matrix(R, 0, ranks.front()) : diffs.front();
      d = nullspace(top);
      if (d.cols() == 0) break;
    }
    ranks.insert(ranks.begin(), d.cols());
    diffs.insert(diffs.begin(), d);
    --cur;
    ++step;
  }
  return Complex(R, cur, ranks, diffs);
}

}  // namespace cwb
