#include "cwb/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace cwb {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_.zero()) {}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw InvalidArgument("matrix entry count " + std::to_string(entries_.size()) + " != " +
                          std::to_string(rows) + "x" + std::to_string(cols));
}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

Matrix Matrix::from_rows(const Ring& ring, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(ring, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c)
      throw InvalidArgument("ragged matrix: row " + std::to_string(i) + " has " +
                            std::to_string(rows[i].size()) + " entries, expected " + std::to_string(c));
    for (std::size_t j = 0; j < c; ++j) m(i, j) = ring.canonical(rows[i][j]);
  }
  return m;
}

Matrix Matrix::parse(const Ring& ring, const std::vector<std::vector<std::string>>& rows,
                     std::size_t expected_cols) {
  std::size_t c = expected_cols;
  if (c == static_cast<std::size_t>(-1)) c = rows.empty() ? 0 : rows[0].size();
  Matrix m(ring, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c)
      throw InvalidArgument("non-rectangular matrix: row " + std::to_string(i) + " has " +
                            std::to_string(rows[i].size()) + " entries, expected " + std::to_string(c));
    for (std::size_t j = 0; j < c; ++j) m(i, j) = ring.parse(rows[i][j]);
  }
  return m;
}

Matrix Matrix::column_vector(const Ring& ring, const std::vector<Elem>& v) {
  Matrix m(ring, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [&](const Elem& e) { return ring_.is_zero(e); });
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidArgument("matrix block out of range");
  Matrix b(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& js) const {
  Matrix b(ring_, rows_, js.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < js.size(); ++k) b(i, k) = (*this)(i, js[k]);
  return b;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& is) const {
  Matrix b(ring_, is.size(), cols_);
  for (std::size_t k = 0; k < is.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) b(k, j) = (*this)(is[k], j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) throw InvalidArgument("set_block out of range");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix Matrix::with_ring(const Ring& ring) const {
  Matrix m(ring, rows_, cols_, entries_);
  for (auto& e : m.entries_) e = ring.canonical(e);
  return m;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(ring_.format((*this)(i, j)));
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << ring_.format((*this)(i, j));
  }
  os << "]";
  return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

void require_same(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring())
    throw RingMismatch("matrices over " + a.ring().name() + " and " + b.ring().name());
}

}  // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  if (a.cols() != b.rows())
    throw InvalidArgument("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  const Ring& R = a.ring();
  Matrix c(R, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem& x = a(i, k);
      if (R.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Elem& y = b(k, j);
        if (R.is_zero(y)) continue;
        c(i, j) = R.add(c(i, j), R.mul(x, y));
      }
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.ring().add(a(i, j), b(i, j));
  return c;
}

Matrix operator-(const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.ring().neg(a(i, j));
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix scale(const Elem& s, const Matrix& m) {
  Matrix c = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m.ring().mul(s, m(i, j));
  return c;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  if (a.rows() != b.rows()) throw InvalidArgument("hcat row mismatch");
  Matrix c(a.ring(), a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  if (a.cols() != b.cols()) throw InvalidArgument("vcat column mismatch");
  Matrix c(a.ring(), a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

Matrix hcat(const Ring& ring, std::size_t rows, const std::vector<Matrix>& parts) {
  Matrix c(ring, rows, 0);
  for (const auto& p : parts) c = hcat(c, p);
  return c;
}

Matrix vcat(const Ring& ring, std::size_t cols, const std::vector<Matrix>& parts) {
  Matrix c(ring, 0, cols);
  for (const auto& p : parts) c = vcat(c, p);
  return c;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  Matrix c(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

Matrix block_diag(const Ring& ring, const std::vector<Matrix>& parts) {
  Matrix c(ring, 0, 0);
  for (const auto& p : parts) c = block_diag(c, p);
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  const Ring& R = a.ring();
  Matrix c(R, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (R.is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = R.mul(a(i, j), b(k, l));
    }
  return c;
}

Matrix vec(const Matrix& m) {
  Matrix v(m.ring(), m.rows() * m.cols(), 1);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) v(j * m.rows() + i, 0) = m(i, j);
  return v;
}

Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.rows() != rows * cols || v.cols() != 1) throw InvalidArgument("unvec shape mismatch");
  Matrix m(v.ring(), rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = v(j * rows + i, 0);
  return m;
}

// ---------------------------------------------------------------- Smith form

namespace {

struct RingOps {
  using T = Elem;
  const Ring& R;
  T zero() const { return R.zero(); }
  T one() const { return R.one(); }
  bool is_zero(const T& a) const { return R.is_zero(a); }
  int cmp(const T& a, const T& b) const { return R.compare_size(a, b); }
  std::pair<T, T> divmod(const T& a, const T& b) const { return R.divmod(a, b); }
  T add(const T& a, const T& b) const { return R.add(a, b); }
  T mul(const T& a, const T& b) const { return R.mul(a, b); }
  T neg(const T& a) const { return R.neg(a); }
  std::pair<T, T> normalize(const T& a) const { return R.normalize_associate(a); }
  T inverse(const T& u) const { return *R.inverse(u); }
};

struct SmallFieldOps {
  using T = std::int64_t;
  std::int64_t p;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  int cmp(T a, T b) const { return (a != 0) - (b != 0); }
  T add(T a, T b) const { return (a + b) % p; }
  T mul(T a, T b) const { return static_cast<T>((static_cast<__int128>(a) * b) % p); }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T inverse(T a) const {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      const std::int64_t q = r / nr;
      std::tie(t, nt) = std::make_pair(nt, t - q * nt);
      std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    return t < 0 ? t + p : t;
  }
  std::pair<T, T> divmod(T a, T b) const { return {mul(a, inverse(b)), 0}; }
  std::pair<T, T> normalize(T a) const { return {a, 1}; }
};

template <class Ops>
class SnfEngine {
 public:
  using T = typename Ops::T;

  SnfEngine(const Ops& ops, std::size_t r, std::size_t c, std::vector<T> m)
      : ops_(ops), r_(r), c_(c), M_(std::move(m)) {
    U_ = ident(r_);
    Ui_ = ident(r_);
    V_ = ident(c_);
    Vi_ = ident(c_);
  }

  void run() {
    std::size_t t = 0;
    const std::size_t lim = std::min(r_, c_);
    while (t < lim) {
      if (!place_pivot(t)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < r_; ++i) {
          if (ops_.is_zero(m(i, t))) continue;
          auto [q, rem] = ops_.divmod(m(i, t), m(t, t));
          row_addmul(i, t, ops_.neg(q));
          if (!ops_.is_zero(rem)) clean = false;
        }
        for (std::size_t j = t + 1; j < c_; ++j) {
          if (ops_.is_zero(m(t, j))) continue;
          auto [q, rem] = ops_.divmod(m(t, j), m(t, t));
          col_addmul(j, t, ops_.neg(q));
          if (!ops_.is_zero(rem)) clean = false;
        }
        if (!clean) {
          place_pivot(t);
          continue;
        }
        bool fixed = false;
        for (std::size_t i = t + 1; i < r_ && !fixed; ++i)
          for (std::size_t j = t + 1; j < c_; ++j) {
            if (ops_.is_zero(m(i, j))) continue;
            if (!ops_.is_zero(ops_.divmod(m(i, j), m(t, t)).second)) {
              row_addmul(t, i, ops_.one());
              fixed = true;
              break;
            }
          }
        if (!fixed) break;
      }
      ++t;
    }
    rank_ = t;
    for (std::size_t i = 0; i < rank_; ++i) {
      auto [u, a] = ops_.normalize(m(i, i));
      (void)a;
      const T ui = ops_.inverse(u);
      scale_row(i, ui, u);
    }
  }

  std::size_t rank() const { return rank_; }
  const std::vector<T>& M() const { return M_; }
  const std::vector<T>& U() const { return U_; }
  const std::vector<T>& Ui() const { return Ui_; }
  const std::vector<T>& V() const { return V_; }
  const std::vector<T>& Vi() const { return Vi_; }

 private:
  std::vector<T> ident(std::size_t n) const {
    std::vector<T> v(n * n, ops_.zero());
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = ops_.one();
    return v;
  }
  T& m(std::size_t i, std::size_t j) { return M_[i * c_ + j]; }

  bool place_pivot(std::size_t t) {
    std::size_t bi = r_, bj = c_;
    for (std::size_t i = t; i < r_; ++i)
      for (std::size_t j = t; j < c_; ++j) {
        if (ops_.is_zero(m(i, j))) continue;
        if (bi == r_ || ops_.cmp(m(i, j), m(bi, bj)) < 0) {
          bi = i;
          bj = j;
        }
      }
    if (bi == r_) return false;
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < c_; ++j) std::swap(M_[a * c_ + j], M_[b * c_ + j]);
    for (std::size_t j = 0; j < r_; ++j) std::swap(U_[a * r_ + j], U_[b * r_ + j]);
    for (std::size_t i = 0; i < r_; ++i) std::swap(Ui_[i * r_ + a], Ui_[i * r_ + b]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < r_; ++i) std::swap(M_[i * c_ + a], M_[i * c_ + b]);
    for (std::size_t i = 0; i < c_; ++i) std::swap(V_[i * c_ + a], V_[i * c_ + b]);
    for (std::size_t j = 0; j < c_; ++j) std::swap(Vi_[a * c_ + j], Vi_[b * c_ + j]);
  }
  // row_i += c * row_j
  void row_addmul(std::size_t i, std::size_t j, const T& c) {
    if (ops_.is_zero(c)) return;
    for (std::size_t k = 0; k < c_; ++k)
      if (!ops_.is_zero(M_[j * c_ + k])) M_[i * c_ + k] = ops_.add(M_[i * c_ + k], ops_.mul(c, M_[j * c_ + k]));
    for (std::size_t k = 0; k < r_; ++k)
      if (!ops_.is_zero(U_[j * r_ + k])) U_[i * r_ + k] = ops_.add(U_[i * r_ + k], ops_.mul(c, U_[j * r_ + k]));
    const T nc = ops_.neg(c);
    for (std::size_t k = 0; k < r_; ++k)
      if (!ops_.is_zero(Ui_[k * r_ + i])) Ui_[k * r_ + j] = ops_.add(Ui_[k * r_ + j], ops_.mul(nc, Ui_[k * r_ + i]));
  }
  // col_i += c * col_j
  void col_addmul(std::size_t i, std::size_t j, const T& c) {
    if (ops_.is_zero(c)) return;
    for (std::size_t k = 0; k < r_; ++k)
      if (!ops_.is_zero(M_[k * c_ + j])) M_[k * c_ + i] = ops_.add(M_[k * c_ + i], ops_.mul(c, M_[k * c_ + j]));
    for (std::size_t k = 0; k < c_; ++k)
      if (!ops_.is_zero(V_[k * c_ + j])) V_[k * c_ + i] = ops_.add(V_[k * c_ + i], ops_.mul(c, V_[k * c_ + j]));
    const T nc = ops_.neg(c);
    for (std::size_t k = 0; k < c_; ++k)
      if (!ops_.is_zero(Vi_[i * c_ + k])) Vi_[j * c_ + k] = ops_.add(Vi_[j * c_ + k], ops_.mul(nc, Vi_[i * c_ + k]));
  }
  // row_i *= u, with u_inv its inverse
  void scale_row(std::size_t i, const T& u, const T& u_inv) {
    for (std::size_t k = 0; k < c_; ++k) M_[i * c_ + k] = ops_.mul(u, M_[i * c_ + k]);
    for (std::size_t k = 0; k < r_; ++k) U_[i * r_ + k] = ops_.mul(u, U_[i * r_ + k]);
    for (std::size_t k = 0; k < r_; ++k) Ui_[k * r_ + i] = ops_.mul(u_inv, Ui_[k * r_ + i]);
  }

  const Ops& ops_;
  std::size_t r_, c_;
  std::vector<T> M_, U_, Ui_, V_, Vi_;
  std::size_t rank_ = 0;
};

bool small_prime_field(const Ring& R) {
  return R.kind() == RingKind::PrimeField && R.modulus() < mpz_class(1L << 31);
}

template <class Ops, class ToElem>
SmithForm finish(const Ring& R, std::size_t r, std::size_t c, const SnfEngine<Ops>& e, ToElem conv) {
  auto mk = [&](const auto& v, std::size_t rr, std::size_t cc) {
    std::vector<Elem> ent;
    ent.reserve(v.size());
    for (const auto& x : v) ent.push_back(conv(x));
    return Matrix(R, rr, cc, std::move(ent));
  };
  SmithForm s{mk(e.U(), r, r), mk(e.M(), r, c), mk(e.V(), c, c), mk(e.Ui(), r, r), mk(e.Vi(), c, c), e.rank(), {}};
  for (std::size_t i = 0; i < s.rank; ++i) s.diagonal.push_back(s.D(i, i));
  return s;
}

}  // namespace

SmithForm smith_normal_form(const Matrix& m) {
  const Ring& R = m.ring();
  if (!R.is_euclidean())
    throw UnsupportedRing("Smith normal form requires a Euclidean ring, got " + R.name());
  if (small_prime_field(R)) {
    SmallFieldOps ops{R.modulus().get_si()};
    std::vector<std::int64_t> v;
    v.reserve(m.entries().size());
    for (const auto& x : m.entries()) v.push_back(std::get<mpz_class>(x).get_si());
    SnfEngine<SmallFieldOps> e(ops, m.rows(), m.cols(), std::move(v));
    e.run();
    return finish(R, m.rows(), m.cols(), e, [](std::int64_t x) { return Elem(mpz_class(x)); });
  }
  RingOps ops{R};
  SnfEngine<RingOps> e(ops, m.rows(), m.cols(), m.entries());
  e.run();
  return finish(R, m.rows(), m.cols(), e, [](const Elem& x) { return x; });
}

namespace {

std::optional<Matrix> solve_euclidean(const Matrix& a, const Matrix& b) {
  const Ring& R = a.ring();
  const SmithForm s = smith_normal_form(a);
  const Matrix c = s.U * b;
  Matrix y(R, a.cols(), b.cols());
  for (std::size_t k = 0; k < b.cols(); ++k) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i < s.rank) {
        auto q = R.divide(c(i, k), s.diagonal[i]);
        if (!q) return std::nullopt;
        y(i, k) = *q;
      } else if (!R.is_zero(c(i, k))) {
        return std::nullopt;
      }
    }
  }
  return s.V * y;
}

Matrix expand_algebra(const Matrix& a) {
  const Ring& R = a.ring();
  const std::size_t d = R.algebra_dim();
  const Ring F = R.cover();
  Matrix out(F, a.rows() * d, a.cols() * d);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!R.is_zero(a(i, j))) out.set_block(i * d, j * d, regular_representation(R, a(i, j)));
  return out;
}

Matrix coords_column(const Matrix& b, std::size_t k) {
  const Ring& R = b.ring();
  const std::size_t d = R.algebra_dim();
  Matrix v(R.cover(), b.rows() * d, 1);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const auto c = R.cover_coords(b(i, k));
    for (std::size_t t = 0; t < d; ++t) v(i * d + t, 0) = c[t];
  }
  return v;
}

}  // namespace

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  if (a.rows() != b.rows())
    throw InvalidArgument("solve_linear shape mismatch: A has " + std::to_string(a.rows()) +
                          " rows, b has " + std::to_string(b.rows()));
  const Ring& R = a.ring();
  if (R.is_euclidean()) return solve_euclidean(a, b);
  switch (R.kind()) {
    case RingKind::Modular:
    case RingKind::PolyQuot: {
      const Ring C = R.cover();
      const Matrix lifted = hcat(lift_to_cover(a), scale(*R.cover_modulus(), Matrix::identity(C, a.rows())));
      auto x = solve_euclidean(lifted, lift_to_cover(b));
      if (!x) return std::nullopt;
      return reduce_from_cover(R, x->block(0, a.cols(), 0, b.cols()));
    }
    case RingKind::FiniteAlgebra: {
      const std::size_t d = R.algebra_dim();
      const Matrix big = expand_algebra(a);
      Matrix x(R, a.cols(), b.cols());
      for (std::size_t k = 0; k < b.cols(); ++k) {
        auto y = solve_euclidean(big, coords_column(b, k));
        if (!y) return std::nullopt;
        for (std::size_t j = 0; j < a.cols(); ++j) {
          std::vector<Elem> c;
          for (std::size_t t = 0; t < d; ++t) c.push_back((*y)(j * d + t, 0));
          x(j, k) = R.from_cover_coords(c);
        }
      }
      return x;
    }
    default:
      throw UnsupportedRing("solve_linear not available over " + R.name());
  }
}

Matrix nullspace(const Matrix& a) {
  const SmithForm s = smith_normal_form(a);
  return s.V.block(0, a.cols(), s.rank, a.cols() - s.rank);
}

Matrix regular_representation(const Ring& algebra, const Elem& a) {
  if (algebra.kind() != RingKind::FiniteAlgebra) throw UnsupportedRing("not a finite algebra");
  const std::size_t d = algebra.algebra_dim();
  Matrix L(algebra.cover(), d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto c = algebra.cover_coords(algebra.mul(a, algebra.basis_element(j)));
    for (std::size_t i = 0; i < d; ++i) L(i, j) = c[i];
  }
  return L;
}

Matrix lift_to_cover(const Matrix& m) {
  const Ring& R = m.ring();
  if (R.cover_rank() != 1) throw UnsupportedRing("entrywise lift needs cover rank 1");
  if (R.kind() != RingKind::FiniteAlgebra) return Matrix(R.cover(), m.rows(), m.cols(), m.entries());
  std::vector<Elem> e;
  e.reserve(m.entries().size());
  for (const auto& x : m.entries()) e.push_back(R.cover_coords(x)[0]);
  return Matrix(R.cover(), m.rows(), m.cols(), std::move(e));
}

Matrix reduce_from_cover(const Ring& ring, const Matrix& m) {
  if (ring.cover_rank() != 1) throw UnsupportedRing("entrywise reduction needs cover rank 1");
  std::vector<Elem> e;
  e.reserve(m.entries().size());
  for (const auto& x : m.entries()) e.push_back(ring.reduce(x));
  return Matrix(ring, m.rows(), m.cols(), std::move(e));
}

}  // namespace cwb
