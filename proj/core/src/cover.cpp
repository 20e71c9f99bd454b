#include "cover.hpp"

namespace cwb::detail {

Matrix lower_vectors(const Matrix& v) {
  const Ring& A = v.ring();
  const std::size_t d = A.cover_rank();
  if (d == 1) return lift_to_cover(v);
  Matrix out(A.cover(), v.rows() * d, v.cols());
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t k = 0; k < v.cols(); ++k) {
      const auto c = A.cover_coords(v(i, k));
      for (std::size_t t = 0; t < d; ++t) out(i * d + t, k) = c[t];
    }
  return out;
}

Matrix lower_span(const Matrix& t) {
  const Ring& A = t.ring();
  const std::size_t d = A.cover_rank();
  if (d == 1) {
    Matrix out = lift_to_cover(t);
    if (auto c = A.cover_modulus()) out = hcat(out, scale(*c, Matrix::identity(A.cover(), t.rows())));
    return out;
  }
  Matrix expanded(A, t.rows(), t.cols() * d);
  for (std::size_t k = 0; k < t.cols(); ++k)
    for (std::size_t j = 0; j < d; ++j) {
      const Elem b = A.basis_element(j);
      for (std::size_t i = 0; i < t.rows(); ++i) expanded(i, k * d + j) = A.mul(t(i, k), b);
    }
  return lower_vectors(expanded);
}

Matrix lower_map(const Matrix& f) {
  const Ring& A = f.ring();
  const std::size_t d = A.cover_rank();
  if (d == 1) return lift_to_cover(f);
  Matrix out(A.cover(), f.rows() * d, f.cols() * d);
  for (std::size_t k = 0; k < f.rows(); ++k)
    for (std::size_t i = 0; i < f.cols(); ++i)
      if (!A.is_zero(f(k, i))) out.set_block(k * d, i * d, regular_representation(A, f(k, i)));
  return out;
}

Matrix raise_vectors(const Ring& A, const Matrix& c) {
  const std::size_t d = A.cover_rank();
  if (d == 1) return reduce_from_cover(A, c);
  if (c.rows() % d != 0) throw InvalidArgument("cover vector length not a multiple of the rank");
  const std::size_t n = c.rows() / d;
  Matrix out(A, n, c.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < c.cols(); ++k) {
      std::vector<Elem> co;
      for (std::size_t t = 0; t < d; ++t) co.push_back(c(i * d + t, k));
      out(i, k) = A.from_cover_coords(co);
    }
  return out;
}

std::vector<Matrix> ambient_actions(const Ring& A, std::size_t n) {
  std::vector<Matrix> out;
  if (A.cover_rank() == 1) return out;
  for (std::size_t j = 1; j < A.algebra_dim(); ++j) {
    const Matrix L = regular_representation(A, A.basis_element(j));
    Matrix big(A.cover(), n * L.rows(), n * L.cols());
    for (std::size_t i = 0; i < n; ++i) big.set_block(i * L.rows(), i * L.cols(), L);
    out.push_back(std::move(big));
  }
  return out;
}

Matrix CoverSubquotient::coords(const Matrix& v) const {
  const Matrix ST = hcat(S, T);
  auto x = solve_linear(ST, v);
  if (!x) throw InvalidArgument("vector does not lie in the subquotient numerator");
  return to * x->block(0, S.cols(), 0, v.cols());
}

CoverSubquotient cover_subquotient(const Matrix& S, const Matrix& T,
                                   const std::vector<Matrix>& ambient_actions) {
  const Ring& C = S.ring();
  const std::size_t k = S.cols();
  const Matrix ST = hcat(S, T);
  const Matrix ns = nullspace(ST);
  const Matrix rel0 = ns.block(0, k, 0, ns.cols());
  const SmithForm s = smith_normal_form(rel0);

  std::vector<std::size_t> keep;
  std::vector<Elem> torsion;
  for (std::size_t i = 0; i < k; ++i) {
    if (i < s.rank) {
      if (C.is_unit(s.diagonal[i])) continue;
      torsion.push_back(s.diagonal[i]);
    }
    keep.push_back(i);
  }
  CoverSubquotient q;
  q.S = S;
  q.T = T;
  q.to = s.U.select_rows(keep);
  const Matrix from = s.U_inv.select_cols(keep);
  q.rel = Matrix(C, keep.size(), torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) q.rel(i, i) = torsion[i];
  q.gens = S * from;
  for (const auto& B : ambient_actions) {
    auto c = solve_linear(ST, B * q.gens);
    if (!c) throw InvalidArgument("subquotient numerator is not stable under the ring action");
    q.actions.push_back(q.to * c->block(0, k, 0, q.gens.cols()));
  }
  return q;
}

namespace {

std::size_t rank_of(const Matrix& m) { return smith_normal_form(m).rank; }

Raised raise_algebra(const Ring& A, const CoverSubquotient& q) {
  const Ring F = A.cover();
  const std::size_t d = A.cover_rank();
  const std::size_t n = q.size();
  if (q.rel.cols() != 0) throw InvalidArgument("algebra subquotient must be free over the field");

  auto rho = [&](std::size_t j) { return j == 0 ? Matrix::identity(F, n) : q.actions[j - 1]; };

  Matrix span = hcat(F, n, q.actions);
  std::size_t r = rank_of(span);
  std::vector<std::size_t> chosen;
  for (std::size_t kk = 0; kk < n && r < n; ++kk) {
    Matrix e(F, n, 1);
    e(kk, 0) = F.one();
    Matrix cand = hcat(span, e);
    const std::size_t r2 = rank_of(cand);
    if (r2 > r) {
      chosen.push_back(kk);
      span = std::move(cand);
      r = r2;
    }
  }
  const std::size_t g = chosen.size();
  Matrix exp(F, n, g * d);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix col = rho(j).col(chosen[i]);
      exp.set_block(0, i * d + j, col);
    }
  const Matrix K = nullspace(exp);

  // Keep a subset of kernel vectors whose A-span is the kernel.
  const auto acts = ambient_actions(A, g);
  Matrix kept(F, g * d, 0), kspan(F, g * d, 0);
  std::size_t krank = 0;
  for (std::size_t c = 0; c < K.cols() && krank < K.cols(); ++c) {
    const Matrix v = K.col(c);
    if (rank_of(hcat(kspan, v)) == krank) continue;
    kept = hcat(kept, v);
    kspan = hcat(kspan, v);
    for (const auto& B : acts) kspan = hcat(kspan, B * v);
    krank = rank_of(kspan);
  }
  Raised out;
  out.module = PresentedModule(A, g, raise_vectors(A, kept));
  out.to_q = exp;
  auto sec = solve_linear(exp, Matrix::identity(F, n));
  if (!sec) throw InvalidArgument("generator expansion is not surjective");
  out.from_q = *sec;
  return out;
}

}  // namespace

Raised raise(const Ring& A, const CoverSubquotient& q) {
  if (A.cover_rank() != 1) return raise_algebra(A, q);
  const Ring C = A.cover();
  const std::size_t n = q.size();
  std::vector<std::size_t> nonzero;
  const Matrix red = reduce_from_cover(A, q.rel);
  for (std::size_t j = 0; j < red.cols(); ++j)
    if (!red.col(j).is_zero()) nonzero.push_back(j);
  Raised out;
  out.module = PresentedModule(A, n, red.select_cols(nonzero));
  out.to_q = Matrix::identity(C, n);
  out.from_q = Matrix::identity(C, n);
  return out;
}

}  // namespace cwb::detail
