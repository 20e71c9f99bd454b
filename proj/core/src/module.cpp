#include "cwb/module.hpp"

#include <algorithm>
#include <functional>

#include "cover.hpp"

namespace cwb {

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(Ring r, std::vector<Elem> gens, bool allow_empty) : ring(std::move(r)), generators(std::move(gens)) {
  if (generators.empty() && !allow_empty) throw InvalidArgument("ideal needs at least one generator");
  for (auto& g : generators) {
    if (!ring.contains(g)) g = ring.canonical(g);
  }
}

Ideal::Ideal(Ring r, std::vector<Elem> gens) : Ideal(std::move(r), std::move(gens), false) {}

Ideal Ideal::zero(const Ring& r) { return Ideal(r, {}, true); }

Ideal Ideal::parse(const Ring& r, const std::vector<std::string>& gens) {
  std::vector<Elem> g;
  for (const auto& s : gens) g.push_back(r.parse(s));
  return Ideal(r, g);
}

std::string Ideal::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? "," : "") + ring.format(generators[i]);
  return out + ")";
}

// ---------------------------------------------------------------- modules

PresentedModule::PresentedModule(Ring ring, std::size_t generators, Matrix relations)
    : ring_(std::move(ring)), gens_(generators), rel_(std::move(relations)) {
  if (rel_.ring() != ring_)
    throw RingMismatch("relations over " + rel_.ring().name() + ", module over " + ring_.name());
  if (rel_.rows() != gens_)
    throw InvalidArgument("relation matrix has " + std::to_string(rel_.rows()) + " rows for " +
                          std::to_string(gens_) + " generators");
}

PresentedModule PresentedModule::free(const Ring& ring, std::size_t rank) {
  return PresentedModule(ring, rank, Matrix(ring, rank, 0));
}

PresentedModule PresentedModule::cyclic(const Ring& ring, const Elem& a) {
  return PresentedModule(ring, 1, Matrix(ring, 1, 1, {a}));
}

PresentedModule PresentedModule::diagonal(const Ring& ring, const std::vector<Elem>& d) {
  Matrix rel(ring, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) rel(i, i) = d[i];
  return PresentedModule(ring, d.size(), rel);
}

bool PresentedModule::represents_zero(const Matrix& v) const {
  if (v.rows() != gens_) throw InvalidArgument("vector length does not match generator count");
  if (v.is_zero()) return true;
  return solve_linear(rel_, v).has_value();
}

ModuleMorphism::ModuleMorphism(PresentedModule source, PresentedModule target, Matrix matrix, Unchecked)
    : src_(std::move(source)), tgt_(std::move(target)), mat_(std::move(matrix)) {
  if (src_.ring() != tgt_.ring()) throw RingMismatch("morphism between modules over different rings");
  if (mat_.ring() != src_.ring()) throw RingMismatch("morphism matrix over the wrong ring");
  if (mat_.rows() != tgt_.generators() || mat_.cols() != src_.generators())
    throw InvalidArgument("morphism matrix is " + std::to_string(mat_.rows()) + "x" +
                          std::to_string(mat_.cols()) + ", expected " + std::to_string(tgt_.generators()) +
                          "x" + std::to_string(src_.generators()));
}

ModuleMorphism::ModuleMorphism(PresentedModule source, PresentedModule target, Matrix matrix)
    : ModuleMorphism(std::move(source), std::move(target), std::move(matrix), Unchecked{}) {
  if (!tgt_.represents_zero(mat_ * src_.relations()))
    throw InvalidArgument("matrix does not define a module morphism (relations are not preserved)");
}

ModuleMorphism unchecked_morphism(PresentedModule source, PresentedModule target, Matrix matrix) {
  return ModuleMorphism(std::move(source), std::move(target), std::move(matrix), ModuleMorphism::Unchecked{});
}

ModuleMorphism ModuleMorphism::identity(const PresentedModule& m) {
  return unchecked_morphism(m, m, Matrix::identity(m.ring(), m.generators()));
}

ModuleMorphism ModuleMorphism::zero(const PresentedModule& source, const PresentedModule& target) {
  return unchecked_morphism(source, target, Matrix(source.ring(), target.generators(), source.generators()));
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  if (f.target().generators() != g.source().generators() || f.target().ring() != g.source().ring())
    throw InvalidArgument("cannot compose: target and source differ");
  return unchecked_morphism(f.source(), g.target(), g.matrix() * f.matrix());
}

ModuleMorphism add(const ModuleMorphism& f, const ModuleMorphism& g) {
  return unchecked_morphism(f.source(), f.target(), f.matrix() + g.matrix());
}

ModuleMorphism scale(const Elem& a, const ModuleMorphism& f) {
  return unchecked_morphism(f.source(), f.target(), scale(a, f.matrix()));
}

bool same_map(const ModuleMorphism& f, const ModuleMorphism& g) {
  return f.target().represents_zero(f.matrix() - g.matrix());
}

bool is_zero_map(const ModuleMorphism& f) { return f.target().represents_zero(f.matrix()); }

// ---------------------------------------------------------------- subquotients

struct SubquotientImpl {
  Ring ring;
  detail::CoverSubquotient q;
  detail::Raised r;
};

Matrix SubquotientModule::coordinates(const Matrix& v) const {
  const Ring& A = impl->ring;
  if (v.cols() == 0) return Matrix(A, module.generators(), 0);
  const Matrix c = impl->r.from_q * impl->q.coords(detail::lower_vectors(v));
  return detail::raise_vectors(A, c);
}

SubquotientModule subquotient(const Ring& ring, const Matrix& S, const Matrix& T) {
  if (S.ring() != ring || T.ring() != ring) throw RingMismatch("subquotient data over the wrong ring");
  if (S.rows() != T.rows()) throw InvalidArgument("subquotient numerator and denominator differ in length");
  const std::size_t n = S.rows();
  const std::size_t d = ring.cover_rank();
  const Matrix Sc = d == 1 ? lift_to_cover(S) : detail::lower_span(S);
  const Matrix Tc = detail::lower_span(T);
  auto impl = std::make_shared<SubquotientImpl>(
      SubquotientImpl{ring, detail::cover_subquotient(Sc, Tc, detail::ambient_actions(ring, n)), {}});
  impl->r = detail::raise(ring, impl->q);
  SubquotientModule out;
  out.module = impl->r.module;
  const Matrix lifted = impl->q.gens * impl->r.to_q;
  std::vector<std::size_t> firsts;
  for (std::size_t i = 0; i < out.module.generators(); ++i) firsts.push_back(i * d);
  out.generators = detail::raise_vectors(ring, lifted.select_cols(firsts));
  out.impl = std::move(impl);
  return out;
}

Matrix matrix_kernel(const Matrix& F, const Matrix& T) {
  const Ring& A = F.ring();
  if (T.ring() != A) throw RingMismatch("matrix_kernel over different rings");
  if (F.rows() != T.rows()) throw InvalidArgument("matrix_kernel shape mismatch");
  const std::size_t d = A.cover_rank();
  const Matrix Fc = detail::lower_map(F);
  const Matrix ns = nullspace(hcat(Fc, detail::lower_span(T)));
  Matrix raised = detail::raise_vectors(A, ns.block(0, F.cols() * d, 0, ns.cols()));
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < raised.cols(); ++j)
    if (!raised.col(j).is_zero()) keep.push_back(j);
  return raised.select_cols(keep);
}

Simplified simplify(const PresentedModule& m) {
  const Ring& A = m.ring();
  const auto sq = subquotient(A, Matrix::identity(A, m.generators()), m.relations());
  return Simplified{sq.module, unchecked_morphism(m, sq.module, sq.coordinates(Matrix::identity(A, m.generators()))),
                    unchecked_morphism(sq.module, m, sq.generators)};
}

SubmoduleResult submodule(const PresentedModule& m, const Matrix& v) {
  const auto sq = subquotient(m.ring(), v, m.relations());
  return SubmoduleResult{sq.module, unchecked_morphism(sq.module, m, sq.generators)};
}

QuotientResult quotient(const PresentedModule& m, const Matrix& v) {
  PresentedModule q(m.ring(), m.generators(), hcat(m.relations(), v));
  return QuotientResult{q, unchecked_morphism(m, q, Matrix::identity(m.ring(), m.generators()))};
}

SubmoduleResult kernel(const ModuleMorphism& f) {
  const Matrix K = matrix_kernel(f.matrix(), f.target().relations());
  return submodule(f.source(), K);
}

QuotientResult cokernel(const ModuleMorphism& f) { return quotient(f.target(), f.matrix()); }

ImageResult image(const ModuleMorphism& f) {
  const auto sq = subquotient(f.source().ring(), f.matrix(), f.target().relations());
  return ImageResult{sq.module, unchecked_morphism(sq.module, f.target(), sq.generators),
                     unchecked_morphism(f.source(), sq.module, sq.coordinates(f.matrix()))};
}

// ---------------------------------------------------------------- Hom

struct HomModuleImpl {
  PresentedModule source, target;
  Simplified ss, st;
  SubquotientModule sq;

  ModuleMorphism from_vec(const Matrix& v) const {
    const Matrix xs = unvec(v, st.module.generators(), ss.module.generators());
    return unchecked_morphism(source, target, st.from.matrix() * xs * ss.to.matrix());
  }
};

ModuleMorphism HomModule::to_morphism(const Matrix& coords) const {
  return impl->from_vec(impl->sq.generators * coords);
}

Matrix HomModule::to_coords(const ModuleMorphism& f) const {
  const Matrix xs = impl->st.to.matrix() * f.matrix() * impl->ss.from.matrix();
  return impl->sq.coordinates(vec(xs));
}

HomModule hom_module(const PresentedModule& m, const PresentedModule& n) {
  if (m.ring() != n.ring()) throw RingMismatch("Hom between modules over " + m.ring().name() + " and " + n.ring().name());
  const Ring& A = m.ring();
  Simplified ss = simplify(m);
  Simplified st = simplify(n);
  const Matrix& Rm = ss.module.relations();
  const Matrix& Rn = st.module.relations();
  const std::size_t gm = ss.module.generators(), gn = st.module.generators();
  const Matrix cond = kron(Rm.transpose(), Matrix::identity(A, gn));
  const Matrix target_rel = kron(Matrix::identity(A, Rm.cols()), Rn);
  const Matrix K = matrix_kernel(cond, target_rel);
  const Matrix denom = kron(Matrix::identity(A, gm), Rn);
  auto impl = std::make_shared<HomModuleImpl>(HomModuleImpl{m, n, std::move(ss), std::move(st), subquotient(A, K, denom)});
  HomModule out;
  out.module = impl->sq.module;
  for (std::size_t i = 0; i < out.module.generators(); ++i) out.basis.push_back(impl->from_vec(impl->sq.generators.col(i)));
  out.impl = std::move(impl);
  return out;
}

ModuleMorphism hom_precompose(const HomModule& hom_b, const HomModule& hom_a, const ModuleMorphism& f) {
  const Ring& A = f.source().ring();
  Matrix cols(A, hom_a.module.generators(), 0);
  for (const auto& phi : hom_b.basis) cols = hcat(cols, hom_a.to_coords(compose(phi, f)));
  return unchecked_morphism(hom_b.module, hom_a.module, cols);
}

ModuleMorphism hom_postcompose(const HomModule& hom_a, const HomModule& hom_b, const ModuleMorphism& f) {
  const Ring& A = f.source().ring();
  Matrix cols(A, hom_b.module.generators(), 0);
  for (const auto& phi : hom_a.basis) cols = hcat(cols, hom_b.to_coords(compose(f, phi)));
  return unchecked_morphism(hom_a.module, hom_b.module, cols);
}

DirectSum direct_sum(const Ring& ring, const std::vector<PresentedModule>& parts) {
  std::size_t g = 0, r = 0;
  for (const auto& p : parts) {
    if (p.ring() != ring) throw RingMismatch("direct sum of modules over different rings");
    g += p.generators();
    r += p.relations().cols();
  }
  Matrix rel(ring, g, r);
  std::size_t go = 0, ro = 0;
  for (const auto& p : parts) {
    rel.set_block(go, ro, p.relations());
    go += p.generators();
    ro += p.relations().cols();
  }
  DirectSum out{PresentedModule(ring, g, rel), {}, {}};
  go = 0;
  for (const auto& p : parts) {
    Matrix inj(ring, g, p.generators());
    inj.set_block(go, 0, Matrix::identity(ring, p.generators()));
    out.injections.push_back(unchecked_morphism(p, out.module, inj));
    out.projections.push_back(unchecked_morphism(out.module, p, inj.transpose()));
    go += p.generators();
  }
  return out;
}

// ---------------------------------------------------------------- invariants

namespace {

struct CoverForm {
  std::vector<Elem> torsion;
  std::size_t free_rank = 0;
  std::size_t size = 0;
};

CoverForm cover_form(const PresentedModule& m) {
  const Ring& A = m.ring();
  const std::size_t d = A.cover_rank();
  const Matrix S = Matrix::identity(A.cover(), m.generators() * d);
  const auto q = detail::cover_subquotient(S, detail::lower_span(m.relations()), {});
  CoverForm f;
  f.size = q.size();
  for (std::size_t i = 0; i < q.rel.cols(); ++i) f.torsion.push_back(q.rel(i, i));
  f.free_rank = q.size() - q.rel.cols();
  return f;
}

Ideal algebra_radical(const Ring& A) {
  std::vector<Elem> g;
  for (std::size_t j = 1; j < A.algebra_dim(); ++j) g.push_back(A.basis_element(j));
  if (g.empty()) return Ideal::zero(A);
  return Ideal(A, g);
}

}  // namespace

std::optional<std::size_t> length(const PresentedModule& m) {
  const Ring& A = m.ring();
  const CoverForm f = cover_form(m);
  if (A.cover_rank() > 1) return f.size;
  const Ring C = A.cover();
  if (C.is_field()) return f.free_rank;
  if (f.free_rank > 0) return std::nullopt;
  std::size_t total = 0;
  for (const auto& t : f.torsion) total += factor_count(C, t);
  return total;
}

bool is_zero_module(const PresentedModule& m) { return cover_form(m).size == 0; }

bool is_injective(const ModuleMorphism& f) { return is_zero_module(kernel(f).module); }
bool is_surjective(const ModuleMorphism& f) { return is_zero_module(cokernel(f).module); }
bool is_bijective(const ModuleMorphism& f) { return is_surjective(f) && is_injective(f); }

ModuleInvariants invariants(const PresentedModule& m) {
  const Ring& A = m.ring();
  ModuleInvariants inv;
  const CoverForm f = cover_form(m);
  if (A.cover_rank() == 1) {
    const Ring C = A.cover();
    for (const auto& t : f.torsion) inv.torsion.push_back(C.format(t));
    inv.free_rank = f.free_rank;
    return inv;
  }
  inv.free_rank = f.size;
  const Ideal rad = algebra_radical(A);
  for (std::size_t k = 0;; ++k) {
    const std::size_t dim = *length(submodule(m, ideal_power_multiples(m, rad, k)).module);
    inv.radical_dims.push_back(dim);
    if (dim == 0) break;
  }
  for (std::size_t k = 1;; ++k) {
    const std::size_t dim = *length(annihilator_submodule(m, rad, k).module);
    inv.socle_dims.push_back(dim);
    if (dim == f.size) break;
  }
  return inv;
}

bool is_isomorphic(const PresentedModule& a, const PresentedModule& b) {
  if (a.ring() != b.ring()) return false;
  return invariants(a) == invariants(b);
}

std::string describe(const PresentedModule& m) {
  const Ring& A = m.ring();
  const ModuleInvariants inv = invariants(m);
  if (A.cover_rank() > 1) {
    if (inv.free_rank == 0) return "0";
    std::string s = "dim " + std::to_string(inv.free_rank) + " loewy(";
    for (std::size_t i = 0; i + 1 < inv.radical_dims.size(); ++i)
      s += (i ? "," : "") + std::to_string(inv.radical_dims[i] - inv.radical_dims[i + 1]);
    s += ") socle(";
    for (std::size_t i = 0; i < inv.socle_dims.size(); ++i)
      s += (i ? "," : "") + std::to_string(inv.socle_dims[i] - (i ? inv.socle_dims[i - 1] : 0));
    return s + ")";
  }
  const Ring C = A.cover();
  std::vector<std::string> parts;
  for (const auto& t : inv.torsion) {
    if (C.kind() == RingKind::Integers)
      parts.push_back("Z/" + t);
    else
      parts.push_back(C.name() + "/(" + t + ")");
  }
  if (inv.free_rank > 0) {
    std::string nm = A.name();
    if (nm.find('/') != std::string::npos || nm.find('(') != std::string::npos) nm = "(" + nm + ")";
    parts.push_back(inv.free_rank == 1 ? nm : nm + "^" + std::to_string(inv.free_rank));
  }
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
  return s;
}

// ---------------------------------------------------------------- socles

std::vector<Elem> ideal_power_generators(const Ideal& I, std::size_t n) {
  const Ring& A = I.ring;
  std::vector<Elem> out;
  if (n == 0) return {A.one()};
  if (I.generators.empty()) return {};
  std::vector<std::size_t> idx(n, 0);
  const std::size_t k = I.generators.size();
  for (;;) {
    Elem p = A.one();
    for (auto i : idx) p = A.mul(p, I.generators[i]);
    if (!A.is_zero(p) && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    std::size_t pos = n;
    while (pos > 0 && idx[pos - 1] == k - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t t = pos; t < n; ++t) idx[t] = idx[pos - 1];
  }
  return out;
}

Matrix ideal_power_multiples(const PresentedModule& m, const Ideal& I, std::size_t n) {
  const Ring& A = m.ring();
  Matrix out(A, m.generators(), 0);
  for (const auto& mu : ideal_power_generators(I, n))
    out = hcat(out, scale(mu, Matrix::identity(A, m.generators())));
  return out;
}

namespace {

// {v : mu v in span(rel) for every mu in elems}
Matrix annihilated_by(const PresentedModule& m, const Matrix& rel, const std::vector<Elem>& elems) {
  const Ring& A = m.ring();
  const std::size_t g = m.generators();
  if (elems.empty()) return Matrix::identity(A, g);
  Matrix F(A, 0, g);
  Matrix T(A, 0, 0);
  for (const auto& mu : elems) {
    F = vcat(F, scale(mu, Matrix::identity(A, g)));
    T = block_diag(T, rel);
  }
  return matrix_kernel(F, T);
}

}  // namespace

SubmoduleResult socle(const PresentedModule& m, const Ideal& I) {
  return submodule(m, annihilated_by(m, m.relations(), I.generators));
}

std::vector<SubmoduleResult> socle_series(const PresentedModule& m, const Ideal& I, std::size_t n) {
  const Ring& A = m.ring();
  std::vector<SubmoduleResult> out;
  Matrix U(A, m.generators(), 0);
  out.push_back(submodule(m, U));
  for (std::size_t k = 1; k <= n; ++k) {
    U = annihilated_by(m, hcat(m.relations(), U), I.generators);
    out.push_back(submodule(m, U));
  }
  return out;
}

SubmoduleResult annihilator_submodule(const PresentedModule& m, const Ideal& I, std::size_t n) {
  return submodule(m, annihilated_by(m, m.relations(), ideal_power_generators(I, n)));
}

AdicStage adic_stage(const PresentedModule& m, const Ideal& I, std::size_t n) {
  const Ring& A = m.ring();
  const PresentedModule stage(A, m.generators(), hcat(m.relations(), ideal_power_multiples(m, I, n)));
  const PresentedModule next(A, m.generators(), hcat(m.relations(), ideal_power_multiples(m, I, n + 1)));
  const Matrix id = Matrix::identity(A, m.generators());
  return AdicStage{stage, unchecked_morphism(m, stage, id), unchecked_morphism(next, stage, id)};
}

ProjectiveFactorization factors_through_projective(const ModuleMorphism& f) {
  const Ring& A = f.source().ring();
  const Matrix& Rm = f.source().relations();
  const Matrix& Rn = f.target().relations();
  const std::size_t gn = f.target().generators(), gm = f.source().generators();
  const PresentedModule F = PresentedModule::free(A, gn);
  ProjectiveFactorization out;
  Matrix G = f.matrix();
  if (Rm.cols() > 0 && !(f.matrix() * Rm).is_zero()) {
    const Matrix system = kron(Rm.transpose(), Rn);
    auto z = solve_linear(system, -vec(f.matrix() * Rm));
    if (!z) return out;
    G = f.matrix() + Rn * unvec(*z, Rn.cols(), gm);
  }
  out.factors = true;
  out.to_free = unchecked_morphism(f.source(), F, G);
  out.from_free = unchecked_morphism(F, f.target(), Matrix::identity(A, gn));
  return out;
}

}  // namespace cwb
