#include "cwb/matlis.hpp"

#include <map>

#include "cover.hpp"

namespace cwb {

namespace {

// m = p^N with p prime, or nullopt.
std::optional<std::pair<mpz_class, std::size_t>> prime_power(const mpz_class& m) {
  if (m < 2) return std::nullopt;
  const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  for (std::size_t n = bits; n >= 1; --n) {
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), n) != 0 && is_prime(r)) return std::make_pair(r, n);
  }
  return std::nullopt;
}

std::size_t poly_degree(const Elem& e) { return std::get<PolyElem>(e).coeffs.size() - 1; }

}  // namespace

LocalArtinianRing LocalArtinianRing::from(const Ring& A) {
  switch (A.kind()) {
    case RingKind::PrimeField:
      return {A, Ideal::zero(A), 1};
    case RingKind::Modular: {
      auto pp = prime_power(A.modulus());
      if (!pp) throw UnsupportedRing(A.name() + " is not local: modulus is not a prime power");
      return {A, Ideal(A, {A.from_mpz(pp->first)}), pp->second};
    }
    case RingKind::PolyQuot: {
      const Ring C = A.cover();
      const Elem f = A.poly_modulus();
      const std::size_t n = poly_degree(f);
      if (f != C.pow(C.variable(), n))
        throw UnsupportedRing(A.name() + ": only quotients by a power of the variable are supported");
      return {A, Ideal(A, {A.variable()}), n};
    }
    case RingKind::FiniteAlgebra: {
      const auto& tab = A.algebra();
      const std::size_t d = A.algebra_dim();
      for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 1; j < d; ++j)
          if (tab.product[i][j][0] % static_cast<long>(A.modulus().get_si()) != 0)
            throw UnsupportedRing(A.name() + ": b_1.. do not span an ideal");
      if (d == 1) return {A, Ideal::zero(A), 1};
      std::vector<Elem> gens;
      for (std::size_t j = 1; j < d; ++j) gens.push_back(A.basis_element(j));
      Ideal m(A, gens);
      for (std::size_t n = 1; n <= d; ++n)
        if (ideal_power_generators(m, n).empty()) return {A, m, n};
      throw UnsupportedRing(A.name() + " is not local: the span of b_1.. is not nilpotent");
    }
    default:
      throw UnsupportedRing("Matlis duality needs a local artinian ring, got " + A.name());
  }
}

std::vector<Ideal> all_ideals(const LocalArtinianRing& a) {
  const Ring& A = a.ring;
  std::vector<Ideal> out;
  if (A.kind() != RingKind::FiniteAlgebra) {
    const Elem g = a.maximal.generators.empty() ? A.zero() : a.maximal.generators[0];
    for (std::size_t i = 0; i <= a.nilpotency; ++i) out.emplace_back(A, std::vector<Elem>{A.pow(g, i)});
    return out;
  }
  if (A.cardinality() > 4096) throw UnsupportedRing("ideal enumeration limited to 4096 elements");
  const auto elems = A.elements();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[A.format(elems[i])] = i;
  using Members = std::vector<bool>;
  auto add_generator = [&](const Members& j, const Elem& g) {
    Members out(elems.size(), false);
    for (std::size_t s = 0; s < elems.size(); ++s) {
      if (!j[s]) continue;
      for (const auto& r : elems) out[index.at(A.format(A.add(elems[s], A.mul(r, g))))] = true;
    }
    return out;
  };
  Members zero(elems.size(), false);
  zero[index.at(A.format(A.zero()))] = true;
  std::map<Members, std::vector<Elem>> seen{{zero, {A.zero()}}};
  std::vector<Members> queue{zero};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Members cur = queue[q];
    const auto gens = seen.at(cur);
    for (std::size_t s = 0; s < elems.size(); ++s) {
      if (cur[s]) continue;
      Members next = add_generator(cur, elems[s]);
      if (seen.count(next)) continue;
      auto g2 = gens;
      if (g2.size() == 1 && A.is_zero(g2[0])) g2.clear();
      g2.push_back(elems[s]);
      seen.emplace(next, g2);
      queue.push_back(next);
    }
  }
  for (const auto& m : queue) out.emplace_back(A, seen.at(m));
  return out;
}

PresentedModule injective_envelope_module(const LocalArtinianRing& a) {
  const Ring& A = a.ring;
  if (A.kind() != RingKind::FiniteAlgebra) return PresentedModule::free(A, 1);
  const Ring F = A.cover();
  const std::size_t d = A.algebra_dim();
  std::vector<Matrix> actions;
  for (std::size_t j = 1; j < d; ++j) actions.push_back(regular_representation(A, A.basis_element(j)).transpose());
  const auto q = detail::cover_subquotient(Matrix::identity(F, d), Matrix(F, d, 0), actions);
  return detail::raise(A, q).module;
}

BaerResult baer_test(const PresentedModule& m) {
  const auto a = LocalArtinianRing::from(m.ring());
  const PresentedModule A1 = PresentedModule::free(a.ring, 1);
  const HomModule hom_a = hom_module(A1, m);
  BaerResult out;
  for (const auto& J : all_ideals(a)) {
    Matrix row(a.ring, 1, J.generators.size());
    for (std::size_t i = 0; i < J.generators.size(); ++i) row(0, i) = J.generators[i];
    const SubmoduleResult sub = submodule(A1, row);
    ++out.ideals_tested;
    if (!is_surjective(hom_precompose(hom_a, hom_module(sub.module, m), sub.inclusion))) {
      out.failing_ideal = J;
      return out;
    }
  }
  out.injective = true;
  return out;
}

InjectiveEnvelope injective_envelope_simple(const Ring& ring) {
  const auto a = LocalArtinianRing::from(ring);
  InjectiveEnvelope out;
  out.module = injective_envelope_module(a);
  out.self_injective_model = ring.kind() != RingKind::FiniteAlgebra;
  out.socle_simple = length(socle(out.module, a.maximal).module) == std::optional<std::size_t>(1);
  const BaerResult b = baer_test(out.module);
  out.injective_verified = b.injective;
  out.ideals_tested = b.ideals_tested;
  return out;
}

MatlisDuality::MatlisDuality(const Ring& ring)
    : local_(LocalArtinianRing::from(ring)), e_(injective_envelope_module(local_)) {}

HomModule MatlisDuality::dual(const PresentedModule& m) const {
  if (m.ring() != local_.ring) throw RingMismatch("module over " + m.ring().name() + ", duality over " + local_.ring.name());
  return hom_module(m, e_);
}

ModuleMorphism MatlisDuality::dual_map(const HomModule& dn, const HomModule& dm, const ModuleMorphism& f) const {
  return hom_precompose(dn, dm, f);
}

ModuleMorphism MatlisDuality::evaluation(const PresentedModule& m) const {
  const Ring& A = local_.ring;
  const HomModule h1 = dual(m);
  const HomModule h2 = dual(h1.module);
  Matrix ev(A, h2.module.generators(), 0);
  for (std::size_t i = 0; i < m.generators(); ++i) {
    Matrix img(A, e_.generators(), h1.basis.size());
    for (std::size_t k = 0; k < h1.basis.size(); ++k) img.set_block(0, k, h1.basis[k].matrix().col(i));
    ev = hcat(ev, h2.to_coords(ModuleMorphism(h1.module, e_, img)));
  }
  return ModuleMorphism(m, h2.module, ev);
}

PresentedModule matlis_dual(const PresentedModule& m) { return MatlisDuality(m.ring()).dual_module(m); }

DoubleDualCheck double_dual_check(const PresentedModule& m) {
  if (!length(m)) throw InvalidArgument("double dual check needs a module of finite length");
  const MatlisDuality D(m.ring());
  ModuleMorphism ev = D.evaluation(m);
  const bool iso = is_bijective(ev);
  return DoubleDualCheck{iso, std::move(ev)};
}

bool swap_check(const PresentedModule& m, const PresentedModule& n) {
  const MatlisDuality D(m.ring());
  return is_isomorphic(hom_module(m, D.dual_module(n)).module, hom_module(n, D.dual_module(m)).module);
}

SubmoduleResult E_filtration(const Ring& ring, std::size_t n) {
  const auto a = LocalArtinianRing::from(ring);
  return annihilator_submodule(injective_envelope_module(a), a.maximal, n);
}

EndComparison end_E_compare(const Ring& ring, std::size_t n) {
  const auto a = LocalArtinianRing::from(ring);
  const PresentedModule E = injective_envelope_module(a);
  EndComparison out;
  out.hom = hom_module(annihilator_submodule(E, a.maximal, n).module, E).module;
  out.quotient = adic_stage(PresentedModule::free(ring, 1), a.maximal, n).module;
  out.iso = is_isomorphic(out.hom, out.quotient);
  return out;
}

}  // namespace cwb
