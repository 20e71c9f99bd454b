#include "cwb/koszul.hpp"

#include <sstream>

namespace cwb {

Complex koszul(const Ring& ring, const std::vector<Elem>& elements) {
  Complex k = Complex::concentrated(ring, 0, 1);
  for (const auto& x : elements) {
    if (!ring.contains(x)) throw RingMismatch("Koszul element is not an element of " + ring.name());
    k = cone(scale(x, ChainMap::identity(k))).cone;
  }
  return k;
}

Complex koszul_dual(const Complex& k) { return hom_complex(k, Complex::concentrated(k.ring(), 0, 1)); }

KoszulTower::KoszulTower(Ideal ideal) : ideal_(std::move(ideal)) {}

namespace {

std::vector<Elem> powers(const Ideal& I, std::size_t t) {
  if (t == 0) throw InvalidArgument("Koszul tower stages start at t = 1");
  std::vector<Elem> out;
  for (const auto& g : I.generators) out.push_back(I.ring.pow(g, t));
  return out;
}

}  // namespace

Complex KoszulTower::stage(std::size_t t) const { return koszul(ideal_.ring, powers(ideal_, t)); }

ChainMap KoszulTower::restriction(std::size_t t) const {
  const Ring& R = ideal_.ring;
  const auto big = powers(ideal_, t + 1), small = powers(ideal_, t);
  Complex kb = Complex::concentrated(R, 0, 1), ks = kb;
  ChainMap r = ChainMap::identity(kb);
  for (std::size_t i = 0; i < big.size(); ++i) {
    const ChainMap fb = scale(big[i], ChainMap::identity(kb));
    const ChainMap fs = scale(small[i], ChainMap::identity(ks));
    r = cone_map(fb, fs, scale(ideal_.generators[i], r), r);
    kb = r.source();
    ks = r.target();
  }
  return r;
}

Complex lambda_stage(const Complex& x, const Ideal& I, std::size_t t) {
  if (x.ring() != I.ring) throw RingMismatch("ideal and complex over different rings");
  return tensor_complex(x, KoszulTower(I).stage(t));
}

Complex gamma_stage(const Complex& x, const Ideal& I, std::size_t t) {
  if (x.ring() != I.ring) throw RingMismatch("ideal and complex over different rings");
  return hom_complex(KoszulTower(I).stage(t), x);
}

ChainMap lambda_transition(const Complex& x, const Ideal& I, std::size_t t) {
  return tensor_map(ChainMap::identity(x), KoszulTower(I).restriction(t));
}

ChainMap gamma_transition(const Complex& x, const Ideal& I, std::size_t t) {
  return hom_complex_pre(KoszulTower(I).restriction(t), x);
}

// ---------------------------------------------------------------- reports

std::string RowVerdict::str(std::size_t horizon) const {
  if (stabilized_at) return "stabilized at " + std::to_string(*stabilized_at);
  if (essentially_zero_after)
    return "essentially zero (composites of " + std::to_string(*essentially_zero_after) + " transitions vanish)";
  return "not stabilized by " + std::to_string(horizon);
}

bool TowerRow::all_zero() const {
  for (const auto& m : modules)
    if (!is_zero_module(m)) return false;
  return true;
}

const TowerRow* TowerReport::row(int degree) const {
  for (const auto& r : rows)
    if (r.degree == degree) return &r;
  return nullptr;
}

RowVerdict row_verdict(const std::vector<ModuleMorphism>& tr, bool forward) {
  RowVerdict v;
  const std::size_t steps = tr.size();
  // transitions[i] connects stage i+1 and i+2 (stages are 1-based).
  std::size_t t0 = steps + 1;
  while (t0 > 1 && is_bijective(tr[t0 - 2])) --t0;
  if (t0 <= steps) v.stabilized_at = t0;
  for (std::size_t k = 1; k <= steps && !v.essentially_zero_after; ++k) {
    bool all = true;
    for (std::size_t s = 0; s + k <= steps && all; ++s) {
      ModuleMorphism c = tr[s];
      for (std::size_t j = 1; j < k; ++j) c = forward ? compose(tr[s + j], c) : compose(c, tr[s + j]);
      all = is_zero_map(c);
    }
    if (all) v.essentially_zero_after = k;
  }
  return v;
}

TowerReport tower_report(const Complex& x, const Ideal& I, std::size_t T, TowerMode mode) {
  if (T == 0) throw InvalidArgument("tower horizon must be at least 1");
  if (x.ring() != I.ring) throw RingMismatch("ideal and complex over different rings");
  const bool lambda = mode == TowerMode::Lambda;
  std::vector<Complex> stages;
  std::vector<ChainMap> maps;
  for (std::size_t t = 1; t <= T; ++t) {
    stages.push_back(lambda ? lambda_stage(x, I, t) : gamma_stage(x, I, t));
    if (t < T) maps.push_back(lambda ? lambda_transition(x, I, t) : gamma_transition(x, I, t));
  }
  TowerReport rep;
  rep.mode = mode;
  rep.horizon = T;
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& s : stages) {
    if (s.empty()) continue;
    lo = any ? std::min(lo, s.lo()) : s.lo();
    hi = any ? std::max(hi, s.hi()) : s.hi();
    any = true;
  }
  std::vector<std::vector<SubquotientModule>> data;
  for (int n = lo; n <= hi; ++n) {
    TowerRow row;
    row.degree = n;
    std::vector<SubquotientModule> hs;
    for (const auto& s : stages) {
      hs.push_back(homology_data(s, n));
      row.modules.push_back(hs.back().module);
    }
    for (std::size_t i = 0; i + 1 < T; ++i) {
      const auto& src = lambda ? hs[i + 1] : hs[i];
      const auto& tgt = lambda ? hs[i] : hs[i + 1];
      row.transitions.push_back(
          unchecked_morphism(src.module, tgt.module, tgt.coordinates(maps[i].component(n) * src.generators)));
    }
    row.verdict = row_verdict(row.transitions, !lambda);
    rep.rows.push_back(std::move(row));
    data.push_back(std::move(hs));
  }

  if (lambda && (x.empty() || (x.lo() == 0 && x.hi() == 0))) {
    const std::size_t r = x.rank(0);
    const Ring& R = x.ring();
    const PresentedModule free = PresentedModule::free(R, r);
    const std::size_t idx = static_cast<std::size_t>(0 - lo);
    bool ok = true;
    std::vector<AdicStage> adic;
    std::vector<ModuleMorphism> phi;
    for (std::size_t t = 1; t <= T && ok; ++t) {
      adic.push_back(adic_stage(free, I, t));
      if (!any || 0 < lo || 0 > hi) {
        ok = is_zero_module(adic.back().module);
        continue;
      }
      const auto& h = data[idx][t - 1];
      try {
        phi.emplace_back(adic.back().module, h.module, h.coordinates(Matrix::identity(R, r)));
      } catch (const Error&) {
        ok = false;
        break;
      }
      ok = is_bijective(phi.back());
    }
    if (ok && any && lo <= 0 && 0 <= hi)
      for (std::size_t t = 1; t < T && ok; ++t) {
        const ModuleMorphism& tr = rep.rows[idx].transitions[t - 1];
        ok = same_map(compose(tr, phi[t]), compose(phi[t - 1], *adic[t - 1].tower));
      }
    rep.adic_match = ok;
  }
  return rep;
}

AdjunctionCheck adjunction_check(const Complex& x, const Complex& y, const Ideal& I, std::size_t t) {
  AdjunctionCheck out;
  out.gamma_side = homotopy_hom(gamma_stage(x, I, t), y).module;
  out.lambda_side = homotopy_hom(x, lambda_stage(y, I, t)).module;
  out.holds = is_isomorphic(out.gamma_side, out.lambda_side);
  return out;
}

}  // namespace cwb
