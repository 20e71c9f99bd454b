#include "cwb/indcat.hpp"

#include <map>
#include <mutex>

#include "cwb/koszul.hpp"

namespace cwb {

// ---------------------------------------------------------------- base category

Base base_of(const Object& x) { return std::holds_alternative<PresentedModule>(x) ? Base::Module : Base::Complex; }
Base base_of(const Arrow& f) { return std::holds_alternative<ModuleMorphism>(f) ? Base::Module : Base::Complex; }

const Ring& ring_of(const Object& x) {
  return std::visit([](const auto& v) -> const Ring& { return v.ring(); }, x);
}

Object arrow_source(const Arrow& f) {
  if (auto m = std::get_if<ModuleMorphism>(&f)) return m->source();
  return std::get<ChainMap>(f).source();
}

Object arrow_target(const Arrow& f) {
  if (auto m = std::get_if<ModuleMorphism>(&f)) return m->target();
  return std::get<ChainMap>(f).target();
}

Arrow identity_arrow(const Object& x) {
  if (auto m = std::get_if<PresentedModule>(&x)) return ModuleMorphism::identity(*m);
  return ChainMap::identity(std::get<Complex>(x));
}

Arrow zero_arrow(const Object& x, const Object& y) {
  if (base_of(x) != base_of(y)) throw InvalidArgument("zero arrow between objects of different kinds");
  if (auto m = std::get_if<PresentedModule>(&x)) return ModuleMorphism::zero(*m, std::get<PresentedModule>(y));
  return ChainMap::zero(std::get<Complex>(x), std::get<Complex>(y));
}

Arrow compose(const Arrow& g, const Arrow& f) {
  if (base_of(g) != base_of(f)) throw InvalidArgument("composing a module map with a chain map");
  if (auto m = std::get_if<ModuleMorphism>(&f)) return compose(std::get<ModuleMorphism>(g), *m);
  return compose(std::get<ChainMap>(g), std::get<ChainMap>(f));
}

Arrow subtract(const Arrow& f, const Arrow& g) {
  if (base_of(g) != base_of(f)) throw InvalidArgument("subtracting a module map from a chain map");
  if (auto m = std::get_if<ModuleMorphism>(&f)) {
    const Ring& R = m->source().ring();
    return add(*m, scale(R.neg(R.one()), std::get<ModuleMorphism>(g)));
  }
  const auto& c = std::get<ChainMap>(f);
  const Ring& R = c.source().ring();
  return add(c, scale(R.neg(R.one()), std::get<ChainMap>(g)));
}

bool equivalent(const Arrow& f, const Arrow& g) {
  if (auto m = std::get_if<ModuleMorphism>(&f)) return same_map(*m, std::get<ModuleMorphism>(g));
  return find_homotopy(std::get<ChainMap>(subtract(f, g))).has_value();
}

bool same_object(const Object& a, const Object& b) {
  if (base_of(a) != base_of(b)) return false;
  if (auto m = std::get_if<PresentedModule>(&a)) {
    const auto& n = std::get<PresentedModule>(b);
    return m->ring() == n.ring() && m->generators() == n.generators() && m->relations() == n.relations();
  }
  return std::get<Complex>(a) == std::get<Complex>(b);
}

std::string describe(const Object& x) {
  if (auto m = std::get_if<PresentedModule>(&x)) return describe(*m);
  return std::get<Complex>(x).str();
}

HomGroup::HomGroup(const Object& a, const Object& b) : a_(a), b_(b) {
  if (base_of(a) != base_of(b)) throw InvalidArgument("Hom between a module and a complex");
  if (ring_of(a) != ring_of(b)) throw RingMismatch("Hom between objects over different rings");
  if (base_of(a) == Base::Module)
    hom_ = hom_module(std::get<PresentedModule>(a), std::get<PresentedModule>(b));
  else
    hom_ = homotopy_hom(std::get<Complex>(a), std::get<Complex>(b));
}

const PresentedModule& HomGroup::module() const {
  return std::visit([](const auto& h) -> const PresentedModule& { return h.module; }, hom_);
}

Arrow HomGroup::generator(std::size_t k) const {
  if (auto h = std::get_if<HomModule>(&hom_)) return h->basis.at(k);
  return std::get<HomotopyHomGroup>(hom_).basis.at(k);
}

Arrow HomGroup::to_arrow(const Matrix& coords) const {
  if (auto h = std::get_if<HomModule>(&hom_)) return h->to_morphism(coords);
  return std::get<HomotopyHomGroup>(hom_).to_chain_map(coords);
}

Matrix HomGroup::to_coords(const Arrow& f) const {
  if (auto h = std::get_if<HomModule>(&hom_)) return h->to_coords(std::get<ModuleMorphism>(f));
  return std::get<HomotopyHomGroup>(hom_).to_coords(std::get<ChainMap>(f));
}

ModuleMorphism induced(const HomGroup& from, const HomGroup& to, const std::optional<Arrow>& pre,
                       const std::optional<Arrow>& post) {
  const Ring& R = ring_of(from.source());
  Matrix cols(R, to.size(), 0);
  for (std::size_t k = 0; k < from.size(); ++k) {
    Arrow phi = from.generator(k);
    if (pre) phi = compose(phi, *pre);
    if (post) phi = compose(*post, phi);
    cols = hcat(cols, to.to_coords(phi));
  }
  return unchecked_morphism(from.module(), to.module(), cols);
}

// ---------------------------------------------------------------- sequences

struct ObjectSequence::State {
  std::string rule;
  Ring ring = Ring::integers();
  Base base = Base::Module;
  std::optional<std::size_t> horizon;
  ItemFn item;
  ArrowFn arrow;
  std::mutex mu;
  std::map<std::size_t, Object> items;
  std::map<std::size_t, Arrow> arrows;
};

ObjectSequence::ObjectSequence(std::vector<Object> items, std::vector<Arrow> transitions, std::string rule)
    : s_(std::make_shared<State>()) {
  if (items.empty()) throw InvalidArgument("a sequence needs at least one item");
  if (transitions.size() + 1 != items.size())
    throw InvalidArgument("a sequence of " + std::to_string(items.size()) + " items needs " +
                          std::to_string(items.size() - 1) + " transitions");
  s_->rule = std::move(rule);
  s_->ring = ring_of(items[0]);
  s_->base = base_of(items[0]);
  s_->horizon = items.size() - 1;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (base_of(items[i]) != s_->base) throw InvalidArgument("sequence mixes modules and complexes");
    if (ring_of(items[i]) != s_->ring) throw RingMismatch("sequence items over different rings");
  }
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    if (!same_object(arrow_source(transitions[i]), items[i]) || !same_object(arrow_target(transitions[i]), items[i + 1]))
      throw InvalidArgument("transition " + std::to_string(i) + " does not connect items " + std::to_string(i) +
                            " and " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < items.size(); ++i) s_->items.emplace(i, items[i]);
  for (std::size_t i = 0; i < transitions.size(); ++i) s_->arrows.emplace(i, transitions[i]);
}

ObjectSequence::ObjectSequence(std::string rule, Ring ring, Base base, ItemFn item, ArrowFn arrow)
    : s_(std::make_shared<State>()) {
  s_->rule = std::move(rule);
  s_->ring = std::move(ring);
  s_->base = base;
  s_->item = std::move(item);
  s_->arrow = std::move(arrow);
}

Base ObjectSequence::base() const { return s_->base; }
const Ring& ObjectSequence::ring() const { return s_->ring; }
const std::string& ObjectSequence::rule() const { return s_->rule; }
std::optional<std::size_t> ObjectSequence::horizon() const { return s_->horizon; }

Object ObjectSequence::item(std::size_t i) const {
  {
    std::lock_guard<std::mutex> lock(s_->mu);
    if (auto it = s_->items.find(i); it != s_->items.end()) return it->second;
  }
  if (s_->horizon && i > *s_->horizon)
    throw HorizonInsufficient("sequence item " + std::to_string(i) + " requested, window ends at " +
                              std::to_string(*s_->horizon));
  Object x = s_->item(i);
  std::lock_guard<std::mutex> lock(s_->mu);
  return s_->items.emplace(i, std::move(x)).first->second;
}

Arrow ObjectSequence::transition(std::size_t i) const {
  {
    std::lock_guard<std::mutex> lock(s_->mu);
    if (auto it = s_->arrows.find(i); it != s_->arrows.end()) return it->second;
  }
  if (s_->horizon && i + 1 > *s_->horizon)
    throw HorizonInsufficient("transition " + std::to_string(i) + " requested, window ends at " +
                              std::to_string(*s_->horizon));
  Arrow f = s_->arrow(i);
  std::lock_guard<std::mutex> lock(s_->mu);
  return s_->arrows.emplace(i, std::move(f)).first->second;
}

Arrow ObjectSequence::transition(std::size_t i, std::size_t j) const {
  if (j < i) throw InvalidArgument("transition indices out of order");
  Arrow f = identity_arrow(item(i));
  for (std::size_t k = i; k < j; ++k) f = compose(transition(k), f);
  return f;
}

ObjectSequence constant_sequence(const Object& x) {
  return ObjectSequence("constant", ring_of(x), base_of(x), [x](std::size_t) { return x; },
                        [x](std::size_t) { return identity_arrow(x); });
}

ObjectSequence multiplication_sequence(const Object& x, const Elem& r) {
  const Ring& R = ring_of(x);
  if (!R.contains(r)) throw RingMismatch("multiplier is not an element of " + R.name());
  return ObjectSequence("multiplication by " + R.format(r), R, base_of(x), [x](std::size_t) { return x; },
                        [x, r](std::size_t) -> Arrow {
                          if (auto m = std::get_if<PresentedModule>(&x)) return scale(r, ModuleMorphism::identity(*m));
                          return scale(r, ChainMap::identity(std::get<Complex>(x)));
                        });
}

ObjectSequence prufer_tower(const Ring& ring, const Elem& x) {
  if (!ring.contains(x)) throw RingMismatch("tower element is not an element of " + ring.name());
  auto item = [ring, x](std::size_t i) -> Object { return PresentedModule::cyclic(ring, ring.pow(x, i)); };
  auto arrow = [ring, x](std::size_t i) -> Arrow {
    Matrix m(ring, 1, 1);
    m(0, 0) = x;
    return ModuleMorphism(PresentedModule::cyclic(ring, ring.pow(x, i)), PresentedModule::cyclic(ring, ring.pow(x, i + 1)), m);
  };
  return ObjectSequence("socle tower of the " + ring.format(x) + "-primary Pruefer module", ring, Base::Module, item, arrow);
}

ObjectSequence socle_tower(const PresentedModule& m, const Ideal& I) {
  if (m.ring() != I.ring) throw RingMismatch("ideal and module over different rings");
  auto item = [m, I](std::size_t i) -> Object { return annihilator_submodule(m, I, i).module; };
  auto arrow = [m, I](std::size_t i) -> Arrow {
    const auto a = annihilator_submodule(m, I, i), b = annihilator_submodule(m, I, i + 1);
    const Matrix span = hcat(b.inclusion.matrix(), m.relations());
    auto z = solve_linear(span, a.inclusion.matrix());
    if (!z) throw Error("socle tower: smaller annihilator not contained in the larger one");
    return ModuleMorphism(a.module, b.module, z->block(0, b.module.generators(), 0, a.module.generators()));
  };
  return ObjectSequence("socle tower " + I.str(), m.ring(), Base::Module, item, arrow);
}

ObjectSequence truncation_tower(const BoundedAboveComplex& x) {
  auto item = [x](std::size_t n) -> Object {
    const int lo = -static_cast<int>(n);
    return truncate_ge(x.extended_to(lo), lo).complex;
  };
  auto arrow = [item](std::size_t n) -> Arrow {
    const Complex a = std::get<Complex>(item(n)), b = std::get<Complex>(item(n + 1));
    std::vector<std::pair<int, Matrix>> comps;
    if (!a.empty())
      for (int k = a.lo(); k <= a.hi(); ++k) comps.emplace_back(k, Matrix::identity(a.ring(), a.rank(k)));
    return ChainMap(a, b, comps);
  };
  return ObjectSequence("truncation tower", x.window().ring(), Base::Complex, item, arrow);
}

ObjectSequence koszul_sequence(const Complex& x, const Ideal& I) {
  return ObjectSequence(
      "Koszul tower " + I.str(), x.ring(), Base::Complex, [x, I](std::size_t i) -> Object { return gamma_stage(x, I, i + 1); },
      [x, I](std::size_t i) -> Arrow { return gamma_transition(x, I, i + 1); });
}

// ---------------------------------------------------------------- formal morphisms

FormalMorphism::FormalMorphism(ObjectSequence source, ObjectSequence target, std::vector<FormalRep> reps)
    : src_(std::move(source)), tgt_(std::move(target)), reps_(std::move(reps)) {
  if (reps_.empty()) throw InvalidArgument("a formal morphism needs at least one representative");
  if (src_.base() != tgt_.base()) throw InvalidArgument("formal morphism between sequences of different bases");
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    const auto& r = reps_[i];
    if (r.i != i) throw InvalidArgument("representative " + std::to_string(i) + " is labelled " + std::to_string(r.i));
    if (!same_object(arrow_source(r.map), src_.item(i)) || !same_object(arrow_target(r.map), tgt_.item(r.j)))
      throw InvalidArgument("representative " + std::to_string(i) + " does not map X_" + std::to_string(i) + " to Y_" +
                            std::to_string(r.j));
  }
  for (std::size_t i = 0; i + 1 < reps_.size(); ++i) {
    const auto& a = reps_[i];
    const auto& b = reps_[i + 1];
    const std::size_t J = std::max(a.j, b.j);
    const Arrow lhs = compose(tgt_.transition(a.j, J), a.map);
    const Arrow rhs = compose(tgt_.transition(b.j, J), compose(b.map, src_.transition(i)));
    if (!equivalent(lhs, rhs))
      throw InvalidArgument("representatives " + std::to_string(i) + " and " + std::to_string(i + 1) + " are incompatible");
    certs_.push_back(J);
  }
}

FormalMorphism FormalMorphism::level(const ObjectSequence& x, const ObjectSequence& y,
                                     const std::function<Arrow(std::size_t)>& f, std::size_t depth) {
  std::vector<FormalRep> reps;
  for (std::size_t i = 0; i <= depth; ++i) reps.push_back(FormalRep{i, i, f(i)});
  return FormalMorphism(x, y, std::move(reps));
}

FormalMorphism FormalMorphism::identity(const ObjectSequence& x, std::size_t depth) {
  return level(x, x, [&x](std::size_t i) { return identity_arrow(x.item(i)); }, depth);
}

FormalMorphism compose(const FormalMorphism& g, const FormalMorphism& f) {
  std::vector<FormalRep> reps;
  for (std::size_t i = 0; i <= f.depth() && f.rep(i).j <= g.depth(); ++i) {
    const auto& gr = g.rep(f.rep(i).j);
    reps.push_back(FormalRep{i, gr.j, compose(gr.map, f.rep(i).map)});
  }
  if (reps.empty()) throw HorizonInsufficient("composite has no representative within the available depth");
  return FormalMorphism(f.source(), g.target(), std::move(reps));
}

// ---------------------------------------------------------------- towers

void InverseTower::validate() const {
  if (modules.empty()) throw InvalidArgument("a tower needs at least one module");
  if (maps.size() + 1 != modules.size()) throw InvalidArgument("a tower of n modules needs n - 1 maps");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto& f = maps[i];
    if (f.source().generators() != modules[i + 1].generators() || f.target().generators() != modules[i].generators() ||
        f.source().relations() != modules[i + 1].relations() || f.target().relations() != modules[i].relations())
      throw InvalidArgument("tower map " + std::to_string(i) + " does not go from stage " + std::to_string(i + 1) +
                            " to stage " + std::to_string(i));
  }
}

InverseTower adic_tower(const PresentedModule& m, const Ideal& I, std::size_t depth) {
  InverseTower t;
  for (std::size_t i = 0; i <= depth; ++i) {
    AdicStage s = adic_stage(m, I, i);
    t.modules.push_back(s.module);
    if (i < depth) {
      if (!s.tower) throw Error("adic stage without a tower map");
      t.maps.push_back(*s.tower);
    }
  }
  return t;
}

InverseTower multiplication_tower(const PresentedModule& m, const Elem& r, std::size_t depth) {
  InverseTower t;
  for (std::size_t i = 0; i <= depth; ++i) {
    t.modules.push_back(m);
    if (i < depth) t.maps.push_back(scale(r, ModuleMorphism::identity(m)));
  }
  return t;
}

namespace {

// Columns of v lie in span(cols of s) + relations of the module.
bool contained(const Matrix& v, const Matrix& s, const PresentedModule& m) {
  const Matrix span = hcat(s, m.relations());
  if (span.cols() == 0) return v.is_zero();
  return solve_linear(span, v).has_value();
}

}  // namespace

std::string LimResult::verdict() const {
  return mittag_leffler ? "lim1 zero by Mittag-Leffler at depth " + std::to_string(images.size() - 1) : "undetermined";
}

LimResult lim_lim1(const InverseTower& tower) {
  tower.validate();
  const std::size_t D = tower.modules.size() - 1;
  const Ring& R = tower.modules[0].ring();
  LimResult out;
  std::vector<std::vector<ModuleMorphism>> comp(D + 1);
  for (std::size_t i = 0; i <= D; ++i) {
    comp[i].push_back(ModuleMorphism::identity(tower.modules[i]));
    for (std::size_t k = i + 1; k <= D; ++k) comp[i].push_back(compose(comp[i].back(), tower.maps[k - 1]));
    std::vector<PresentedModule> ims;
    for (const auto& c : comp[i]) ims.push_back(image(c).module);
    out.images.push_back(std::move(ims));
  }
  out.stable_from.assign(D, std::nullopt);
  for (std::size_t i = 0; i < D; ++i) {
    const PresentedModule& Mi = tower.modules[i];
    std::optional<std::size_t> from;
    for (std::size_t k = D; k-- > i;) {
      // image(M_(k+1) -> M_i) is always inside image(M_k -> M_i)
      if (!contained(comp[i][k - i].matrix(), comp[i][k + 1 - i].matrix(), Mi)) break;
      from = k;
    }
    out.stable_from[i] = from;
  }
  out.mittag_leffler = D >= 1;
  for (const auto& s : out.stable_from) out.mittag_leffler = out.mittag_leffler && s.has_value();

  if (D == 0) {
    out.lim = simplify(tower.modules[0]).module;
    return out;
  }
  std::vector<PresentedModule> head(tower.modules.begin(), tower.modules.end() - 1);
  const DirectSum P = direct_sum(R, tower.modules);
  const DirectSum Q = direct_sum(R, head);
  Matrix delta(R, Q.module.generators(), P.module.generators());
  std::size_t row = 0, col = 0;
  for (std::size_t i = 0; i < D; ++i) {
    const std::size_t gi = tower.modules[i].generators();
    delta.set_block(row, col, Matrix::identity(R, gi));
    delta.set_block(row, col + gi, -tower.maps[i].matrix());
    row += gi;
    col += gi;
  }
  out.lim = simplify(kernel(unchecked_morphism(P.module, Q.module, delta)).module).module;
  return out;
}

// ---------------------------------------------------------------- Hom formula

bool HomFormalResult::all_stabilized() const {
  for (const auto& c : certificates)
    if (!c) return false;
  return true;
}

HomFormalResult hom_formal(const ObjectSequence& x, const ObjectSequence& y, std::size_t depth) {
  if (x.base() != y.base()) throw InvalidArgument("hom_formal between sequences of different bases");
  if (x.ring() != y.ring()) throw RingMismatch("hom_formal between sequences over different rings");
  if (depth == 0) throw InvalidArgument("hom_formal depth must be positive");
  std::size_t jmax = depth + 1;
  if (auto h = y.horizon()) {
    if (*h < depth) throw HorizonInsufficient("target window ends before depth " + std::to_string(depth));
    jmax = std::min(jmax, *h);
  }
  HomFormalResult out;
  std::vector<HomGroup> top;
  for (std::size_t i = 0; i <= depth; ++i) {
    const Object xi = x.item(i);
    std::vector<HomGroup> g;
    for (std::size_t j = 0; j <= jmax; ++j) g.emplace_back(xi, y.item(j));
    std::optional<std::size_t> cert;
    for (std::size_t m = jmax; m-- > 0;) {
      if (!is_bijective(induced(g[m], g[m + 1], std::nullopt, y.transition(m)))) break;
      if (m <= depth) cert = m;
    }
    out.certificates.push_back(cert);
    top.push_back(g[depth]);
    out.tower.modules.push_back(g[depth].module());
  }
  for (std::size_t i = 0; i < depth; ++i)
    out.tower.maps.push_back(induced(top[i + 1], top[i], x.transition(i), std::nullopt));
  out.lim = lim_lim1(out.tower);
  out.approximation = out.lim.lim;
  return out;
}

void TestSet::validate() const {
  if (objects.empty()) throw InvalidArgument("a test set needs at least one object");
}

std::string StabilizationVerdict::str(std::size_t horizon) const {
  if (stabilized_at) return "stabilized at " + std::to_string(*stabilized_at);
  return "not stabilized by " + std::to_string(horizon);
}

namespace {

void check_tests(const TestSet& tests, Base base, const Ring& ring) {
  tests.validate();
  for (const auto& c : tests.objects) {
    if (base_of(c) != base) throw InvalidArgument("test object of the wrong kind");
    if (ring_of(c) != ring) throw RingMismatch("test object over a different ring");
  }
}

}  // namespace

std::vector<StabilizationVerdict> is_cauchy(const ObjectSequence& x, const TestSet& tests, std::size_t horizon) {
  check_tests(tests, x.base(), x.ring());
  std::vector<StabilizationVerdict> out;
  for (const auto& c : tests.objects) {
    std::vector<HomGroup> g;
    for (std::size_t i = 0; i <= horizon; ++i) g.emplace_back(c, x.item(i));
    StabilizationVerdict v;
    for (std::size_t m = horizon; m-- > 0;) {
      if (!is_bijective(induced(g[m], g[m + 1], std::nullopt, x.transition(m)))) break;
      v.stabilized_at = m;
    }
    out.push_back(v);
  }
  return out;
}

std::vector<StabilizationVerdict> eventually_invertible(const FormalMorphism& f, const TestSet& tests,
                                                        std::size_t horizon) {
  check_tests(tests, f.source().base(), f.source().ring());
  if (horizon > f.depth()) throw HorizonInsufficient("formal morphism has representatives only up to " + std::to_string(f.depth()));
  std::vector<StabilizationVerdict> out;
  for (const auto& c : tests.objects) {
    StabilizationVerdict v;
    for (std::size_t i = horizon + 1; i-- > 0;) {
      const auto& r = f.rep(i);
      const HomGroup a(c, f.source().item(i)), b(c, f.target().item(r.j));
      if (!is_bijective(induced(a, b, std::nullopt, r.map))) break;
      v.stabilized_at = i;
    }
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------- homotopy colimits

Hocolim hocolim_finite(const ObjectSequence& x, std::size_t n) {
  if (x.base() != Base::Complex) throw InvalidArgument("homotopy colimits need a sequence of complexes");
  const Ring& R = x.ring();
  std::vector<Complex> items;
  for (std::size_t i = 0; i <= n; ++i) items.push_back(std::get<Complex>(x.item(i)));
  const ComplexSum T = direct_sum(items);
  Hocolim out;
  if (n == 0) {
    const ConeResult c = cone(ChainMap::zero(Complex(R), items[0]));
    out.telescope = c.cone;
    out.inclusions.push_back(c.inclusion);
    return out;
  }
  const ComplexSum S = direct_sum(std::vector<Complex>(items.begin(), items.end() - 1));
  ChainMap F = ChainMap::zero(S.sum, T.sum);
  for (std::size_t i = 0; i < n; ++i) {
    const ChainMap phi = std::get<ChainMap>(x.transition(i));
    const ChainMap diff = std::get<ChainMap>(subtract(T.injections[i], compose(T.injections[i + 1], phi)));
    F = add(F, compose(diff, S.projections[i]));
  }
  const ConeResult c = cone(F);
  out.telescope = c.cone;
  for (std::size_t i = 0; i <= n; ++i) out.inclusions.push_back(compose(c.inclusion, T.injections[i]));
  return out;
}

HocolimCheck hocolim_check(const ObjectSequence& x, std::size_t n, const Complex& test) {
  const Ring& R = x.ring();
  const Hocolim h = hocolim_finite(x, n);
  std::vector<HomGroup> g;
  std::vector<PresentedModule> mods;
  for (std::size_t i = 0; i <= n; ++i) {
    g.emplace_back(test, x.item(i));
    mods.push_back(g.back().module());
  }
  const HomGroup H(test, h.telescope);
  const DirectSum T = direct_sum(R, mods);
  const DirectSum S = direct_sum(R, std::vector<PresentedModule>(mods.begin(), mods.end() - 1));
  Matrix delta(R, T.module.generators(), S.module.generators());
  std::size_t off = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t gi = mods[i].generators();
    delta.set_block(off, off, Matrix::identity(R, gi));
    delta.set_block(off + gi, off, -induced(g[i], g[i + 1], std::nullopt, x.transition(i)).matrix());
    off += gi;
  }
  const QuotientResult colim = cokernel(unchecked_morphism(S.module, T.module, delta));
  Matrix psi(R, H.size(), 0);
  for (std::size_t i = 0; i <= n; ++i) psi = hcat(psi, induced(g[i], H, std::nullopt, Arrow(h.inclusions[i])).matrix());
  HocolimCheck out;
  out.colim = colim.module;
  out.hom = H.module();
  try {
    out.iso = is_bijective(ModuleMorphism(colim.module, H.module(), psi));
  } catch (const InvalidArgument&) {
    out.iso = false;
  }
  return out;
}

// ---------------------------------------------------------------- phantoms

PhantomReport phantom_check(const Arrow& f, const TestSet& tests) {
  const Object X = arrow_source(f), Y = arrow_target(f);
  check_tests(tests, base_of(X), ring_of(X));
  PhantomReport out;
  out.phantom = true;
  for (const auto& c : tests.objects) {
    const bool z = is_zero_map(induced(HomGroup(c, X), HomGroup(c, Y), std::nullopt, f));
    out.vanishes.push_back(z);
    out.phantom = out.phantom && z;
  }
  return out;
}

HomFormalResult phantomless_check(const ObjectSequence& x, const ObjectSequence& y, std::size_t depth) {
  return hom_formal(x, y, depth);
}

YonedaReport restricted_yoneda_check(const BoundedAboveComplex& x, const BoundedAboveComplex& y, std::size_t horizon) {
  const int h = static_cast<int>(horizon);
  const Object yc = y.extended_to(-h - 1);
  const ObjectSequence tower = truncation_tower(x);
  YonedaReport out;
  out.horizon = horizon;
  std::vector<HomGroup> g;
  for (std::size_t n = 0; n <= horizon; ++n) {
    g.emplace_back(tower.item(n), yc);
    out.groups.push_back(g.back().module());
  }
  for (std::size_t n = 0; n < horizon; ++n)
    out.restrictions.push_back(induced(g[n + 1], g[n], tower.transition(n), std::nullopt));
  for (std::size_t m = horizon; m-- > 0;) {
    if (!is_bijective(out.restrictions[m])) break;
    out.stabilized_from = m;
  }
  out.lim = lim_lim1(InverseTower{out.groups, out.restrictions});
  if (x.is_perfect()) {
    const Complex& w = x.window();
    const int lo = std::min(-h, w.empty() ? 0 : w.lo()) - 1;
    out.matches_direct = is_isomorphic(homotopy_hom(w, y.extended_to(lo)).module, out.lim.lim);
  }
  return out;
}

// ---------------------------------------------------------------- finite definition

namespace {

FdSubgroup fd_with(const Arrow& via, const Object& x, std::shared_ptr<const HomGroup> ambient) {
  const Object D = arrow_target(via);
  const HomGroup hd(D, x);
  const ImageResult im = image(induced(hd, *ambient, via, std::nullopt));
  return FdSubgroup{via, x, std::move(ambient), im.module, im.inclusion};
}

void same_ambient(const FdSubgroup& a, const FdSubgroup& b) {
  if (!same_object(arrow_source(a.via), arrow_source(b.via)) || !same_object(a.x, b.x))
    throw InvalidArgument("finite-definition subgroups of different Hom groups");
}

struct SumArrow {
  Arrow to_sum;                   // C -> D1 + D2
  Arrow first;                    // D1 -> D1 + D2
};

SumArrow sum_arrow(const Arrow& v1, const Arrow& v2) {
  const Object C = arrow_source(v1);
  if (auto m1 = std::get_if<ModuleMorphism>(&v1)) {
    const auto& m2 = std::get<ModuleMorphism>(v2);
    const DirectSum ds = direct_sum(m1->source().ring(), {m1->target(), m2.target()});
    return {ModuleMorphism(m1->source(), ds.module, vcat(m1->matrix(), m2.matrix())), ds.injections[0]};
  }
  const auto& c1 = std::get<ChainMap>(v1);
  const auto& c2 = std::get<ChainMap>(v2);
  const ComplexSum cs = direct_sum(std::vector<Complex>{c1.target(), c2.target()});
  std::vector<std::pair<int, Matrix>> comps;
  const Complex& src = c1.source();
  if (!src.empty())
    for (int k = src.lo(); k <= src.hi(); ++k) comps.emplace_back(k, vcat(c1.component(k), c2.component(k)));
  return {ChainMap(src, cs.sum, comps), cs.injections[0]};
}

}  // namespace

FdSubgroup fd_subgroup(const Arrow& via, const Object& x) {
  return fd_with(via, x, std::make_shared<const HomGroup>(arrow_source(via), x));
}

FdSubgroup fd_sum(const FdSubgroup& u1, const FdSubgroup& u2) {
  same_ambient(u1, u2);
  return fd_with(sum_arrow(u1.via, u2.via).to_sum, u1.x, u1.ambient);
}

FdSubgroup fd_intersect(const FdSubgroup& u1, const FdSubgroup& u2) {
  same_ambient(u1, u2);
  const SumArrow s = sum_arrow(u1.via, u2.via);
  const Arrow to_e = [&]() -> Arrow {
    if (auto m = std::get_if<ModuleMorphism>(&s.to_sum)) return cokernel(*m).projection;
    return cone(std::get<ChainMap>(s.to_sum)).inclusion;
  }();
  return fd_with(compose(to_e, compose(s.first, u1.via)), u1.x, u1.ambient);
}

}  // namespace cwb
