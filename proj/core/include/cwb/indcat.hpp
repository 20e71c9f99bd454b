#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cwb/complex.hpp"

namespace cwb {

// ---------------------------------------------------------------- base category

/// An object of the base category: a module, or a complex in the homotopy category.
using Object = std::variant<PresentedModule, Complex>;
/// A morphism of the base category; chain maps stand for their homotopy class.
using Arrow = std::variant<ModuleMorphism, ChainMap>;

enum class Base { Module, Complex };

Base base_of(const Object& x);
Base base_of(const Arrow& f);
const Ring& ring_of(const Object& x);
Object arrow_source(const Arrow& f);
Object arrow_target(const Arrow& f);
Arrow identity_arrow(const Object& x);
Arrow zero_arrow(const Object& x, const Object& y);
Arrow compose(const Arrow& g, const Arrow& f);
Arrow subtract(const Arrow& f, const Arrow& g);
/// Equality of arrows (of homotopy classes for complexes).
bool equivalent(const Arrow& f, const Arrow& g);
/// Structural equality of objects.
bool same_object(const Object& a, const Object& b);
std::string describe(const Object& x);

/// Hom(a, b) in the base category: Hom_A or Hom_K.
class HomGroup {
 public:
  HomGroup(const Object& a, const Object& b);

  const Object& source() const { return a_; }
  const Object& target() const { return b_; }
  const PresentedModule& module() const;
  std::size_t size() const { return module().generators(); }
  Arrow generator(std::size_t k) const;
  Arrow to_arrow(const Matrix& coords) const;
  Matrix to_coords(const Arrow& f) const;

 private:
  Object a_, b_;
  std::variant<HomModule, HomotopyHomGroup> hom_;
};

/// Hom(a, b) -> Hom(a', b'), phi -> post o phi o pre.
ModuleMorphism induced(const HomGroup& from, const HomGroup& to, const std::optional<Arrow>& pre,
                       const std::optional<Arrow>& post);

// ---------------------------------------------------------------- sequences

/// X_0 -> X_1 -> ..., a finite window or a generating rule.
class ObjectSequence {
 public:
  using ItemFn = std::function<Object(std::size_t)>;
  using ArrowFn = std::function<Arrow(std::size_t)>;

  /// Explicit window X_0..X_H with transitions X_i -> X_(i+1).
  ObjectSequence(std::vector<Object> items, std::vector<Arrow> transitions, std::string rule = "explicit");
  /// Unbounded sequence produced on demand.
  ObjectSequence(std::string rule, Ring ring, Base base, ItemFn item, ArrowFn arrow);

  Base base() const;
  const Ring& ring() const;
  const std::string& rule() const;
  /// Last available index of a finite window.
  std::optional<std::size_t> horizon() const;

  /// Throws HorizonInsufficient beyond a finite window.
  Object item(std::size_t i) const;
  Arrow transition(std::size_t i) const;
  /// Composite X_i -> X_j for i <= j.
  Arrow transition(std::size_t i, std::size_t j) const;

 private:
  struct State;
  std::shared_ptr<State> s_;
};

ObjectSequence constant_sequence(const Object& x);
/// The object x with every transition multiplication by r.
ObjectSequence multiplication_sequence(const Object& x, const Elem& r);
/// A/(x^i) with transitions multiplication by x: the socle tower of the
/// x-primary Pruefer module.
ObjectSequence prufer_tower(const Ring& ring, const Elem& x);
/// {m in M : I^i m = 0} with inclusions.
ObjectSequence socle_tower(const PresentedModule& m, const Ideal& I);
/// sigma_{>=-n} X with the canonical inclusions.
ObjectSequence truncation_tower(const BoundedAboveComplex& x);
/// Gamma_(i+1) X = Hom(K(x^(i+1)), X) with the Koszul transitions.
ObjectSequence koszul_sequence(const Complex& x, const Ideal& I);

/// A morphism of sequences given by representatives f_i : X_i -> Y_(j(i)).
struct FormalRep {
  std::size_t i = 0, j = 0;
  Arrow map;
};

class FormalMorphism {
 public:
  /// reps[i] must represent index i; compatibility is checked: pushed to a
  /// common stage, f_(i+1) o x_i and y o f_i agree.
  FormalMorphism(ObjectSequence source, ObjectSequence target, std::vector<FormalRep> reps);

  static FormalMorphism level(const ObjectSequence& x, const ObjectSequence& y, const std::function<Arrow(std::size_t)>& f,
                              std::size_t depth);
  static FormalMorphism identity(const ObjectSequence& x, std::size_t depth);

  const ObjectSequence& source() const { return src_; }
  const ObjectSequence& target() const { return tgt_; }
  std::size_t depth() const { return reps_.size() - 1; }
  const FormalRep& rep(std::size_t i) const { return reps_.at(i); }
  /// Stage at which each compatibility square was verified.
  const std::vector<std::size_t>& certificates() const { return certs_; }

 private:
  ObjectSequence src_, tgt_;
  std::vector<FormalRep> reps_;
  std::vector<std::size_t> certs_;
};

/// g o f; the depth is limited by the representatives of g that f reaches.
FormalMorphism compose(const FormalMorphism& g, const FormalMorphism& f);

// ---------------------------------------------------------------- towers

/// M_0 <- M_1 <- ... <- M_D; maps[i] : M_(i+1) -> M_i.
struct InverseTower {
  std::vector<PresentedModule> modules;
  std::vector<ModuleMorphism> maps;
  /// Throws InvalidArgument when the maps do not chain.
  void validate() const;
};

/// M / I^i M for i = 0..depth.
InverseTower adic_tower(const PresentedModule& m, const Ideal& I, std::size_t depth);
/// M <- M <- ... with every map multiplication by r.
InverseTower multiplication_tower(const PresentedModule& m, const Elem& r, std::size_t depth);

struct LimResult {
  /// Kernel of (id - shift) on the product of the window.
  PresentedModule lim;
  /// images[i][k - i] = image of M_k -> M_i, for k = i..D.
  std::vector<std::vector<PresentedModule>> images;
  /// Per stage i < D: least k <= D - 1 from which the image chain is constant.
  std::vector<std::optional<std::size_t>> stable_from;
  bool mittag_leffler = false;
  std::string verdict() const;
};
LimResult lim_lim1(const InverseTower& tower);

// ---------------------------------------------------------------- Hom formula

struct HomFormalResult {
  /// lim_i colim_j Hom(X_i, Y_j) over the window i, j <= depth.
  PresentedModule approximation;
  /// Per i: least j from which Hom(X_i, Y_j) -> Hom(X_i, Y_(j+1)) are
  /// isomorphisms up to depth + 1.
  std::vector<std::optional<std::size_t>> certificates;
  InverseTower tower;  // i -> colim_j Hom(X_i, Y_j)
  LimResult lim;
  bool all_stabilized() const;
};
HomFormalResult hom_formal(const ObjectSequence& x, const ObjectSequence& y, std::size_t depth);

/// Test objects standing in for the compact objects.
struct TestSet {
  std::vector<Object> objects;
  void validate() const;
};

struct StabilizationVerdict {
  std::optional<std::size_t> stabilized_at;
  std::string str(std::size_t horizon) const;
};

/// Per test object C: least n with Hom(C, X_i) -> Hom(C, X_(i+1)) bijective
/// for n <= i < horizon.
std::vector<StabilizationVerdict> is_cauchy(const ObjectSequence& x, const TestSet& tests, std::size_t horizon);

/// Per test object C: least n with Hom(C, X_i) -> Hom(C, Y_j(i)) bijective
/// for n <= i <= horizon.
std::vector<StabilizationVerdict> eventually_invertible(const FormalMorphism& f, const TestSet& tests,
                                                        std::size_t horizon);

// ---------------------------------------------------------------- homotopy colimits

struct Hocolim {
  Complex telescope;
  std::vector<ChainMap> inclusions;  // X_n -> telescope
};
/// cone(id - phi : sum_(n<N) X_n -> sum_(n<=N) X_n).
Hocolim hocolim_finite(const ObjectSequence& x, std::size_t n);

struct HocolimCheck {
  PresentedModule colim;     // colim_(n<=N) Hom_K(C, X_n)
  PresentedModule hom;       // Hom_K(C, hocolim)
  bool iso = false;          // the induced map is bijective
};
HocolimCheck hocolim_check(const ObjectSequence& x, std::size_t n, const Complex& test);

// ---------------------------------------------------------------- phantoms

struct PhantomReport {
  bool phantom = false;
  std::vector<bool> vanishes;  // per test object
};
/// f is phantom relative to the tests when Hom(C, f) = 0 for every C.
PhantomReport phantom_check(const Arrow& f, const TestSet& tests);

/// lim^1 of i -> colim_j Hom(X_i, Y_j) vanishes by Mittag-Leffler at depth.
HomFormalResult phantomless_check(const ObjectSequence& x, const ObjectSequence& y, std::size_t depth);

struct YonedaReport {
  std::size_t horizon = 0;
  std::vector<PresentedModule> groups;  // Hom_K(sigma_{>=-n} X, Y), n = 0..horizon
  std::vector<ModuleMorphism> restrictions;  // groups[n+1] -> groups[n]
  std::optional<std::size_t> stabilized_from;
  LimResult lim;
  /// X perfect: lim is isomorphic to Hom_K(X, Y).
  std::optional<bool> matches_direct;
  bool horizon_sufficient() const { return stabilized_from.has_value(); }
};
YonedaReport restricted_yoneda_check(const BoundedAboveComplex& x, const BoundedAboveComplex& y, std::size_t horizon);

// ---------------------------------------------------------------- finite definition

/// Image of Hom(D, X) -> Hom(C, X) along via : C -> D.
struct FdSubgroup {
  Arrow via;
  Object x;
  std::shared_ptr<const HomGroup> ambient;  // Hom(C, X)
  PresentedModule module;
  ModuleMorphism inclusion;  // into ambient->module()
};
FdSubgroup fd_subgroup(const Arrow& via, const Object& x);
/// Along C -> D1 + D2.
FdSubgroup fd_sum(const FdSubgroup& u1, const FdSubgroup& u2);
/// Along C -> D1 -> E, E the cokernel (modules) or cone (complexes) of C -> D1 + D2.
FdSubgroup fd_intersect(const FdSubgroup& u1, const FdSubgroup& u2);

}  // namespace cwb
