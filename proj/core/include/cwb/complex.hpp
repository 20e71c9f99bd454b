#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cwb/module.hpp"

namespace cwb {

/// Bounded cochain complex of finite free modules, d^n : X^n -> X^(n+1).
class Complex {
 public:
  Complex() : Complex(Ring::integers()) {}
  explicit Complex(Ring ring);
  /// ranks[k] is the rank in degree lo + k; diffs[k] : X^(lo+k) -> X^(lo+k+1)
  /// for k < ranks.size() - 1. Checks shapes and d o d = 0.
  Complex(Ring ring, int lo, std::vector<std::size_t> ranks, std::vector<Matrix> diffs);

  static Complex zero(const Ring& ring) { return Complex(ring); }
  /// A^rank placed in a single degree.
  static Complex concentrated(const Ring& ring, int degree, std::size_t rank = 1);
  /// (A^cols --d--> A^rows) in degrees lo, lo + 1.
  static Complex two_term(const Ring& ring, int lo, const Matrix& d);

  const Ring& ring() const { return ring_; }
  bool empty() const { return ranks_.empty(); }
  /// Lowest / highest degree with a nonzero term (lo > hi when zero).
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int n) const;
  /// d^n as a rank(n+1) x rank(n) matrix (zero outside the support).
  Matrix d(int n) const;
  std::size_t total_rank() const;

  std::string str() const;

  friend bool operator==(const Complex& a, const Complex& b);

 private:
  void trim();

  Ring ring_;
  int lo_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<Matrix> diffs_;
};

/// Degreewise map f^n : X^n -> Y^n commuting with the differentials.
class ChainMap {
 public:
  /// components(n) is looked up for n in [min lo, max hi]; missing degrees are zero.
  ChainMap(Complex source, Complex target, const std::vector<std::pair<int, Matrix>>& components);

  static ChainMap identity(const Complex& x);
  static ChainMap zero(const Complex& x, const Complex& y);

  const Complex& source() const { return src_; }
  const Complex& target() const { return tgt_; }
  Matrix component(int n) const;

 private:
  struct Unchecked {};
  ChainMap(Complex source, Complex target, std::vector<std::pair<int, Matrix>> components, Unchecked);
  friend ChainMap unchecked_chain_map(Complex, Complex, std::vector<std::pair<int, Matrix>>);

  Complex src_;
  Complex tgt_;
  std::vector<std::pair<int, Matrix>> comps_;
};

ChainMap unchecked_chain_map(Complex source, Complex target, std::vector<std::pair<int, Matrix>> components);

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap scale(const Elem& a, const ChainMap& f);
/// Degreewise equality of components.
bool same_components(const ChainMap& f, const ChainMap& g);

/// (X[k])^n = X^(n+k), differential (-1)^k d.
Complex shift(const Complex& x, int k);
ChainMap shift(const ChainMap& f, int k);

struct ConeResult {
  Complex cone;
  ChainMap inclusion;   // Y -> cone
  ChainMap projection;  // cone -> X[1]
};
/// cone^n = X^(n+1) + Y^n, d = [[-d_X, 0], [f, d_Y]].
ConeResult cone(const ChainMap& f);
/// Map of cones induced by a strictly commuting square b f = f' a.
ChainMap cone_map(const ChainMap& f, const ChainMap& f2, const ChainMap& a, const ChainMap& b);

struct ComplexSum {
  Complex sum;
  std::vector<ChainMap> injections;
  std::vector<ChainMap> projections;
};
ComplexSum direct_sum(const std::vector<Complex>& parts);

/// Total tensor complex; d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
Complex tensor_complex(const Complex& x, const Complex& y);
ChainMap tensor_map(const ChainMap& f, const ChainMap& g);
/// Hom^n = prod_p Hom(X^p, Y^(p+n)), D f = d_Y f - (-1)^n f d_X.
Complex hom_complex(const Complex& x, const Complex& y);
/// Hom(X, Y) -> Hom(X', Y), f -> f o g for g : X' -> X.
ChainMap hom_complex_pre(const ChainMap& g, const Complex& y);
/// Hom(X, Y) -> Hom(X, Y'), f -> h o f for h : Y -> Y'.
ChainMap hom_complex_post(const Complex& x, const ChainMap& h);

/// Coordinates of a family of maps f^p : X^p -> Y^(p+n) in Hom(X, Y)^n.
Matrix hom_vector(const Complex& x, const Complex& y, int n, const std::vector<std::pair<int, Matrix>>& maps);
/// Inverse of hom_vector: the component X^p -> Y^(p+n) of a vector in Hom(X, Y)^n.
Matrix hom_component(const Complex& x, const Complex& y, int n, const Matrix& v, int p);

/// H^n with ambient cycle representatives and coordinates.
SubquotientModule homology_data(const Complex& x, int n);
PresentedModule homology(const Complex& x, int n);
/// H^n(f).
ModuleMorphism homology_map(const ChainMap& f, int n);
bool is_acyclic(const Complex& x);
bool quasi_iso_check(const ChainMap& f);

/// Chain maps X -> Y modulo null-homotopic maps, as H^0 Hom(X, Y).
struct HomotopyHomGroup {
  PresentedModule module;
  Complex source, target, hom;
  SubquotientModule h0;
  std::vector<ChainMap> basis;

  ChainMap to_chain_map(const Matrix& coords) const;
  Matrix to_coords(const ChainMap& f) const;
};
HomotopyHomGroup homotopy_hom(const Complex& x, const Complex& y);
/// Homotopy h^n : X^n -> Y^(n-1) with f = d h + h d, if one exists.
std::optional<std::vector<std::pair<int, Matrix>>> find_homotopy(const ChainMap& f);
/// Induced map Hom_K(X, Y) -> Hom_K(X', Y') for g : X' -> X, h : Y -> Y'.
ModuleMorphism homotopy_hom_map(const HomotopyHomGroup& from, const HomotopyHomGroup& to,
                                const std::optional<ChainMap>& pre, const std::optional<ChainMap>& post);

struct Truncation {
  Complex complex;
  ChainMap inclusion;  // sigma_{>=n} X -> X
};
/// Brutal truncation keeping degrees >= n.
Truncation truncate_ge(const Complex& x, int n);

/// Leftward extension rule for a bounded-above complex given by a window.
struct ExtensionRule {
  enum class Kind { Perfect, Periodic, KernelResolution };
  Kind kind = Kind::Perfect;
  /// Periodic: differentials d^(lo-1), d^(lo-2), ... cycle through this list.
  std::vector<Matrix> period;
};

/// Bounded-above complex: a finite window plus a rule producing more terms.
class BoundedAboveComplex {
 public:
  BoundedAboveComplex(Complex window, ExtensionRule rule);
  static BoundedAboveComplex perfect(const Complex& x) { return {x, ExtensionRule{}}; }

  const Complex& window() const { return window_; }
  const ExtensionRule& rule() const { return rule_; }
  bool is_perfect() const { return rule_.kind == ExtensionRule::Kind::Perfect; }
  /// The complex extended so that all degrees >= lo are present.
  Complex extended_to(int lo) const;

 private:
  Complex window_;
  ExtensionRule rule_;
};

}  // namespace cwb
