#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cwb/complex.hpp"

namespace cwb {

/// Iterated cone K_r = cone(x_r : K_(r-1) -> K_(r-1)), K_0 = A[0].
/// Lives in degrees -n..0.
Complex koszul(const Ring& ring, const std::vector<Elem>& elements);

/// Hom(K, A[0]).
Complex koszul_dual(const Complex& k);

/// K(x_1^t, ..., x_n^t) for t >= 1 with restriction maps
/// K(x^(t+1)) -> K(x^t) (identity in degree 0, x in degree -1 for n = 1).
class KoszulTower {
 public:
  KoszulTower(Ideal ideal);

  const Ideal& ideal() const { return ideal_; }
  /// Stage t >= 1.
  Complex stage(std::size_t t) const;
  /// Restriction K(x^(t+1)) -> K(x^t).
  ChainMap restriction(std::size_t t) const;

 private:
  Ideal ideal_;
};

/// Lambda_t X = X (x) K(x^t).
Complex lambda_stage(const Complex& x, const Ideal& I, std::size_t t);
/// Gamma_t X = Hom(K(x^t), X).
Complex gamma_stage(const Complex& x, const Ideal& I, std::size_t t);
/// Lambda_(t+1) X -> Lambda_t X.
ChainMap lambda_transition(const Complex& x, const Ideal& I, std::size_t t);
/// Gamma_t X -> Gamma_(t+1) X.
ChainMap gamma_transition(const Complex& x, const Ideal& I, std::size_t t);

enum class TowerMode { Gamma, Lambda };

/// Horizon-bounded verdict on a row of homology groups.
struct RowVerdict {
  /// Least t0 with every transition between stages >= t0 an isomorphism
  /// (needs at least one witnessed transition).
  std::optional<std::size_t> stabilized_at;
  /// Least k such that every composite of k consecutive transitions is zero.
  std::optional<std::size_t> essentially_zero_after;
  std::string str(std::size_t horizon) const;
};

struct TowerRow {
  int degree = 0;
  std::vector<PresentedModule> modules;      // t = 1..T
  std::vector<ModuleMorphism> transitions;   // between t and t+1, in the tower direction
  RowVerdict verdict;
  bool all_zero() const;
};

struct TowerReport {
  TowerMode mode = TowerMode::Lambda;
  std::size_t horizon = 0;
  std::vector<TowerRow> rows;  // ascending degree; every degree that appears
  /// Lambda mode with X free in degree 0: whether the degree-0 row is
  /// isomorphic as a tower to the adic tower A^r / I^t A^r.
  std::optional<bool> adic_match;
  const TowerRow* row(int degree) const;
};

TowerReport tower_report(const Complex& x, const Ideal& I, std::size_t T, TowerMode mode);

/// Verdict for an explicit row of modules and maps; `forward` means the
/// maps go from stage t to t+1.
RowVerdict row_verdict(const std::vector<ModuleMorphism>& transitions, bool forward);

struct AdjunctionCheck {
  bool holds = false;
  PresentedModule gamma_side;   // H^0 Hom(Gamma_t X, Y)
  PresentedModule lambda_side;  // H^0 Hom(X, Lambda_t Y)
};
AdjunctionCheck adjunction_check(const Complex& x, const Complex& y, const Ideal& I, std::size_t t);

}  // namespace cwb
