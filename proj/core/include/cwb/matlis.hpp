#pragma once

#include <optional>
#include <vector>

#include "cwb/module.hpp"

namespace cwb {

/// A supported local artinian ring: Z/p^N, GF(p), k[x]/(x^N), or a finite
/// local algebra whose basis elements b_1.. span the maximal ideal.
struct LocalArtinianRing {
  Ring ring;
  Ideal maximal;
  /// Least N with m^N = 0.
  std::size_t nilpotency = 1;

  /// Throws UnsupportedRing for anything else.
  static LocalArtinianRing from(const Ring& ring);
};

/// Every ideal of the ring, each given by generators.
std::vector<Ideal> all_ideals(const LocalArtinianRing& a);

struct InjectiveEnvelope {
  PresentedModule module;
  /// E = A (Z/p^N, k[x]/(x^N)); otherwise E is the field dual of A.
  bool self_injective_model = false;
  bool socle_simple = false;
  /// Baer test: Hom(A, E) -> Hom(J, E) is onto for every ideal J.
  bool injective_verified = false;
  std::size_t ideals_tested = 0;
};

struct BaerResult {
  bool injective = false;
  std::size_t ideals_tested = 0;
  std::optional<Ideal> failing_ideal;
};
/// Baer criterion: Hom(A, M) -> Hom(J, M) is onto for every ideal J.
BaerResult baer_test(const PresentedModule& m);

/// The envelope together with its verification.
InjectiveEnvelope injective_envelope_simple(const Ring& ring);

/// E(k) without running the Baer test.
PresentedModule injective_envelope_module(const LocalArtinianRing& a);

/// Matlis duality D = Hom(-, E) over a fixed ring, caching E.
class MatlisDuality {
 public:
  explicit MatlisDuality(const Ring& ring);

  const LocalArtinianRing& local() const { return local_; }
  const PresentedModule& envelope() const { return e_; }

  HomModule dual(const PresentedModule& m) const;
  PresentedModule dual_module(const PresentedModule& m) const { return dual(m).module; }
  /// D f : D N -> D M for f : M -> N.
  ModuleMorphism dual_map(const HomModule& dn, const HomModule& dm, const ModuleMorphism& f) const;
  /// Evaluation M -> D^2 M.
  ModuleMorphism evaluation(const PresentedModule& m) const;

 private:
  LocalArtinianRing local_;
  PresentedModule e_;
};

PresentedModule matlis_dual(const PresentedModule& m);

struct DoubleDualCheck {
  bool iso = false;
  ModuleMorphism evaluation;  // M -> D^2 M
};
/// Throws InvalidArgument when M has infinite length.
DoubleDualCheck double_dual_check(const PresentedModule& m);

/// Hom(M, D N) and Hom(N, D M) are isomorphic.
bool swap_check(const PresentedModule& m, const PresentedModule& n);

/// E_n = {e in E : m^n e = 0} with its inclusion.
SubmoduleResult E_filtration(const Ring& ring, std::size_t n);

struct EndComparison {
  PresentedModule hom;       // Hom(E_n, E)
  PresentedModule quotient;  // A / m^n
  bool iso = false;
};
EndComparison end_E_compare(const Ring& ring, std::size_t n);

}  // namespace cwb
