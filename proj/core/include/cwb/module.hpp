#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cwb/matrix.hpp"

namespace cwb {

/// Ideal given by generators. An empty generator list is rejected unless
/// the ideal is built with Ideal::zero.
struct Ideal {
  Ring ring;
  std::vector<Elem> generators;

  Ideal(Ring r, std::vector<Elem> gens);
  static Ideal zero(const Ring& r);
  static Ideal parse(const Ring& r, const std::vector<std::string>& gens);
  std::string str() const;

 private:
  Ideal(Ring r, std::vector<Elem> gens, bool allow_empty);
};

/// coker(A^r --relations--> A^g).
class PresentedModule {
 public:
  PresentedModule() : PresentedModule(Ring::integers(), 0, Matrix(Ring::integers(), 0, 0)) {}
  PresentedModule(Ring ring, std::size_t generators, Matrix relations);

  static PresentedModule free(const Ring& ring, std::size_t rank);
  static PresentedModule zero(const Ring& ring) { return free(ring, 0); }
  /// A / (a).
  static PresentedModule cyclic(const Ring& ring, const Elem& a);
  /// A/(d_1) + ... + A/(d_k).
  static PresentedModule diagonal(const Ring& ring, const std::vector<Elem>& d);

  const Ring& ring() const { return ring_; }
  std::size_t generators() const { return gens_; }
  const Matrix& relations() const { return rel_; }

  /// True when every column of v (g x k) lies in the span of the relations.
  bool represents_zero(const Matrix& v) const;

 private:
  Ring ring_;
  std::size_t gens_;
  Matrix rel_;
};

/// Morphism given on generators: column i is the image of generator i.
class ModuleMorphism {
 public:
  /// Checks that relations map into the target relations.
  ModuleMorphism(PresentedModule source, PresentedModule target, Matrix matrix);

  static ModuleMorphism identity(const PresentedModule& m);
  static ModuleMorphism zero(const PresentedModule& source, const PresentedModule& target);

  const PresentedModule& source() const { return src_; }
  const PresentedModule& target() const { return tgt_; }
  const Matrix& matrix() const { return mat_; }

 private:
  struct Unchecked {};
  ModuleMorphism(PresentedModule source, PresentedModule target, Matrix matrix, Unchecked);
  friend ModuleMorphism unchecked_morphism(PresentedModule, PresentedModule, Matrix);

  PresentedModule src_;
  PresentedModule tgt_;
  Matrix mat_;
};

/// Builds a morphism the caller already knows to be well defined.
ModuleMorphism unchecked_morphism(PresentedModule source, PresentedModule target, Matrix matrix);

/// g o f
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);
ModuleMorphism add(const ModuleMorphism& f, const ModuleMorphism& g);
ModuleMorphism scale(const Elem& a, const ModuleMorphism& f);
/// Equal as maps (difference lands in the target relations).
bool same_map(const ModuleMorphism& f, const ModuleMorphism& g);
bool is_zero_map(const ModuleMorphism& f);

struct SubquotientImpl;

/// (span S + span T) / span T inside A^n, with a presentation and
/// coordinate conversion.
struct SubquotientModule {
  PresentedModule module;
  /// n x g: ambient representatives of the presentation generators.
  Matrix generators;
  std::shared_ptr<const SubquotientImpl> impl;

  /// Coordinates (g x k) of ambient vectors v (n x k) lying in span S + span T.
  Matrix coordinates(const Matrix& v) const;
};

SubquotientModule subquotient(const Ring& ring, const Matrix& S, const Matrix& T);

/// Generators (columns) of {v in A^n : F v in span T}.
Matrix matrix_kernel(const Matrix& F, const Matrix& T);

struct Simplified {
  PresentedModule module;
  ModuleMorphism to;    // M -> simplified (isomorphism)
  ModuleMorphism from;  // simplified -> M (inverse)
};
/// Minimal presentation (diagonal over rings with cover rank 1).
Simplified simplify(const PresentedModule& m);

struct SubmoduleResult {
  PresentedModule module;
  ModuleMorphism inclusion;
};

struct QuotientResult {
  PresentedModule module;
  ModuleMorphism projection;
};

struct ImageResult {
  PresentedModule module;
  ModuleMorphism inclusion;
  ModuleMorphism corestriction;  // source -> image
};

SubmoduleResult kernel(const ModuleMorphism& f);
QuotientResult cokernel(const ModuleMorphism& f);
ImageResult image(const ModuleMorphism& f);

/// Submodule generated by the columns of v (g x k).
SubmoduleResult submodule(const PresentedModule& m, const Matrix& v);
/// M / span(v).
QuotientResult quotient(const PresentedModule& m, const Matrix& v);

struct HomModuleImpl;

/// Hom(M, N) as a module, with generators realized as morphisms.
struct HomModule {
  PresentedModule module;
  std::vector<ModuleMorphism> basis;
  std::shared_ptr<const HomModuleImpl> impl;

  ModuleMorphism to_morphism(const Matrix& coords) const;
  Matrix to_coords(const ModuleMorphism& f) const;
};

HomModule hom_module(const PresentedModule& m, const PresentedModule& n);

/// Map Hom(B, X) -> Hom(A, X) given by precomposition with f : A -> B.
ModuleMorphism hom_precompose(const HomModule& hom_b, const HomModule& hom_a, const ModuleMorphism& f);
/// Map Hom(X, A) -> Hom(X, B) given by postcomposition with f : A -> B.
ModuleMorphism hom_postcompose(const HomModule& hom_a, const HomModule& hom_b, const ModuleMorphism& f);

struct DirectSum {
  PresentedModule module;
  std::vector<ModuleMorphism> injections;
  std::vector<ModuleMorphism> projections;
};
DirectSum direct_sum(const Ring& ring, const std::vector<PresentedModule>& parts);

/// Composition length; nullopt when infinite.
std::optional<std::size_t> length(const PresentedModule& m);

bool is_zero_module(const PresentedModule& m);
bool is_injective(const ModuleMorphism& f);
bool is_surjective(const ModuleMorphism& f);
bool is_bijective(const ModuleMorphism& f);

/// Canonical invariants: elementary divisors over the cover (cover rank 1),
/// or the dimension, Loewy and socle profiles (finite algebras).
struct ModuleInvariants {
  std::vector<std::string> torsion;  // formatted canonical divisors
  std::size_t free_rank = 0;
  std::vector<std::size_t> radical_dims;  // dim m^k M, k = 0, 1, ...
  std::vector<std::size_t> socle_dims;    // dim soc^k M, k = 1, 2, ...
  friend bool operator==(const ModuleInvariants&, const ModuleInvariants&) = default;
};
ModuleInvariants invariants(const PresentedModule& m);
/// Isomorphism by invariants: complete for cover rank 1, profile-based for
/// finite algebras.
bool is_isomorphic(const PresentedModule& a, const PresentedModule& b);
/// Human-readable canonical form, e.g. "Z/2 + Z/8", "Z^2", "0".
std::string describe(const PresentedModule& m);

/// Submodule annihilated by I.
SubmoduleResult socle(const PresentedModule& m, const Ideal& I);
/// soc^0 = 0, soc^1, ..., soc^n as submodules of M.
std::vector<SubmoduleResult> socle_series(const PresentedModule& m, const Ideal& I, std::size_t n);
/// {m : I^n m = 0}.
SubmoduleResult annihilator_submodule(const PresentedModule& m, const Ideal& I, std::size_t n);
/// M I^n as the span of monomial multiples of generators (g x k).
Matrix ideal_power_multiples(const PresentedModule& m, const Ideal& I, std::size_t n);

struct AdicStage {
  PresentedModule module;              // M / M I^n
  ModuleMorphism projection;           // M -> M / M I^n
  std::optional<ModuleMorphism> tower; // M / M I^(n+1) -> M / M I^n
};
AdicStage adic_stage(const PresentedModule& m, const Ideal& I, std::size_t n);

struct ProjectiveFactorization {
  bool factors = false;
  /// f = from_free o to_free through a finite free module, when it factors.
  std::optional<ModuleMorphism> to_free;
  std::optional<ModuleMorphism> from_free;
};
ProjectiveFactorization factors_through_projective(const ModuleMorphism& f);

/// Monomials of degree n in the ideal generators.
std::vector<Elem> ideal_power_generators(const Ideal& I, std::size_t n);

}  // namespace cwb
