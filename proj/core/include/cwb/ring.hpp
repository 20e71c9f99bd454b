#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "cwb/error.hpp"

namespace cwb {

enum class RingKind {
  Integers,
  Modular,
  PrimeField,
  Rationals,
  Poly,
  PolyQuot,
  FiniteAlgebra,
};

std::string to_string(RingKind kind);

/// Dense univariate polynomial, coefficients from low to high degree.
/// The zero polynomial has no coefficients; the top coefficient is never 0.
struct PolyElem {
  std::vector<mpq_class> coeffs;
  friend bool operator==(const PolyElem&, const PolyElem&) = default;
};

/// Coordinates of a finite-algebra element in the algebra basis (mod p).
struct AlgElem {
  std::vector<mpz_class> coords;
  friend bool operator==(const AlgElem&, const AlgElem&) = default;
};

/// A ring element. Which alternative is live depends on the ring:
///   Integers, Modular, PrimeField -> mpz_class (residues in [0, m))
///   Rationals                     -> mpq_class (canonical)
///   Poly, PolyQuot                -> PolyElem (reduced mod the modulus)
///   FiniteAlgebra                 -> AlgElem
using Elem = std::variant<mpz_class, mpq_class, PolyElem, AlgElem>;

/// Structure constants of a commutative finite-dimensional algebra over F_p.
/// Basis element 0 is the identity; elements 1..d-1 span the maximal ideal.
struct AlgebraTable {
  std::vector<std::string> names;
  /// product[i][j][k]: coefficient of b_k in b_i * b_j.
  std::vector<std::vector<std::vector<long>>> product;
  friend bool operator==(const AlgebraTable&, const AlgebraTable&) = default;
};

/// Declarative ring description; `make_ring` validates and canonicalizes it.
struct RingSpec {
  RingKind kind = RingKind::Integers;
  mpz_class modulus = 0;  // Modular m, PrimeField p, FiniteAlgebra p
  /// Poly / PolyQuot: coefficient field is F_p when field_p > 0, else Q.
  mpz_class field_p = 0;
  std::string var = "x";
  std::string poly_modulus;  // PolyQuot modulus, parsed over the polynomial ring
  AlgebraTable algebra;      // FiniteAlgebra
};

struct RingDescriptor;

/// Immutable handle to a commutative ring with exact arithmetic.
/// Copies share the descriptor; equality is structural.
class Ring {
 public:
  static Ring integers();
  static Ring modular(const mpz_class& m);
  static Ring prime_field(const mpz_class& p);
  static Ring rationals();
  /// Univariate polynomials over `field` (PrimeField or Rationals).
  static Ring poly(const Ring& field, std::string var = "x");
  /// poly / (modulus); the modulus must be monic of degree >= 1.
  static Ring poly_quot(const Ring& poly, const Elem& modulus);
  static Ring finite_algebra(const mpz_class& p, AlgebraTable table);

  RingKind kind() const;
  bool is_euclidean() const;
  bool is_field() const;
  bool is_finite() const;
  /// Number of elements; 0 when infinite.
  mpz_class cardinality() const;
  /// Characteristic (0 for characteristic zero).
  mpz_class characteristic() const;

  Elem zero() const;
  Elem one() const;
  Elem from_int(long v) const;
  Elem from_mpz(const mpz_class& v) const;
  /// The polynomial variable (Poly / PolyQuot only).
  Elem variable() const;
  /// Basis element b_j of a finite algebra.
  Elem basis_element(std::size_t j) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, unsigned long e) const;
  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const;
  bool is_unit(const Elem& a) const;
  std::optional<Elem> inverse(const Elem& a) const;
  /// Some q with q*b = a, if one exists (exact division).
  std::optional<Elem> divide(const Elem& a, const Elem& b) const;
  /// Re-normalize a representative into canonical form.
  Elem canonical(const Elem& a) const;
  bool contains(const Elem& a) const;

  // Euclidean structure (Integers, PrimeField, Rationals, Poly).
  std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const;
  /// Three-way comparison of Euclidean sizes (|a|, degree, or 0/1 for fields).
  int compare_size(const Elem& a, const Elem& b) const;
  /// a = unit * associate, associate canonical (positive / monic / 1).
  std::pair<Elem, Elem> normalize_associate(const Elem& a) const;
  /// (g, s, t) with s*a + t*b = g, g canonical associate of gcd(a, b).
  std::tuple<Elem, Elem, Elem> gcdext(const Elem& a, const Elem& b) const;

  // Covering structure: every supported ring is a quotient of, or finite
  // over, a Euclidean ring; module computations run there.
  /// Euclidean ring the computations are lifted to.
  Ring cover() const;
  /// Rank of the ring as a module over its cover (algebra dimension, else 1).
  std::size_t cover_rank() const;
  /// Modulus c with ring = cover / (c), for Modular and PolyQuot.
  std::optional<Elem> cover_modulus() const;
  /// Coordinates in the cover (length cover_rank()).
  std::vector<Elem> cover_coords(const Elem& a) const;
  Elem from_cover_coords(const std::vector<Elem>& coords) const;
  /// Reduce a cover element (cover_rank() == 1 rings only).
  Elem reduce(const Elem& cover_elem) const;

  // Finite-algebra data.
  std::size_t algebra_dim() const;
  const AlgebraTable& algebra() const;

  /// Polynomial coefficient field (Poly / PolyQuot).
  Ring coefficient_field() const;
  const std::string& variable_name() const;
  /// Polynomial modulus of a PolyQuot as an element of its cover.
  Elem poly_modulus() const;
  /// Modulus m of Modular / p of PrimeField or FiniteAlgebra.
  const mpz_class& modulus() const;

  std::string format(const Elem& a) const;
  /// Parses an expression such as "3", "-1/2", "x^2+1", "2*x+y".
  Elem parse(const std::string& text) const;
  /// Short human-readable name, e.g. "Z/8" or "GF(2)[x]/(x^3)".
  std::string name() const;

  /// All elements of a finite ring in a fixed order.
  std::vector<Elem> elements() const;

  friend bool operator==(const Ring& a, const Ring& b);
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  explicit Ring(std::shared_ptr<const RingDescriptor> d) : d_(std::move(d)) {}
  const RingDescriptor& desc() const { return *d_; }
  std::shared_ptr<const RingDescriptor> d_;
};

/// ring_make: validates a spec and returns the canonical descriptor.
Ring make_ring(const RingSpec& spec);

/// Number of prime (resp. irreducible) factors of a nonzero non-unit element
/// of a Euclidean ring, counted with multiplicity. Throws UnsupportedRing
/// when the factorization is out of reach (high-degree polynomials over Q).
std::size_t factor_count(const Ring& ring, const Elem& a);

bool is_prime(const mpz_class& n);

}  // namespace cwb
