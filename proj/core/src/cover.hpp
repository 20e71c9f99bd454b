#pragma once

// Internal: module computations over a ring A are carried out over its
// Euclidean cover C (Z, k[x], F_p). A vector of A^n becomes a vector of
// C^(n*d) with d = cover_rank(A); entry i contributes coordinates i*d..i*d+d-1.

#include <vector>

#include "cwb/matrix.hpp"
#include "cwb/module.hpp"

namespace cwb::detail {

/// Stacked cover coordinates of the columns of v.
Matrix lower_vectors(const Matrix& v);
/// Cover vectors spanning the A-span of the columns of t, together with the
/// modulus relations of A.
Matrix lower_span(const Matrix& t);
/// Cover matrix of the A-linear map given by f.
Matrix lower_map(const Matrix& f);
/// Inverse of lower_vectors.
Matrix raise_vectors(const Ring& ring, const Matrix& c);
/// Multiplication by the maximal-ideal basis b_1.. on C^(n*d) (finite algebras).
std::vector<Matrix> ambient_actions(const Ring& ring, std::size_t n);

/// (span S + span T) / span T over the cover, in simplified coordinates.
struct CoverSubquotient {
  Matrix S, T;
  Matrix rel;   // q x r, diagonal with non-unit entries
  Matrix gens;  // ambient x q
  Matrix to;    // q x k, S-coefficients -> simplified coordinates
  std::vector<Matrix> actions;
  std::size_t size() const { return rel.rows(); }
  Matrix coords(const Matrix& v) const;
};

CoverSubquotient cover_subquotient(const Matrix& S, const Matrix& T,
                                   const std::vector<Matrix>& ambient_actions);

/// An A-module presentation of a cover subquotient, with mutually inverse
/// cover maps between its lowered coordinates and the subquotient coordinates.
struct Raised {
  PresentedModule module;
  Matrix to_q;    // q x (g*d)
  Matrix from_q;  // (g*d) x q
};

Raised raise(const Ring& ring, const CoverSubquotient& q);

}  // namespace cwb::detail
