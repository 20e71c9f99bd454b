#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cwb/ring.hpp"

namespace cwb {

/// Dense row-major matrix over a Ring.
class Matrix {
 public:
  Matrix() : ring_(Ring::integers()) {}
  /// Zero matrix.
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix from_rows(const Ring& ring, const std::vector<std::vector<Elem>>& rows);
  /// Parse a table of expressions over `ring`; throws InvalidArgument with the
  /// offending row index when the table is ragged.
  static Matrix parse(const Ring& ring, const std::vector<std::vector<std::string>>& rows,
                      std::size_t expected_cols = static_cast<std::size_t>(-1));
  /// One-row or one-column convenience constructors.
  static Matrix column_vector(const Ring& ring, const std::vector<Elem>& v);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Elem>& entries() const { return entries_; }

  const Elem& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Elem& v) { entries_[i * cols_ + j] = v; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
  Matrix col(std::size_t j) const { return block(0, rows_, j, 1); }
  Matrix row(std::size_t i) const { return block(i, 1, 0, cols_); }
  Matrix select_cols(const std::vector<std::size_t>& js) const;
  Matrix select_rows(const std::vector<std::size_t>& is) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  /// Same entries reinterpreted over another ring (entry types must agree).
  Matrix with_ring(const Ring& ring) const;

  std::vector<std::vector<std::string>> to_strings() const;
  std::string str() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix scale(const Elem& s, const Matrix& m);

Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);
Matrix hcat(const Ring& ring, std::size_t rows, const std::vector<Matrix>& parts);
Matrix vcat(const Ring& ring, std::size_t cols, const std::vector<Matrix>& parts);
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix block_diag(const Ring& ring, const std::vector<Matrix>& parts);
Matrix kron(const Matrix& a, const Matrix& b);
/// Column-stacking vectorization: entry (i,j) goes to index j*rows + i.
Matrix vec(const Matrix& m);
Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

struct SmithForm {
  Matrix U, D, V;
  Matrix U_inv, V_inv;
  std::size_t rank = 0;
  /// Nonzero diagonal entries d_1 | d_2 | ... (canonical associates).
  std::vector<Elem> diagonal;
};

/// U * M * V = D with U, V invertible and D in Smith form.
/// Deterministic: pivot of smallest Euclidean size, ties by row then column.
SmithForm smith_normal_form(const Matrix& m);

/// Some x with A x = b, or nullopt. Euclidean rings, Modular, PolyQuot and
/// finite algebras are supported. Free variables are set to zero.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

/// Basis of {x : A x = 0} as columns (Euclidean rings only).
Matrix nullspace(const Matrix& a);

/// Matrix of multiplication by `a` on a finite algebra, over its prime field.
/// Column j holds the coordinates of a * b_j.
Matrix regular_representation(const Ring& algebra, const Elem& a);

/// Entrywise lift to the cover ring (cover_rank() == 1 only).
Matrix lift_to_cover(const Matrix& m);
/// Entrywise reduction from the cover to `ring` (cover_rank() == 1 only).
Matrix reduce_from_cover(const Ring& ring, const Matrix& m);

}  // namespace cwb
