#pragma once

// Dense exact linear algebra over a FieldDescriptor. Pivoting takes the first
// nonzero entry in a column; there is no notion of magnitude here.

#include <cstddef>
#include <optional>
#include <vector>

#include "discarr/exactfield.hpp"

namespace discarr {

using Vector = std::vector<FieldElement>;

class Matrix {
 public:
  Matrix(FieldDescriptor fd, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldDescriptor& fd, std::size_t n);
  /// Rows must be non-empty, equally long and share `fd`.
  static Matrix from_rows(const FieldDescriptor& fd, const std::vector<Vector>& rows);
  static Matrix from_columns(const FieldDescriptor& fd, const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldDescriptor& field() const { return fd_; }

  FieldElement& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  bool operator==(const Matrix& o) const;

 private:
  FieldDescriptor fd_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> a_;
};

FieldElement det(const Matrix& m);
std::size_t rank(const Matrix& m);
std::size_t rank(const FieldDescriptor& fd, const std::vector<Vector>& rows);

/// Basis of {x : m x = 0}, one vector per free column of the reduced form.
std::vector<Vector> kernel(const Matrix& m);

struct SolveResult {
  std::optional<Vector> particular;
  std::vector<Vector> kernel;
};
SolveResult solve(const Matrix& m, const Vector& b);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

FieldElement dot(const Vector& u, const Vector& v);
Vector cross3(const Vector& u, const Vector& v);
bool is_zero_vector(const Vector& v);
Vector zero_vector(const FieldDescriptor& fd, std::size_t n);
Vector scaled(const Vector& v, const FieldElement& c);
Vector add(const Vector& u, const Vector& v);
Vector sub(const Vector& u, const Vector& v);

/// Growing row space kept in reduced echelon form, for repeated membership
/// tests against one span.
class RowSpace {
 public:
  RowSpace(FieldDescriptor fd, std::size_t dim);

  std::size_t rank() const { return basis_.size(); }
  bool contains(const Vector& v) const;
  /// Adds v to the span; returns false when v was already in it.
  bool insert(const Vector& v);

 private:
  Vector reduce(Vector v) const;

  FieldDescriptor fd_;
  std::size_t dim_;
  std::vector<Vector> basis_;         // each row has a leading 1 at pivots_[i]
  std::vector<std::size_t> pivots_;
};

}  // namespace discarr
