#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "nilrep/field.hpp"

namespace nilrep {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, size_t n);
Vector unit_vector(const Field& f, size_t n, size_t k);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
Vector promote(const Vector& v, const Field& f);
std::string to_string(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, size_t rows, size_t cols);
  static Matrix identity(const Field& f, size_t n);
  static Matrix from_rows(const Field& f, size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(const Field& f, size_t rows, const std::vector<Vector>& cols);
  // Convenience for tests and fixtures: rational entries.
  static Matrix from_ints(const std::vector<std::vector<long>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Vector row(size_t i) const;
  Vector col(size_t j) const;
  Matrix transpose() const;
  Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
  Matrix promoted(const Field& f) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_strictly_upper() const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Field field_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
// Stacks matrices with equal column counts on top of one another.
Matrix vstack(const Field& f, size_t cols, const std::vector<Matrix>& parts);
// Throws DivisionByZero when singular.
Matrix inverse(const Matrix& m);

struct RrefResult {
  Matrix reduced;
  size_t rank = 0;
  std::vector<size_t> pivots;
};

// Pivots are the leftmost nonzero column, taken from the topmost available row.
RrefResult rref(const Matrix& m);
size_t rank(const Matrix& m);

// Subspace of k^n, stored as the nonzero rows of a reduced echelon basis.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(const Field& f, size_t n);
  static Subspace full(const Field& f, size_t n);
  static Subspace span(const Field& f, size_t n, const std::vector<Vector>& vectors);

  const Field& field() const { return basis_.field(); }
  size_t ambient_dim() const { return basis_.cols(); }
  size_t dim() const { return basis_.rows(); }
  const Matrix& basis_matrix() const { return basis_; }
  std::vector<Vector> basis() const;
  const std::vector<size_t>& pivots() const { return pivots_; }

  // Canonical representative of v modulo this subspace (pivot entries cleared).
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v in basis(); nullopt when v is not in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  Matrix basis_;
  std::vector<size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
Subspace image(const Matrix& m);
// Pivot solution of a x = b (free variables set to zero).
std::optional<Vector> solve(const Matrix& a, const Vector& b);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
// {x in k^n : x . y = 0 for all y in s}.
Subspace annihilator(const Subspace& s);
// {x : m x in target}.
Subspace preimage(const Matrix& m, const Subspace& target);

}  // namespace nilrep
