#pragma once

#include <string>
#include <vector>

#include "nilrep/matrix.hpp"

namespace nilrep {

struct AlgebraReport {
  bool antisymmetric = true;
  bool jacobi = true;
  bool nilpotent = true;
  size_t depth = 0;
  std::vector<std::string> violations;
  bool ok() const { return antisymmetric && jacobi && nilpotent; }
};

class InvalidAlgebra : public std::invalid_argument {
 public:
  InvalidAlgebra(const std::string& what, AlgebraReport report)
      : std::invalid_argument(what), report_(std::move(report)) {}
  const AlgebraReport& report() const { return report_; }

 private:
  AlgebraReport report_;
};

// Element of h_s = g^(s)/g^(s+1): a lift together with its degree.
struct GradedElement {
  size_t s = 0;
  Vector lift;
};

// Basis of h_s: lifts chosen among the echelon basis of g^(s), plus g^(s+1).
struct GradedPiece {
  size_t s = 0;
  std::vector<Vector> lifts;
  Subspace lower;  // g^(s+1)
  size_t dim() const { return lifts.size(); }
};

// Nilpotent Lie algebra given by structure constants [v_i, v_j] = sum_k c_ijk v_k.
class LieAlgebra {
 public:
  // structure[i][j] is the coordinate vector of [v_i, v_j]. Validates; throws InvalidAlgebra.
  static LieAlgebra create(const Field& f, std::vector<std::string> labels,
                           std::vector<std::vector<Vector>> structure);
  // Non-throwing validation of raw structure constants.
  static AlgebraReport validate(const Field& f, size_t dim,
                                const std::vector<std::vector<Vector>>& structure);

  const Field& field() const { return field_; }
  size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<Vector>>& structure() const { return c_; }
  // Index of `label`, or throws.
  size_t index_of(const std::string& label) const;

  const Vector& bracket_basis(size_t i, size_t j) const { return c_[i][j]; }
  Vector bracket(const Vector& u, const Vector& v) const;
  // Matrix of ad(v_i) acting on coordinates.
  Matrix ad(size_t i) const;

  // g^(1) = g, ..., g^(depth+1) = 0.
  const std::vector<Subspace>& central_series() const { return series_; }
  const Subspace& series_term(size_t s) const;  // 1-based, s > depth gives zero
  size_t depth() const { return series_.size() - 1; }
  Subspace derived() const { return series_term(2); }
  size_t abelianization_dim() const { return dim() - series_term(2).dim(); }
  // Functionals vanishing on [g,g]: the dual of g^ab inside g^vee.
  Subspace abelian_dual() const;

  GradedPiece graded_piece(size_t s) const;
  // Coordinates of the class of `x` (an element of g^(s)) in the lift basis of h_s.
  Vector graded_coordinates(size_t s, const Vector& x) const;
  GradedElement graded_bracket(const GradedElement& u, const GradedElement& v) const;
  bool graded_equal(const GradedElement& a, const GradedElement& b) const;

  LieAlgebra base_change(const Field& f) const;
  // Same labels and structure constants after promoting the rational side.
  bool same_structure(const LieAlgebra& other) const;

  // Indices of standard basis vectors that lift a basis of g^ab.
  std::vector<size_t> default_generators() const;

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vector>> c_;
  std::vector<Subspace> series_;
};

std::vector<Subspace> descending_central_series(const Field& f, size_t dim,
                                                const std::vector<std::vector<Vector>>& c,
                                                size_t max_steps);

// Builders used by fixtures and tests.
LieAlgebra abelian_algebra(size_t m, const Field& f = Field::rationals());
// Strictly upper triangular n x n matrices; basis e_ij (i < j) in lexicographic order.
LieAlgebra strictly_upper_algebra(size_t n, const Field& f = Field::rationals());
// brackets: (i, j, {(k, c)}) meaning [v_i, v_j] = sum c v_k; antisymmetry filled in.
struct BracketSpec {
  size_t i, j;
  std::vector<std::pair<size_t, Scalar>> terms;
};
LieAlgebra algebra_from_brackets(const Field& f, std::vector<std::string> labels,
                                 const std::vector<BracketSpec>& brackets);

struct FreeNilpotentOptions {
  size_t word_cap = 10000;
};
// Witt number: dimension of the degree-s part of the free Lie algebra on m letters.
long long witt_number(long long m, long long s);
// Free nilpotent algebra of rank m and class c, built inside the truncated free
// associative algebra. Basis: greedy left-normed commutators, degree by degree.
LieAlgebra free_nilpotent(size_t m, size_t c, const FreeNilpotentOptions& opts = {});

}  // namespace nilrep
