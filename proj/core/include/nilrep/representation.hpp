#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "nilrep/lie_algebra.hpp"

namespace nilrep {

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

class NotFlag : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RepresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RepCheckReport {
  bool ok = true;
  // Basis index pairs (a, b) with rho([v_a, v_b]) != [rho v_a, rho v_b].
  std::vector<std::pair<size_t, size_t>> violations;
};

// Checks bracket preservation for a tuple of matrices. Throws DimensionMismatch
// or FieldMismatch on malformed input.
RepCheckReport check_representation(const LieAlgebra& g, const std::vector<Matrix>& matrices);

// Increasing chain 0 = steps[0] ⊆ steps[1] ⊆ ...; stops when stable.
struct Filtration {
  std::vector<Subspace> steps;
  bool exhaustive() const;
  std::vector<size_t> jumps() const;
};

// A representation rho: g -> End(k^n), stored as one matrix per basis vector.
// The algebra and matrices share one field.
class Representation {
 public:
  // Validates bracket preservation; throws RepresentationError listing failures.
  Representation(AlgebraPtr g, std::vector<Matrix> matrices);

  const LieAlgebra& algebra() const { return *g_; }
  const AlgebraPtr& algebra_ptr() const { return g_; }
  const Field& field() const { return g_->field(); }
  size_t n() const { return n_; }
  const std::vector<Matrix>& matrices() const { return mats_; }
  const Matrix& matrix(size_t a) const { return mats_.at(a); }
  // rho(x) for x given in coordinates.
  Matrix image(const Vector& x) const;

  // Associated filtration; computed once and cached.
  const Filtration& filtration() const;
  bool is_nilpotent() const { return filtration().exhaustive(); }
  bool is_flag() const;
  // Strictly upper triangular and flag: the associated filtration is the standard flag.
  bool is_standard() const;

  Representation base_change(const Field& f) const;

 private:
  struct Cache {
    std::once_flag once;
    Filtration filtration;
  };
  AlgebraPtr g_;
  size_t n_ = 0;
  std::vector<Matrix> mats_;
  std::shared_ptr<Cache> cache_;
};

// Builds rho on every basis vector from images of the given generators, by
// iterated commutators. `generators` defaults to g.default_generators().
// Throws RepresentationError when the images violate a relation.
Representation rep_from_generators(AlgebraPtr g, const std::vector<Matrix>& images,
                                   std::vector<size_t> generators = {});

Subspace zero_eigenspace(const Representation& r);
Filtration canonical_filtration(const Representation& r);
bool is_nilpotent_rep(const Representation& r);
bool is_flag(const Representation& r);

struct Standardized {
  Representation rep;
  Matrix change_of_basis;  // columns are the new basis; rep = P^-1 rho P
};
Standardized standardize(const Representation& r);

// lam(i, j) for 1 <= i < j <= n, each a functional on g in dual coordinates.
class FullEntries {
 public:
  FullEntries(const Field& f, size_t n, size_t m);
  static FullEntries of(const Representation& r);

  size_t n() const { return n_; }
  size_t m() const { return m_; }
  const Field& field() const { return field_; }
  const Vector& lam(size_t i, size_t j) const;
  Vector& lam(size_t i, size_t j);
  // Matrices rho(v_a) rebuilt from the entries.
  std::vector<Matrix> matrices() const;
  bool operator==(const FullEntries& o) const;
  bool operator!=(const FullEntries& o) const { return !(*this == o); }

 private:
  size_t index(size_t i, size_t j) const;
  Field field_;
  size_t n_, m_;
  std::vector<Vector> lam_;
};

FullEntries full_entries(const Representation& r);
// Representation on Fil_m / Fil_l, i.e. the block of rows and columns l+1..m.
Representation subquotient(const Representation& r, size_t l, size_t m);

struct CanonicalEntry {
  size_t i = 0, j = 0;
  // Values on the lift basis of h_{j-i}.
  Vector values;
  bool is_zero() const { return nilrep::is_zero(values); }
};
CanonicalEntry canonical_entry(const Representation& r, size_t i, size_t j);

// Normalizes a nonzero functional so its first nonzero coordinate is 1.
Vector normalize_point(const Vector& v);

struct Constellation {
  std::vector<Vector> points;
  bool operator==(const Constellation& o) const { return points == o.points; }
  bool operator!=(const Constellation& o) const { return !(*this == o); }
  bool distinct() const;
};
Constellation constellation(const Representation& r);
bool is_wide(const Representation& r);

}  // namespace nilrep
