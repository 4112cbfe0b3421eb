#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilrep/representation.hpp"

namespace nilrep {

struct ExpectedInvariants {
  // A(g,2), A(g,3), A(g,4); nullopt where no nondegenerate representation exists.
  std::vector<std::optional<size_t>> a_values;
  size_t width = 0;
  size_t depth = 0;
  std::vector<size_t> series_dims;
  std::optional<size_t> h2;
};

struct Fixture {
  std::string name;
  std::string description;
  AlgebraPtr algebra;
  std::vector<std::pair<std::string, Representation>> reps;
  ExpectedInvariants expected;

  const Representation& rep(const std::string& rep_name) const;
  std::vector<Representation> hints() const;
};

const std::vector<std::string>& fixture_names();
// Throws std::invalid_argument for unknown names.
Fixture make_fixture(const std::string& name);

// Natural representation of the strictly upper triangular algebra.
Representation natural_rep(const AlgebraPtr& n_n, size_t n);
// n x n matrix with the given first superdiagonal.
Matrix superdiagonal(const Field& f, const std::vector<Scalar>& entries);
// Elementary matrix E_ij (1-based).
Matrix elementary(const Field& f, size_t n, size_t i, size_t j);

}  // namespace nilrep
