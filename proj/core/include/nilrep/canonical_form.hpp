#pragma once

#include <vector>

#include "nilrep/representation.hpp"

namespace nilrep {

class DegenerateConstellation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Complements E_i (i = 2..n-1) with g^vee = <p_1> + <p_i> + E_i, each spanned by
// coordinate functionals at the non-pivot columns of the echelon form of [p_1; p_i].
struct Slice {
  size_t n = 0;
  size_t m = 0;
  Constellation points;
  std::vector<Subspace> complements;  // complements[i - 2] is E_i
  const Subspace& E(size_t i) const { return complements.at(i - 2); }
  bool operator==(const Slice& o) const { return n == o.n && points == o.points; }
};

Slice choose_slice(const Constellation& c, size_t dim_g);
// Checks the direct sum condition for the actual consecutive entries of `e`.
bool slice_valid_for(const Slice& s, const FullEntries& e);

// Entries of u rho u^-1, by matrix conjugation.
FullEntries conjugation_action(const Matrix& u, const FullEntries& e);
// Same result from sum_{k,l} u_ik lam_kl w_lj with w = u^-1 computed by the
// recursion w_ij = -u_ij - sum_{i<k<j} u_ik w_kj.
FullEntries conjugation_closed_formula(const Matrix& u, const FullEntries& e);

struct Reduction {
  Matrix u;  // unipotent, u_{1,n} = 0
  FullEntries entries;
};
Reduction u_reduce(const Representation& r, const Slice& s);
Reduction u_reduce(const FullEntries& e, const Slice& s);

struct TorusNormalization {
  Vector t;  // t_1 = 1
  FullEntries entries;
};
TorusNormalization torus_normalize(const FullEntries& e);

struct CanonicalForm {
  Slice slice;
  Matrix change_of_basis;  // standardization P
  Matrix u;
  Vector t;
  FullEntries entries;
  bool operator==(const CanonicalForm& o) const {
    return slice == o.slice && entries == o.entries;
  }
};
CanonicalForm canonical_form(const Representation& r);

struct IsoReport {
  bool isomorphic = false;
  bool constellations_differ = false;
  // Positions (i, j) where the normalized entries differ.
  std::vector<std::pair<size_t, size_t>> differing;
};
IsoReport iso_test_wide(const Representation& r, const Representation& rp);

}  // namespace nilrep
