#pragma once

#include <vector>

#include "nilrep/representation.hpp"

namespace nilrep {

// Basis of n(r): strictly upper triangular phi with [phi, rho(v_a)] = 0 for all a.
struct InfAut {
  std::vector<Matrix> basis;
  size_t dim() const { return basis.size(); }
};

// Standardizes r first when it is flag but not in standard coordinates.
InfAut infinitesimal_automorphisms(const Representation& r);
// dim n(r) + 1.
size_t aut_dimension(const Representation& r);

bool is_nilpotent_matrix(const Matrix& m);
// Throws std::invalid_argument unless the input is nilpotent (resp. unipotent).
Matrix exp_nilpotent(const Matrix& n);
Matrix log_unipotent(const Matrix& u);

// rho'(v) = b rho(v) b^-1. Throws DivisionByZero for singular b.
Representation conjugate_rep(const Matrix& b, const Representation& r);
bool is_automorphism(const Matrix& b, const Representation& r);

struct InvariantsReport {
  Subspace fixed;          // common fixed space of exp(rho(v)) over the sampled v
  Subspace zero_eigen;     // common kernel of rho
  bool equal() const { return fixed == zero_eigen; }
};
// Uses every basis vector plus the extra sample elements.
InvariantsReport invariants_equal_zero_eigenspace(const Representation& r,
                                                  const std::vector<Vector>& samples = {});

}  // namespace nilrep
