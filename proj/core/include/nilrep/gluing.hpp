#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nilrep/representation.hpp"

namespace nilrep {

// Chevalley-Eilenberg complex of g with trivial coefficients in degrees 1..3.
// 2-cochains use coordinates on pairs a < b, 3-cochains on triples a < b < c,
// both in lexicographic order.
struct CEComplex {
  size_t m = 0;
  std::vector<std::pair<size_t, size_t>> pairs;
  std::vector<std::array<size_t, 3>> triples;
  Matrix d1;  // (d1 l)(u,v) = -l([u,v])
  Matrix d2;  // (d2 w)(u,v,x) = -w([u,v],x) + w([u,x],v) - w([v,x],u)
  size_t pair_index(size_t a, size_t b) const;
};

CEComplex ce_differentials(const LieAlgebra& g);
size_t h2_dimension(const LieAlgebra& g);

// Matrix of l -> l o [.,.] from g^vee to 2-cochains.
Matrix bracket_form_matrix(const LieAlgebra& g);
// (a ^ b)(v_p, v_q) = a_p b_q - a_q b_p, in pair coordinates.
Vector wedge(const Vector& a, const Vector& b);

// Cocycle representatives completing im d1 to ker d2.
struct H2Basis {
  Subspace coboundaries;
  std::vector<Vector> classes;
  // Coordinates of the class of a cocycle; throws if it is not a cocycle.
  Vector coordinates(const Vector& cocycle) const;
};
H2Basis h2_basis(const LieAlgebra& g);

struct Cochain2 {
  size_t m = 0;
  Vector values;  // pair coordinates
  Scalar at(const CEComplex& ce, size_t a, size_t b) const;
};

// lambda^r_{i+1,j+1} = lambda^{r'}_{i,j} for all 1 <= i < j <= n-1.
bool overlap_compatible(const Representation& r, const Representation& rp);
// The 2-form c with lambda_{1,n+1}([u,v]) = c(u,v) required of a corner.
Cochain2 gluing_cochain(const Representation& r, const Representation& rp);

struct ObstructionClass {
  std::vector<Vector> h2_basis;
  Vector coords;
  bool vanishes = false;
};
ObstructionClass gluing_obstruction(const Representation& r, const Representation& rp);

struct GlueResult {
  std::optional<Representation> glued;
  ObstructionClass obstruction;
  // Functionals vanishing on [g,g]: adding one to the corner gives another glue.
  std::vector<Vector> ext1_basis;
};
GlueResult glue(const Representation& r, const Representation& rp);

}  // namespace nilrep
