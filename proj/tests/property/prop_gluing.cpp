#include <gtest/gtest.h>

#include "generators.hpp"
#include "nilrep/fixtures.hpp"
#include "nilrep/gluing.hpp"
#include "nilrep/moduli.hpp"
#include "oracles.hpp"

using namespace nilrep;
using namespace nilrep::testing;

namespace {

std::vector<std::pair<AlgebraPtr, size_t>> cases() {
  auto p = [](LieAlgebra g) { return std::make_shared<const LieAlgebra>(std::move(g)); };
  return {{p(abelian_algebra(2)), 3}, {p(abelian_algebra(3)), 4}, {p(strictly_upper_algebra(3)), 4},
          {p(strictly_upper_algebra(4)), 4}, {p(free_nilpotent(2, 3)), 4}, {make_fixture("example49").algebra, 3}};
}

Representation two_dim(const AlgebraPtr& g, const Vector& lam) {
  std::vector<Matrix> mats;
  for (size_t a = 0; a < g->dim(); ++a) {
    Matrix m(g->field(), 2, 2);
    m(0, 1) = lam[a];
    mats.push_back(m);
  }
  return Representation(g, mats);
}

// Dual representation in the reversed basis: -w rho^T w, again in standard coordinates.
Representation dual(const Representation& r) {
  const Field& f = r.field();
  const size_t n = r.n();
  Matrix w(f, n, n);
  for (size_t i = 0; i < n; ++i) w(i, n - 1 - i) = Scalar::one(f);
  std::vector<Matrix> mats;
  for (const auto& m : r.matrices()) mats.push_back(-(w * m.transpose() * w));
  return Representation(r.algebra_ptr(), mats);
}

Representation random_extension(Gen& gen, const Representation& r) {
  Subspace cols = column_extension_space(r);
  Vector v = zero_vector(r.field(), cols.ambient_dim());
  for (const auto& b : cols.basis()) v = add(v, scale(gen.scalar(r.field(), 3), b));
  return extend_by_column(r, v);
}

// Checks the glue result against the brute-force corner solver.
void expect_agrees(const Representation& r, const Representation& rp) {
  GlueResult res = glue(r, rp);
  auto corner = brute_glue_corner(r, rp);
  EXPECT_EQ(res.obstruction.vanishes, corner.has_value());
  EXPECT_EQ(res.glued.has_value(), corner.has_value());
  if (!res.glued) return;
  const Representation& s = *res.glued;
  EXPECT_TRUE(check_representation(s.algebra(), s.matrices()).ok);
  EXPECT_EQ(subquotient(s, 0, r.n()).matrices(), r.matrices());
  EXPECT_EQ(subquotient(s, 1, r.n() + 1).matrices(), rp.matrices());
}

}  // namespace

TEST(PropGluing, TruncationsOfFlagRepsGlue) {
  Gen gen(61);
  for (const auto& [g, n] : cases()) {
    for (int it = 0; it < 6; ++it) {
      Representation s0 = gen.standard_flag_rep(g, n);
      Representation r = subquotient(s0, 0, n - 1), rp = subquotient(s0, 1, n);
      ASSERT_TRUE(overlap_compatible(r, rp));
      expect_agrees(r, rp);
      GlueResult res = glue(r, rp);
      ASSERT_TRUE(res.glued.has_value());
      Vector diff = sub(full_entries(*res.glued).lam(1, n), full_entries(s0).lam(1, n));
      EXPECT_TRUE(annihilator(g->derived()).contains(diff));
      // The cochain is the coboundary of the existing corner.
      Cochain2 c = gluing_cochain(r, rp);
      CEComplex ce = ce_differentials(*g);
      for (size_t a = 0; a < g->dim(); ++a)
        for (size_t b = a + 1; b < g->dim(); ++b)
          EXPECT_EQ(c.at(ce, a, b), dot(full_entries(s0).lam(1, n), g->bracket_basis(a, b)));
    }
  }
}

TEST(PropGluing, AdversarialPairs) {
  // Compatible pairs built independently on both sides of a shared middle, so a
  // larger representation need not exist.
  Gen gen(62);
  size_t obstructed = 0;
  for (const auto& [g, n] : cases()) {
    for (int it = 0; it < 8; ++it) {
      Representation mid = gen.standard_flag_rep(g, n - 2);
      Representation rp = random_extension(gen, mid);
      Representation r = dual(random_extension(gen, dual(mid)));
      if (!r.is_flag() || !rp.is_flag()) continue;
      ASSERT_TRUE(overlap_compatible(r, rp));
      expect_agrees(r, rp);
      if (!gluing_obstruction(r, rp).vanishes) ++obstructed;
    }
  }
  EXPECT_GT(obstructed, 0u);
}

TEST(PropGluing, AbelianDiagonal) {
  Gen gen(63);
  auto k2 = std::make_shared<const LieAlgebra>(abelian_algebra(2));
  const Field f = Field::rationals();
  for (int it = 0; it < 40; ++it) {
    Vector lam = gen.nonzero_vector(f, 2, 4);
    Vector lamp = it % 3 == 0 ? scale(gen.nonzero_scalar(f, 4), lam) : gen.nonzero_vector(f, 2, 4);
    Representation r = two_dim(k2, lam), rp = two_dim(k2, lamp);
    ObstructionClass o = gluing_obstruction(r, rp);
    EXPECT_EQ(o.vanishes, is_zero(wedge(lam, lamp)));
    expect_agrees(r, rp);
  }
}
