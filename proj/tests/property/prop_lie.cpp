#include <gtest/gtest.h>

#include "generators.hpp"
#include "nilrep/fixtures.hpp"
#include "nilrep/gluing.hpp"
#include "oracles.hpp"

using namespace nilrep;
using namespace nilrep::testing;

namespace {

std::vector<AlgebraPtr> algebras() {
  std::vector<AlgebraPtr> out;
  for (const auto& name : fixture_names()) out.push_back(make_fixture(name).algebra);
  out.push_back(std::make_shared<const LieAlgebra>(free_nilpotent(2, 4)));
  out.push_back(std::make_shared<const LieAlgebra>(free_nilpotent(3, 2)));
  out.push_back(std::make_shared<const LieAlgebra>(strictly_upper_algebra(6)));
  return out;
}

}  // namespace

TEST(PropLie, BracketIsAlternatingBilinearAndJacobi) {
  Gen gen(21);
  for (const auto& g : algebras()) {
    const Field& f = g->field();
    const size_t m = g->dim();
    for (int it = 0; it < 20; ++it) {
      Vector x = gen.vector(f, m), y = gen.vector(f, m), z = gen.vector(f, m);
      Scalar s = gen.scalar(f);
      EXPECT_TRUE(is_zero(g->bracket(x, x)));
      EXPECT_EQ(g->bracket(add(x, scale(s, y)), z), add(g->bracket(x, z), scale(s, g->bracket(y, z))));
      Vector jac = add(add(g->bracket(x, g->bracket(y, z)), g->bracket(y, g->bracket(z, x))),
                       g->bracket(z, g->bracket(x, y)));
      EXPECT_TRUE(is_zero(jac));
    }
  }
}

TEST(PropLie, CentralSeriesIsFiltered) {
  Gen gen(22);
  for (const auto& g : algebras()) {
    const auto& series = g->central_series();
    for (size_t s = 1; s + 1 <= series.size(); ++s) {
      EXPECT_TRUE(series[s - 1].contains(series[s]));
      for (const auto& u : g->series_term(1).basis())
        for (const auto& v : g->series_term(s).basis()) EXPECT_TRUE(g->series_term(s + 1).contains(g->bracket(u, v)));
    }
    EXPECT_EQ(series.back().dim(), 0u);
  }
}

TEST(PropLie, GradedBracketBilinearAndLiftIndependent) {
  Gen gen(23);
  for (const auto& g : algebras()) {
    const Field& f = g->field();
    for (size_t s = 1; s <= g->depth(); ++s)
      for (size_t t = 1; s + t <= g->depth() + 1; ++t) {
        GradedPiece ps = g->graded_piece(s), pt = g->graded_piece(t);
        if (ps.lifts.empty() || pt.lifts.empty()) continue;
        for (int it = 0; it < 4; ++it) {
          Vector u = zero_vector(f, g->dim()), v = zero_vector(f, g->dim());
          for (const auto& l : ps.lifts) u = add(u, scale(gen.scalar(f, 3), l));
          for (const auto& l : pt.lifts) v = add(v, scale(gen.scalar(f, 3), l));
          Vector du = zero_vector(f, g->dim());
          for (const auto& l : ps.lower.basis()) du = add(du, scale(gen.scalar(f, 3), l));
          GradedElement a{s, u}, b{t, v}, a2{s, add(u, du)};
          EXPECT_TRUE(g->graded_equal(g->graded_bracket(a, b), g->graded_bracket(a2, b)));
          Scalar c = gen.scalar(f, 3);
          GradedElement ac{s, scale(c, u)};
          GradedElement lhs = g->graded_bracket(ac, b);
          GradedElement rhs{s + t, scale(c, g->graded_bracket(a, b).lift)};
          EXPECT_TRUE(g->graded_equal(lhs, rhs));
        }
      }
  }
}

TEST(PropLie, H2MatchesBruteForce) {
  for (const auto& g : algebras()) {
    if (g->dim() > 10) continue;
    EXPECT_EQ(h2_dimension(*g), brute_h2_dimension(*g)) << g->dim();
  }
  for (size_t m = 1; m <= 5; ++m) EXPECT_EQ(h2_dimension(abelian_algebra(m)), m * (m - 1) / 2);
}

TEST(PropLie, CEComplexSquaresToZero) {
  for (const auto& g : algebras()) {
    if (g->dim() > 10) continue;
    CEComplex ce = ce_differentials(*g);
    EXPECT_EQ(ce.d2 * ce.d1, Matrix(g->field(), ce.d2.rows(), ce.d1.cols()));
  }
}
