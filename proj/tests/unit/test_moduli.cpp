#include <gtest/gtest.h>

#include "nilrep/automorphisms.hpp"
#include "nilrep/fixtures.hpp"
#include "nilrep/moduli.hpp"

using namespace nilrep;

namespace {

const Field Q = Field::rationals();

AlgebraPtr ptr(LieAlgebra g) { return std::make_shared<const LieAlgebra>(std::move(g)); }

Representation two_dim(const AlgebraPtr& g, const Vector& lam) {
  std::vector<Matrix> mats;
  for (size_t a = 0; a < g->dim(); ++a) {
    Matrix m(g->field(), 2, 2);
    m(0, 1) = lam[a];
    mats.push_back(m);
  }
  return Representation(g, mats);
}

}  // namespace

TEST(Wide3, Decisions) {
  Wide3Decision ab = wide3_exists(ptr(abelian_algebra(3)));
  EXPECT_EQ(ab.verdict, Verdict::no);
  Wide3Decision n3 = wide3_exists(ptr(strictly_upper_algebra(3)));
  EXPECT_EQ(n3.verdict, Verdict::yes);
  ASSERT_TRUE(n3.witness.has_value());
  EXPECT_TRUE(is_wide(*n3.witness));
  Fixture fx = make_fixture("example49");
  Wide3Decision e49 = wide3_exists(fx.algebra);
  EXPECT_EQ(e49.verdict, Verdict::no);
  EXPECT_EQ(e49.decided_case, 'c');
  EXPECT_EQ(e49.dim_s, 1u);
  EXPECT_EQ(e49.dim_abelian, 4u);
}

TEST(Width, StrictlyUpper) {
  for (size_t n = 2; n <= 5; ++n) {
    AlgebraPtr g = ptr(strictly_upper_algebra(n));
    WidthReport w = width_bounds(g);
    EXPECT_TRUE(w.exact) << n;
    EXPECT_EQ(w.lower, n - 1);
    EXPECT_EQ(w.upper, n - 1);
    ASSERT_TRUE(w.witness.has_value());
    EXPECT_EQ(w.witness->n(), n);
    EXPECT_TRUE(is_wide(*w.witness));
  }
}

TEST(Width, Example48WithGaussianRationals) {
  Fixture fx = make_fixture("example48");
  WidthOptions opts;
  opts.extensions = {Field::parse_extension("i^2+1")};
  opts.hints = fx.hints();
  WidthReport w = width_bounds(fx.algebra, opts);
  EXPECT_TRUE(w.exact);
  EXPECT_EQ(w.lower, 3u);
  EXPECT_EQ(w.upper, 3u);
}

TEST(Width, Example49IsOne) {
  Fixture fx = make_fixture("example49");
  WidthReport w = width_bounds(fx.algebra);
  EXPECT_TRUE(w.exact);
  EXPECT_EQ(w.lower, 1u);
  EXPECT_EQ(w.upper, 1u);
  ASSERT_TRUE(w.wide3.has_value());
  EXPECT_EQ(w.wide3->verdict, Verdict::no);
}

TEST(AInvariant, Table) {
  auto triple = [](const AlgebraPtr& g) {
    std::vector<std::optional<size_t>> out;
    for (size_t n = 2; n <= 4; ++n) {
      AInvariantVerdict v = a_invariant(g, n);
      if (!v.exists) {
        out.push_back(std::nullopt);
        continue;
      }
      EXPECT_TRUE(v.exact()) << "n = " << n;
      out.push_back(v.lo);
    }
    return out;
  };
  using V = std::vector<std::optional<size_t>>;
  EXPECT_EQ(triple(ptr(abelian_algebra(3))), (V{2, 3, 4}));
  EXPECT_EQ(triple(ptr(abelian_algebra(4))), (V{2, 3, 4}));
  EXPECT_EQ(triple(ptr(strictly_upper_algebra(4))), (V{2, 2, 2}));
  // No 4-dimensional flag representation of n_3 has nondegenerate subquotients.
  EXPECT_EQ(triple(ptr(strictly_upper_algebra(3))), (V{2, 2, std::nullopt}));
  EXPECT_THROW(a_invariant(ptr(abelian_algebra(2)), 5), std::invalid_argument);
}

TEST(AInvariant, CertificatesRealizeValue) {
  AlgebraPtr k3 = ptr(abelian_algebra(3));
  for (size_t n = 2; n <= 4; ++n) {
    AInvariantVerdict v = a_invariant(k3, n);
    ASSERT_TRUE(v.certificate.has_value());
    EXPECT_EQ(v.certificate->n(), n);
    EXPECT_EQ(aut_dimension(*v.certificate), v.lo);
  }
}

TEST(Nondegenerate, Examples) {
  AlgebraPtr k2 = ptr(abelian_algebra(2));
  EXPECT_EQ(is_nondegenerate(two_dim(k2, unit_vector(Q, 2, 1))).verdict, Verdict::yes);

  Fixture fx = make_fixture("free23");
  const Representation& r = fx.rep("example269");
  EXPECT_EQ(aut_dimension(r), 2u);
  EXPECT_EQ(aut_dimension(subquotient(r, 1, 4)), 3u);
  WidthOptions opts;
  opts.hints = fx.hints();
  NondegeneracyReport rep = is_nondegenerate(r, opts);
  EXPECT_EQ(rep.verdict, Verdict::no);
  EXPECT_EQ(rep.aut_dimension, 2u);
  EXPECT_EQ(is_nondegenerate(fx.rep("wide4"), opts).verdict, Verdict::yes);

  Representation zero(k2, {Matrix(Q, 2, 2), Matrix(Q, 2, 2)});
  EXPECT_THROW(is_nondegenerate(zero), NotFlag);
}

TEST(IsoClassDim2, Examples) {
  AlgebraPtr k3 = ptr(abelian_algebra(3));
  Vector lam{Scalar(1), Scalar(-2), Scalar(3)};
  Representation r = two_dim(k3, lam);
  EXPECT_TRUE(iso_class_dim2(r, two_dim(k3, scale(Scalar(5), lam))));
  EXPECT_FALSE(iso_class_dim2(r, two_dim(k3, unit_vector(Q, 3, 0))));
  Representation zero(k3, {Matrix(Q, 2, 2), Matrix(Q, 2, 2), Matrix(Q, 2, 2)});
  EXPECT_THROW(iso_class_dim2(r, zero), std::invalid_argument);
}

TEST(ColumnExtension, TrivialAndNatural) {
  AlgebraPtr n3 = ptr(strictly_upper_algebra(3));
  Representation t = trivial_rep(n3);
  EXPECT_EQ(t.n(), 1u);
  // A new column over the trivial rep must vanish on [g, g].
  EXPECT_EQ(column_extension_space(t).dim(), 2u);
  Representation nat = natural_rep(n3, 3);
  Subspace cols = column_extension_space(nat);
  for (const auto& v : cols.basis()) EXPECT_EQ(extend_by_column(nat, v).n(), 4u);
  // lambda_{3,4} = e23^vee would force lambda_{1,3} ^ lambda_{3,4} to vanish on (e13, e23).
  EXPECT_FALSE(constrained_column(nat, {{3, unit_vector(Q, 3, 2)}}).has_value());
  // e12^vee fails on (e12, e13), where both wedge terms contribute -1.
  EXPECT_FALSE(constrained_column(nat, {{3, unit_vector(Q, 3, 0)}}).has_value());
  std::optional<Vector> mu = constrained_column(nat, {{3, zero_vector(Q, 3)}});
  ASSERT_TRUE(mu.has_value());
  Representation ext = extend_by_column(nat, *mu);
  EXPECT_TRUE(is_zero(full_entries(ext).lam(3, 4)));
  EXPECT_FALSE(ext.is_flag());
}
