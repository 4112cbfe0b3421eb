#include <gtest/gtest.h>

#include "nilrep/field.hpp"

using namespace nilrep;

namespace {

Field qi() { return Field::extension({Rational(1), Rational(0), Rational(1)}, "i"); }

}  // namespace

TEST(Field, RationalArithmetic) {
  Scalar a(Rational(1, 2)), b(Rational(1, 3));
  EXPECT_EQ(a + b, Scalar(Rational(5, 6)));
  EXPECT_EQ((a - b).to_string(), "1/6");
  EXPECT_EQ((a * b).to_string(), "1/6");
  EXPECT_EQ((a / b).to_string(), "3/2");
}

TEST(Field, GaussianIntegersReduceModulo) {
  Field f = qi();
  Scalar i = Scalar::generator(f);
  EXPECT_EQ(i * i, Scalar(f, Rational(-1)));
  Scalar u = Scalar::one(f) + Scalar(f, Rational(2)) * i;
  Scalar v = Scalar::one(f) - Scalar(f, Rational(2)) * i;
  EXPECT_EQ(u * v, Scalar(f, Rational(5)));
}

TEST(Field, Inverses) {
  EXPECT_EQ(Scalar(Rational(2, 3)).inverse(), Scalar(Rational(3, 2)));
  Field f = qi();
  EXPECT_EQ(Scalar::generator(f).inverse(), -Scalar::generator(f));
  EXPECT_THROW(Scalar::zero(f).inverse(), DivisionByZero);
  EXPECT_THROW(Scalar(Rational(0)).inverse(), DivisionByZero);
}

TEST(Field, RationalRootRejectedAtConstruction) {
  EXPECT_THROW(Field::extension({Rational(-1), Rational(0), Rational(1)}), ReducibleModulus);
  EXPECT_THROW(Field::parse_extension("x^2-4"), ReducibleModulus);
  EXPECT_TRUE(has_rational_root({Rational(-1), Rational(0), Rational(1)}));
  EXPECT_FALSE(has_rational_root({Rational(1), Rational(0), Rational(1)}));
}

TEST(Field, ReducibleQuarticDetectedOnInversion) {
  // (x^2+1)(x^2+2) has no rational root but is reducible.
  Field f = Field::parse_extension("x^4+3x^2+2");
  Scalar x = Scalar::generator(f);
  Scalar factor = x * x + Scalar::one(f);
  EXPECT_THROW(factor.inverse(), ReducibleModulus);
}

TEST(Field, MismatchedFieldsThrow) {
  Field f = qi();
  Field g = Field::parse_extension("y^2-2");
  EXPECT_THROW(Scalar::one(f) + Scalar::one(g), FieldMismatch);
  EXPECT_THROW(Scalar::one(f) * Scalar(Rational(2)), FieldMismatch);
  EXPECT_EQ(Scalar(Rational(2)).promoted(f) * Scalar::generator(f), Scalar(f, {Rational(0), Rational(2)}));
}

TEST(Field, ParseAndPrintRoundTrip) {
  Field f = Field::parse_extension("a^2 + 1");
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.symbol(), "a");
  for (const char* text : {"0", "1", "-3/4", "a", "-a", "1/2 + 3*a", "2a", "-1 - a"}) {
    Scalar s = Scalar::parse(f, text);
    EXPECT_EQ(Scalar::parse(f, s.to_string()), s) << text;
  }
  EXPECT_EQ(Scalar::parse(f, "1/2 + 3*a").to_string(), "1/2 + 3*a");
  EXPECT_THROW(Scalar::parse(f, "1/0"), ParseError);
  EXPECT_THROW(Scalar::parse(f, "b"), ParseError);
  EXPECT_THROW(Scalar::parse(Field::rationals(), "a"), ParseError);
}

TEST(Field, DescribeAndEquality) {
  EXPECT_EQ(Field::rationals().describe(), "Q");
  EXPECT_EQ(Field::parse_extension("x^2+1"), Field::parse_extension("x^2 + 1"));
  EXPECT_NE(Field::parse_extension("x^2+1"), Field::parse_extension("x^2+2"));
  EXPECT_NE(Field::rationals(), qi());
}
