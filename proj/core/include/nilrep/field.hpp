#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilrep {

using Rational = mpq_class;

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when an inversion exposes a nontrivial factor of the modulus.
class ReducibleModulus : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Either Q or Q[a]/(m(a)) with m monic of degree >= 2 and no rational root.
// Cheap to copy; instances compare equal when their moduli and symbols agree.
class Field {
 public:
  Field();

  static Field rationals();
  // `min_poly` lists coefficients from the constant term up; it is made monic.
  static Field extension(std::vector<Rational> min_poly, std::string symbol = "a");
  // Parses text like "x^2+1" or "a^2 - 2"; the variable name becomes the symbol.
  static Field parse_extension(std::string_view poly_text);

  bool is_rational() const { return impl_->min_poly.empty(); }
  int degree() const;
  const std::vector<Rational>& min_poly() const { return impl_->min_poly; }
  const std::string& symbol() const { return impl_->symbol; }
  std::string describe() const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  struct Impl {
    std::vector<Rational> min_poly;
    std::string symbol;
  };
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

class Scalar {
 public:
  Scalar();
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  Scalar(const Field& f, const Rational& q);
  Scalar(const Field& f, std::vector<Rational> coeffs);

  static Scalar zero(const Field& f) { return Scalar(f, Rational(0)); }
  static Scalar one(const Field& f) { return Scalar(f, Rational(1)); }
  static Scalar generator(const Field& f);
  // Accepts "p/q", "3", "1/2 + 3*a", "-a", "2a" in the symbol of `f`.
  static Scalar parse(const Field& f, std::string_view text);

  const Field& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Requires is_rational().
  Rational rational() const;

  Scalar inverse() const;
  Scalar promoted(const Field& f) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;
  void check_canonical() const;
  Field field_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Rational-root test for a monic rational polynomial (constant term first).
bool has_rational_root(const std::vector<Rational>& monic);

}  // namespace nilrep
