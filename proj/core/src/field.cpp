#include "nilrep/field.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace nilrep {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of `a` modulo the monic polynomial `m`.
Poly poly_mod(Poly a, const Poly& m) {
  trim(a);
  const size_t d = m.size() - 1;
  while (a.size() > d) {
    Rational lead = a.back();
    size_t shift = a.size() - 1 - d;
    for (size_t i = 0; i <= d; ++i) a[shift + i] -= lead * m[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder for a nonzero divisor b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    Rational c = a.back() / lead;
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  // Moduli in practice have tiny coefficients; cap trial division so an
  // adversarial input cannot stall construction.
  const mpz_class cap = 1000000;
  for (mpz_class d = 1; d * d <= n && d <= cap; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

struct Term {
  Rational coeff;
  int power;
};

// Parses a sum of terms c, c*s, c s, s, s^k, c*s^k with rational c.
// `symbol` is learned from the first identifier if empty.
std::vector<Term> parse_terms(std::string_view text, std::string& symbol) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty scalar expression");
  std::vector<Term> terms;
  size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("cannot parse '" + std::string(text) + "': " + why);
  };
  while (pos < s.size()) {
    int sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    if (pos >= s.size()) fail("dangling sign");
    Rational coeff = 1;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '(') {
      bool paren = s[pos] == '(';
      if (paren) ++pos;
      size_t start = pos;
      while (pos < s.size() &&
             (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
        ++pos;
      std::string num = s.substr(start, pos - start);
      if (paren) {
        if (pos >= s.size() || s[pos] != ')') fail("unbalanced parenthesis");
        ++pos;
      }
      if (num.empty() || num.front() == '/' || num.back() == '/') fail("bad number");
      try {
        coeff = Rational(num);
      } catch (const std::invalid_argument&) {
        fail("bad number '" + num + "'");
      }
      if (coeff.get_den() == 0) fail("zero denominator");
      coeff.canonicalize();
      have_number = true;
    }
    int power = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!have_number) fail("unexpected '*'");
      ++pos;
    }
    if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string ident = s.substr(start, pos - start);
      if (symbol.empty()) symbol = ident;
      if (ident != symbol) fail("unknown symbol '" + ident + "'");
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        size_t ps = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (ps == pos) fail("missing exponent");
        power = std::stoi(s.substr(ps, pos - ps));
      }
    } else if (!have_number) {
      fail("expected a number or symbol");
    }
    terms.push_back({sign * coeff, power});
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') fail("unexpected character");
  }
  return terms;
}

}  // namespace

bool has_rational_root(const std::vector<Rational>& monic) {
  if (monic.empty()) return false;
  if (monic.front() == 0) return true;
  // Clear denominators: L * p(x) has integer coefficients.
  mpz_class lcm = 1;
  for (const auto& c : monic) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class lead = lcm;
  mpz_class constant = monic.front().get_num() * (lcm / monic.front().get_den());
  for (const auto& p : divisors(constant)) {
    for (const auto& q : divisors(lead)) {
      for (int sgn : {1, -1}) {
        Rational x(sgn * p, q);
        x.canonicalize();
        if (eval(monic, x) == 0) return true;
      }
    }
  }
  return false;
}

Field::Field() : Field(rationals()) {}

Field Field::rationals() {
  static const std::shared_ptr<const Impl> q = std::make_shared<const Impl>();
  return Field(q);
}

Field Field::extension(std::vector<Rational> min_poly, std::string symbol) {
  trim(min_poly);
  if (min_poly.size() < 3)
    throw std::invalid_argument("minimal polynomial must have degree >= 2");
  Rational lead = min_poly.back();
  for (auto& c : min_poly) c /= lead;
  if (has_rational_root(min_poly))
    throw ReducibleModulus("reducible modulus detected: minimal polynomial has a rational root");
  if (symbol.empty()) symbol = "a";
  auto impl = std::make_shared<Impl>();
  impl->min_poly = std::move(min_poly);
  impl->symbol = std::move(symbol);
  return Field(std::shared_ptr<const Impl>(std::move(impl)));
}

Field Field::parse_extension(std::string_view poly_text) {
  std::string symbol;
  auto terms = parse_terms(poly_text, symbol);
  int deg = 0;
  for (const auto& t : terms) deg = std::max(deg, t.power);
  Poly p(deg + 1, Rational(0));
  for (const auto& t : terms) p[t.power] += t.coeff;
  return extension(std::move(p), symbol.empty() ? "a" : symbol);
}

int Field::degree() const {
  return is_rational() ? 1 : static_cast<int>(impl_->min_poly.size()) - 1;
}

std::string Field::describe() const {
  if (is_rational()) return "Q";
  std::ostringstream os;
  os << "Q[" << symbol() << "]/(";
  bool first = true;
  const auto& m = min_poly();
  for (size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    Rational c = m[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0 && a != 1) os << "*";
    if (i > 0) os << symbol();
    if (i > 1) os << "^" << i;
    first = false;
  }
  os << ")";
  return os.str();
}

bool Field::operator==(const Field& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->min_poly == other.impl_->min_poly && impl_->symbol == other.impl_->symbol;
}

Scalar::Scalar() : field_(Field::rationals()), c_{Rational(0)} {}

Scalar::Scalar(long v) : field_(Field::rationals()), c_{Rational(v)} {}

Scalar::Scalar(const Rational& q) : field_(Field::rationals()), c_{q} {
  c_[0].canonicalize();
}

Scalar::Scalar(const Field& f, const Rational& q) : field_(f), c_(f.degree(), Rational(0)) {
  c_[0] = q;
  c_[0].canonicalize();
}

Scalar::Scalar(const Field& f, std::vector<Rational> coeffs) : field_(f) {
  for (auto& c : coeffs) c.canonicalize();
  if (f.is_rational()) {
    trim(coeffs);
    if (coeffs.size() > 1)
      throw FieldMismatch("coefficient vector too long for the rational field");
    c_ = {coeffs.empty() ? Rational(0) : coeffs[0]};
    return;
  }
  Poly r = poly_mod(std::move(coeffs), f.min_poly());
  r.resize(f.degree(), Rational(0));
  c_ = std::move(r);
}

Scalar Scalar::generator(const Field& f) {
  if (f.is_rational()) throw FieldMismatch("the rational field has no generator");
  std::vector<Rational> c(f.degree(), Rational(0));
  c[1] = 1;
  return Scalar(f, std::move(c));
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  std::string symbol = f.is_rational() ? std::string("\x01") : f.symbol();
  auto terms = parse_terms(text, symbol);
  int deg = 0;
  for (const auto& t : terms) deg = std::max(deg, t.power);
  Poly p(deg + 1, Rational(0));
  for (const auto& t : terms) p[t.power] += t.coeff;
  return Scalar(f, std::move(p));
}

bool Scalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool Scalar::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

bool Scalar::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

Rational Scalar::rational() const {
  if (!is_rational()) throw std::domain_error("scalar is not rational: " + to_string());
  return c_[0];
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("field mismatch: " + field_.describe() + " vs " + o.field_.describe());
}

void Scalar::check_canonical() const {
#ifndef NDEBUG
  for (const auto& q : c_) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (g != 1 || q.get_den() <= 0) throw std::logic_error("unreduced rational " + q.get_str());
  }
#endif
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  check_canonical();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  check_canonical();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    c_[0] *= o.c_[0];
  } else {
    Poly r = poly_mod(poly_mul(c_, o.c_), field_.min_poly());
    r.resize(field_.degree(), Rational(0));
    c_ = std::move(r);
  }
  check_canonical();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero");
  if (field_.is_rational()) return Scalar(field_, 1 / c_[0]);
  // Extended Euclid: find s with s*a = 1 mod m.
  Poly r0 = field_.min_poly(), r1 = c_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, rem] = poly_divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1)
    throw ReducibleModulus("reducible modulus detected: " + to_string() +
                           " shares a factor with " + field_.describe());
  Rational g = r0[0];
  for (auto& c : s0) c /= g;
  return Scalar(field_, std::move(s0));
}

Scalar Scalar::promoted(const Field& f) const {
  if (field_ == f) return *this;
  if (!field_.is_rational())
    throw FieldMismatch("cannot promote from " + field_.describe() + " to " + f.describe());
  return Scalar(f, c_[0]);
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return c_ == o.c_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational a = abs(c_[i]);
    if (!first) os << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) os << "-";
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << field_.symbol();
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace nilrep
