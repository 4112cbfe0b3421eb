#include "nilrep/lie_algebra.hpp"

#include <sstream>

namespace nilrep {

namespace {

std::string idx3(size_t i, size_t j, size_t k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

Vector bracket_raw(const Field& f, size_t dim, const std::vector<std::vector<Vector>>& c,
                   const Vector& u, const Vector& v) {
  Vector r = zero_vector(f, dim);
  for (size_t i = 0; i < dim; ++i) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < dim; ++j) {
      if (v[j].is_zero() || i == j) continue;
      Scalar uv = u[i] * v[j];
      const Vector& cij = c[i][j];
      for (size_t k = 0; k < dim; ++k)
        if (!cij[k].is_zero()) r[k] += uv * cij[k];
    }
  }
  return r;
}

}  // namespace

std::vector<Subspace> descending_central_series(const Field& f, size_t dim,
                                                const std::vector<std::vector<Vector>>& c,
                                                size_t max_steps) {
  std::vector<Subspace> series{Subspace::full(f, dim)};
  while (series.back().dim() > 0 && series.size() <= max_steps) {
    std::vector<Vector> gens;
    for (const auto& w : series.back().basis())
      for (size_t a = 0; a < dim; ++a)
        gens.push_back(bracket_raw(f, dim, c, unit_vector(f, dim, a), w));
    Subspace next = Subspace::span(f, dim, gens);
    if (next == series.back()) {
      series.push_back(next);
      break;
    }
    series.push_back(std::move(next));
  }
  return series;
}

AlgebraReport LieAlgebra::validate(const Field& f, size_t dim,
                                   const std::vector<std::vector<Vector>>& c) {
  AlgebraReport rep;
  if (c.size() != dim) {
    rep.antisymmetric = false;
    rep.violations.push_back("structure table has wrong size");
    return rep;
  }
  for (size_t i = 0; i < dim; ++i) {
    if (c[i].size() != dim) {
      rep.antisymmetric = false;
      rep.violations.push_back("structure table row " + std::to_string(i) + " has wrong size");
      return rep;
    }
    for (size_t j = 0; j < dim; ++j) {
      if (c[i][j].size() != dim) {
        rep.antisymmetric = false;
        rep.violations.push_back("bracket vector has wrong length at (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")");
        return rep;
      }
      for (const auto& s : c[i][j])
        if (s.field() != f) throw FieldMismatch("structure constant over the wrong field");
    }
  }
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = i; j < dim; ++j)
      for (size_t k = 0; k < dim; ++k)
        if (c[i][j][k] != -c[j][i][k]) {
          rep.antisymmetric = false;
          rep.violations.push_back("antisymmetry fails at " + idx3(i, j, k));
        }
  if (!rep.antisymmetric) return rep;
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = i + 1; j < dim; ++j)
      for (size_t k = j + 1; k < dim; ++k) {
        auto e = [&](size_t a) { return unit_vector(f, dim, a); };
        Vector s = add(add(bracket_raw(f, dim, c, e(i), c[j][k]),
                           bracket_raw(f, dim, c, e(j), c[k][i])),
                       bracket_raw(f, dim, c, e(k), c[i][j]));
        if (!is_zero(s)) {
          rep.jacobi = false;
          rep.violations.push_back("Jacobi identity fails at " + idx3(i, j, k));
        }
      }
  if (!rep.jacobi) return rep;
  auto series = descending_central_series(f, dim, c, dim + 1);
  if (series.back().dim() != 0) {
    rep.nilpotent = false;
    rep.violations.push_back("not nilpotent: descending central series stabilizes at dimension " +
                             std::to_string(series.back().dim()));
  } else {
    rep.depth = series.size() - 1;
  }
  return rep;
}

LieAlgebra LieAlgebra::create(const Field& f, std::vector<std::string> labels,
                              std::vector<std::vector<Vector>> structure) {
  AlgebraReport rep = validate(f, labels.size(), structure);
  if (!rep.ok()) {
    std::string msg = "invalid Lie algebra";
    for (const auto& v : rep.violations) msg += "; " + v;
    throw InvalidAlgebra(msg, rep);
  }
  LieAlgebra g;
  g.field_ = f;
  g.labels_ = std::move(labels);
  g.c_ = std::move(structure);
  g.series_ = descending_central_series(f, g.dim(), g.c_, g.dim() + 1);
  return g;
}

size_t LieAlgebra::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("unknown basis label '" + label + "'");
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
  if (u.size() != dim() || v.size() != dim()) throw DimensionMismatch("bracket argument length");
  return bracket_raw(field_, dim(), c_, u, v);
}

Matrix LieAlgebra::ad(size_t i) const {
  Matrix m(field_, dim(), dim());
  for (size_t j = 0; j < dim(); ++j)
    for (size_t k = 0; k < dim(); ++k) m(k, j) = c_[i][j][k];
  return m;
}

const Subspace& LieAlgebra::series_term(size_t s) const {
  if (s == 0) throw std::out_of_range("central series is indexed from 1");
  if (s > series_.size()) return series_.back();
  return series_[s - 1];
}

Subspace LieAlgebra::abelian_dual() const { return annihilator(derived()); }

GradedPiece LieAlgebra::graded_piece(size_t s) const {
  if (s < 1) throw std::out_of_range("graded pieces are indexed from 1");
  GradedPiece p;
  p.s = s;
  p.lower = series_term(s + 1);
  Subspace acc = p.lower;
  for (const auto& v : series_term(s).basis()) {
    if (acc.contains(v)) continue;
    p.lifts.push_back(v);
    acc = sum(acc, Subspace::span(field_, dim(), {v}));
  }
  return p;
}

Vector LieAlgebra::graded_coordinates(size_t s, const Vector& x) const {
  GradedPiece p = graded_piece(s);
  std::vector<Vector> cols = p.lifts;
  for (auto& v : p.lower.basis()) cols.push_back(std::move(v));
  auto sol = solve(Matrix::from_columns(field_, dim(), cols), x);
  if (!sol) throw std::invalid_argument("element is not in g^(" + std::to_string(s) + ")");
  return Vector(sol->begin(), sol->begin() + p.dim());
}

GradedElement LieAlgebra::graded_bracket(const GradedElement& u, const GradedElement& v) const {
  if (!series_term(u.s).contains(u.lift) || !series_term(v.s).contains(v.lift))
    throw std::invalid_argument("graded bracket arguments are not lifts of the stated degree");
  return {u.s + v.s, bracket(u.lift, v.lift)};
}

bool LieAlgebra::graded_equal(const GradedElement& a, const GradedElement& b) const {
  if (a.s != b.s) return false;
  return series_term(a.s + 1).contains(sub(a.lift, b.lift));
}

LieAlgebra LieAlgebra::base_change(const Field& f) const {
  if (f == field_) return *this;
  std::vector<std::vector<Vector>> c = c_;
  for (auto& row : c)
    for (auto& v : row) v = promote(v, f);
  return create(f, labels_, std::move(c));
}

bool LieAlgebra::same_structure(const LieAlgebra& other) const {
  if (dim() != other.dim() || labels_ != other.labels_) return false;
  const Field& f = field_.is_rational() ? other.field_ : field_;
  if (!field_.is_rational() && !other.field_.is_rational() && field_ != other.field_) return false;
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j)
      if (promote(c_[i][j], f) != promote(other.c_[i][j], f)) return false;
  return true;
}

std::vector<size_t> LieAlgebra::default_generators() const {
  std::vector<size_t> gens;
  Subspace acc = derived();
  for (size_t i = 0; i < dim(); ++i) {
    Vector e = unit_vector(field_, dim(), i);
    if (acc.contains(e)) continue;
    gens.push_back(i);
    acc = sum(acc, Subspace::span(field_, dim(), {e}));
  }
  return gens;
}

LieAlgebra abelian_algebra(size_t m, const Field& f) {
  std::vector<std::string> labels;
  for (size_t i = 0; i < m; ++i) labels.push_back("e" + std::to_string(i + 1));
  return algebra_from_brackets(f, std::move(labels), {});
}

LieAlgebra strictly_upper_algebra(size_t n, const Field& f) {
  std::vector<std::pair<size_t, size_t>> pos;
  std::vector<std::string> labels;
  for (size_t i = 1; i <= n; ++i)
    for (size_t j = i + 1; j <= n; ++j) {
      pos.emplace_back(i, j);
      labels.push_back("e" + std::to_string(i) + std::to_string(j));
    }
  auto index = [&](size_t i, size_t j) {
    for (size_t k = 0; k < pos.size(); ++k)
      if (pos[k] == std::make_pair(i, j)) return k;
    throw std::logic_error("bad index");
  };
  std::vector<BracketSpec> br;
  // [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
  for (size_t a = 0; a < pos.size(); ++a)
    for (size_t b = a + 1; b < pos.size(); ++b) {
      auto [i, j] = pos[a];
      auto [k, l] = pos[b];
      BracketSpec s{a, b, {}};
      if (j == k) s.terms.emplace_back(index(i, l), Scalar::one(f));
      if (l == i) s.terms.emplace_back(index(k, j), -Scalar::one(f));
      if (!s.terms.empty()) br.push_back(std::move(s));
    }
  return algebra_from_brackets(f, std::move(labels), br);
}

LieAlgebra algebra_from_brackets(const Field& f, std::vector<std::string> labels,
                                 const std::vector<BracketSpec>& brackets) {
  const size_t m = labels.size();
  std::vector<std::vector<Vector>> c(m, std::vector<Vector>(m, zero_vector(f, m)));
  for (const auto& b : brackets) {
    if (b.i >= m || b.j >= m) throw std::out_of_range("bracket index out of range");
    for (const auto& [k, coef] : b.terms) {
      if (k >= m) throw std::out_of_range("bracket index out of range");
      c[b.i][b.j][k] += coef;
      c[b.j][b.i][k] -= coef;
    }
  }
  return LieAlgebra::create(f, std::move(labels), std::move(c));
}

long long witt_number(long long m, long long s) {
  auto mobius = [](long long n) {
    int sign = 1;
    for (long long p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
  };
  long long total = 0;
  for (long long e = 1; e <= s; ++e) {
    if (s % e) continue;
    long long pw = 1;
    for (long long k = 0; k < s / e; ++k) pw *= m;
    total += mobius(e) * pw;
  }
  return total / s;
}

namespace {

// Homogeneous element of the free associative algebra: coefficients of the
// m^deg words of length deg, indexed in base m with the first letter most significant.
struct Homog {
  size_t deg = 0;
  std::vector<Rational> c;
};

size_t ipow(size_t b, size_t e) {
  size_t r = 1;
  while (e--) r *= b;
  return r;
}

Homog assoc_commutator(size_t m, const Homog& a, const Homog& b) {
  const size_t na = a.c.size(), nb = b.c.size();
  Homog r{a.deg + b.deg, std::vector<Rational>(na * nb, Rational(0))};
  for (size_t p = 0; p < na; ++p) {
    if (a.c[p] == 0) continue;
    for (size_t q = 0; q < nb; ++q) {
      if (b.c[q] == 0) continue;
      Rational prod = a.c[p] * b.c[q];
      r.c[p * nb + q] += prod;
      r.c[q * na + p] -= prod;
    }
  }
  (void)m;
  return r;
}

Vector to_vector(const Homog& h) {
  Vector v;
  v.reserve(h.c.size());
  for (const auto& q : h.c) v.emplace_back(q);
  return v;
}

}  // namespace

LieAlgebra free_nilpotent(size_t m, size_t c, const FreeNilpotentOptions& opts) {
  if (m < 1 || c < 1) throw std::invalid_argument("free_nilpotent needs rank >= 1 and class >= 1");
  size_t words = 0;
  for (size_t k = 1; k <= c; ++k) {
    words += ipow(m, k);
    if (words > opts.word_cap)
      throw std::length_error("free_nilpotent: ambient word count exceeds cap of " +
                              std::to_string(opts.word_cap));
  }
  const Field q = Field::rationals();
  struct BasisElem {
    Homog h;
    std::string label;
  };
  std::vector<std::vector<BasisElem>> by_degree(c + 1);
  for (size_t i = 0; i < m; ++i) {
    Homog h{1, std::vector<Rational>(m, Rational(0))};
    h.c[i] = 1;
    by_degree[1].push_back({h, "x" + std::to_string(i + 1)});
  }
  for (size_t s = 2; s <= c; ++s) {
    const size_t n = ipow(m, s);
    Subspace acc = Subspace::zero(q, n);
    for (size_t i = 0; i < m; ++i)
      for (const auto& b : by_degree[s - 1]) {
        Homog h = assoc_commutator(m, by_degree[1][i].h, b.h);
        Vector v = to_vector(h);
        if (is_zero(v) || acc.contains(v)) continue;
        acc = sum(acc, Subspace::span(q, n, {v}));
        by_degree[s].push_back({h, "[" + by_degree[1][i].label + "," + b.label + "]"});
      }
    if (static_cast<long long>(by_degree[s].size()) != witt_number(m, s))
      throw std::logic_error("free_nilpotent: degree " + std::to_string(s) +
                             " dimension disagrees with the Witt number");
  }
  std::vector<std::string> labels;
  std::vector<std::pair<size_t, size_t>> where;  // (degree, position)
  std::vector<size_t> offset(c + 2, 0);
  for (size_t s = 1; s <= c; ++s) {
    offset[s] = labels.size();
    for (size_t k = 0; k < by_degree[s].size(); ++k) {
      labels.push_back(by_degree[s][k].label);
      where.emplace_back(s, k);
    }
  }
  const size_t dim = labels.size();
  std::vector<Matrix> degree_basis(c + 1);
  for (size_t s = 1; s <= c; ++s) {
    std::vector<Vector> cols;
    for (const auto& b : by_degree[s]) cols.push_back(to_vector(b.h));
    degree_basis[s] = Matrix::from_columns(q, ipow(m, s), cols);
  }
  std::vector<std::vector<Vector>> st(dim, std::vector<Vector>(dim, zero_vector(q, dim)));
  for (size_t a = 0; a < dim; ++a)
    for (size_t b = a + 1; b < dim; ++b) {
      auto [sa, ka] = where[a];
      auto [sb, kb] = where[b];
      if (sa + sb > c) continue;
      Homog h = assoc_commutator(m, by_degree[sa][ka].h, by_degree[sb][kb].h);
      auto coords = solve(degree_basis[sa + sb], to_vector(h));
      if (!coords) throw std::logic_error("free_nilpotent: Lie part not closed under bracket");
      for (size_t k = 0; k < coords->size(); ++k) {
        st[a][b][offset[sa + sb] + k] = (*coords)[k];
        st[b][a][offset[sa + sb] + k] = -(*coords)[k];
      }
    }
  return LieAlgebra::create(q, std::move(labels), std::move(st));
}

}  // namespace nilrep
