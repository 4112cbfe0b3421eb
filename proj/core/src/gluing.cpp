#include "nilrep/gluing.hpp"

namespace nilrep {

size_t CEComplex::pair_index(size_t a, size_t b) const {
  if (a >= b || b >= m) throw std::out_of_range("pair index");
  // Offset of row a in the lexicographic list of pairs.
  return a * m - a * (a + 1) / 2 + (b - a - 1);
}

Scalar Cochain2::at(const CEComplex& ce, size_t a, size_t b) const {
  if (a == b) return Scalar::zero(values.at(0).field());
  if (a < b) return values[ce.pair_index(a, b)];
  return -values[ce.pair_index(b, a)];
}

Matrix bracket_form_matrix(const LieAlgebra& g) {
  const size_t m = g.dim();
  Matrix b(g.field(), m * (m - 1) / 2, m);
  size_t row = 0;
  for (size_t p = 0; p < m; ++p)
    for (size_t q = p + 1; q < m; ++q, ++row)
      for (size_t k = 0; k < m; ++k) b(row, k) = g.bracket_basis(p, q)[k];
  return b;
}

Vector wedge(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || a.empty()) throw DimensionMismatch("wedge of mismatched functionals");
  const size_t m = a.size();
  Vector w;
  for (size_t p = 0; p < m; ++p)
    for (size_t q = p + 1; q < m; ++q) w.push_back(a[p] * b[q] - a[q] * b[p]);
  return w;
}

CEComplex ce_differentials(const LieAlgebra& g) {
  CEComplex ce;
  const Field& f = g.field();
  const size_t m = g.dim();
  ce.m = m;
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a + 1; b < m; ++b) ce.pairs.emplace_back(a, b);
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a + 1; b < m; ++b)
      for (size_t c = b + 1; c < m; ++c) ce.triples.push_back({a, b, c});
  ce.d1 = -bracket_form_matrix(g);
  ce.d2 = Matrix(f, ce.triples.size(), ce.pairs.size());
  // w(x, v_c) for x = sum_k x_k v_k contributes x_k * w(v_k, v_c).
  auto add_term = [&](size_t row, const Vector& x, size_t c, const Scalar& sign) {
    for (size_t k = 0; k < m; ++k) {
      if (x[k].is_zero() || k == c) continue;
      if (k < c) ce.d2(row, ce.pair_index(k, c)) += sign * x[k];
      else ce.d2(row, ce.pair_index(c, k)) -= sign * x[k];
    }
  };
  const Scalar one = Scalar::one(f);
  for (size_t t = 0; t < ce.triples.size(); ++t) {
    auto [u, v, w] = ce.triples[t];
    add_term(t, g.bracket_basis(u, v), w, -one);
    add_term(t, g.bracket_basis(u, w), v, one);
    add_term(t, g.bracket_basis(v, w), u, -one);
  }
  if (ce.triples.size() > 0 && ce.pairs.size() > 0 && !(ce.d2 * ce.d1).is_zero())
    throw std::logic_error("d2 o d1 != 0");
  return ce;
}

size_t h2_dimension(const LieAlgebra& g) {
  CEComplex ce = ce_differentials(g);
  size_t ker_d2 = ce.pairs.size() - (ce.triples.empty() ? 0 : rank(ce.d2));
  size_t rank_d1 = ce.pairs.empty() ? 0 : rank(ce.d1);
  return ker_d2 - rank_d1;
}

H2Basis h2_basis(const LieAlgebra& g) {
  CEComplex ce = ce_differentials(g);
  const Field& f = g.field();
  const size_t np = ce.pairs.size();
  H2Basis out;
  out.coboundaries = np == 0 ? Subspace::zero(f, 0) : image(ce.d1);
  Subspace cocycles =
      ce.triples.empty() ? Subspace::full(f, np) : kernel_basis(ce.d2);
  Subspace acc = out.coboundaries;
  for (const auto& v : cocycles.basis()) {
    if (acc.contains(v)) continue;
    out.classes.push_back(v);
    acc = sum(acc, Subspace::span(f, np, {v}));
  }
  return out;
}

Vector H2Basis::coordinates(const Vector& cocycle) const {
  std::vector<Vector> cols = coboundaries.basis();
  const size_t nb = cols.size();
  for (const auto& c : classes) cols.push_back(c);
  const Field& f = coboundaries.field();
  if (cols.empty()) return {};
  auto sol = solve(Matrix::from_columns(f, cocycle.size(), cols), cocycle);
  if (!sol) throw std::invalid_argument("2-cochain is not a cocycle");
  return Vector(sol->begin() + nb, sol->end());
}

namespace {

void require_pair(const Representation& r, const Representation& rp) {
  if (!r.is_standard() || !rp.is_standard())
    throw std::invalid_argument("gluing needs flag representations in standard coordinates");
  if (r.n() != rp.n()) throw DimensionMismatch("gluing needs representations of equal dimension");
  if (r.field() != rp.field() || !r.algebra().same_structure(rp.algebra()))
    throw std::invalid_argument("gluing needs representations of the same algebra");
}

}  // namespace

bool overlap_compatible(const Representation& r, const Representation& rp) {
  require_pair(r, rp);
  const size_t n = r.n();
  for (size_t a = 0; a < r.algebra().dim(); ++a)
    if (r.matrix(a).block(1, 1, n - 1, n - 1) != rp.matrix(a).block(0, 0, n - 1, n - 1))
      return false;
  return true;
}

Cochain2 gluing_cochain(const Representation& r, const Representation& rp) {
  if (!overlap_compatible(r, rp)) throw std::invalid_argument("incompatible pair: overlaps differ");
  const LieAlgebra& g = r.algebra();
  const size_t n = r.n(), m = g.dim();
  FullEntries er = FullEntries::of(r), ep = FullEntries::of(rp);
  Cochain2 c{m, zero_vector(r.field(), m * (m - 1) / 2)};
  for (size_t k = 2; k <= n; ++k) {
    Vector w = wedge(er.lam(1, k), ep.lam(k - 1, n));
    for (size_t p = 0; p < w.size(); ++p) c.values[p] += w[p];
  }
  CEComplex ce = ce_differentials(g);
  if (!ce.triples.empty() && !is_zero(ce.d2 * c.values))
    throw std::logic_error("gluing cochain is not a cocycle");
  return c;
}

ObstructionClass gluing_obstruction(const Representation& r, const Representation& rp) {
  Cochain2 c = gluing_cochain(r, rp);
  ObstructionClass out;
  H2Basis basis = h2_basis(r.algebra());
  out.h2_basis = basis.classes;
  out.coords = basis.coordinates(c.values);
  out.vanishes = is_zero(out.coords);
  bool solvable = c.values.empty() || solve(bracket_form_matrix(r.algebra()), c.values).has_value();
  if (solvable != out.vanishes)
    throw std::logic_error("obstruction class disagrees with the direct corner solve");
  return out;
}

GlueResult glue(const Representation& r, const Representation& rp) {
  GlueResult out;
  out.obstruction = gluing_obstruction(r, rp);
  out.ext1_basis = r.algebra().abelian_dual().basis();
  if (!out.obstruction.vanishes) return out;
  const LieAlgebra& g = r.algebra();
  const Field& f = r.field();
  const size_t n = r.n(), m = g.dim();
  Cochain2 c = gluing_cochain(r, rp);
  Vector corner = c.values.empty() ? zero_vector(f, m) : *solve(bracket_form_matrix(g), c.values);
  std::vector<Matrix> mats;
  for (size_t a = 0; a < m; ++a) {
    Matrix s(f, n + 1, n + 1);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        s(i, j) = r.matrix(a)(i, j);
        s(i + 1, j + 1) = rp.matrix(a)(i, j);
      }
    s(0, n) = corner[a];
    mats.push_back(std::move(s));
  }
  Representation s(r.algebra_ptr(), std::move(mats));
  for (size_t a = 0; a < m; ++a)
    if (s.matrix(a).block(0, 0, n, n) != r.matrix(a) || s.matrix(a).block(1, 1, n, n) != rp.matrix(a))
      throw std::logic_error("glued representation does not restrict to its inputs");
  out.glued = std::move(s);
  return out;
}

}  // namespace nilrep
