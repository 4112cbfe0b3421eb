#include "nilrep/canonical_form.hpp"

namespace nilrep {

namespace {

struct Decomposition {
  Scalar alpha;  // coefficient of the first line
  Scalar beta;   // coefficient of the second line
  Vector rest;   // component in the complement
};

Decomposition decompose(const Vector& x, const Vector& a, const Vector& b, const Subspace& e) {
  std::vector<Vector> cols{a, b};
  for (auto& v : e.basis()) cols.push_back(std::move(v));
  const Field& f = x.at(0).field();
  auto sol = solve(Matrix::from_columns(f, x.size(), cols), x);
  if (!sol) throw std::logic_error("slice complement does not span g^vee");
  Vector rest = sub(sub(x, scale((*sol)[0], a)), scale((*sol)[1], b));
  return {(*sol)[0], (*sol)[1], std::move(rest)};
}

Subspace line_plus(const Vector& a, const Subspace& e) {
  return sum(Subspace::span(e.field(), e.ambient_dim(), {a}), e);
}

bool entries_in_slice(const FullEntries& e, const Slice& s) {
  const size_t n = e.n();
  for (size_t j = 3; j <= n; ++j)
    if (!s.E(j - 1).contains(e.lam(1, j))) return false;
  for (size_t i = 2; i <= n; ++i)
    for (size_t j = i + 2; j <= n; ++j)
      if (!line_plus(e.lam(1, 2), s.E(i)).contains(e.lam(i, j))) return false;
  return true;
}

}  // namespace

Slice choose_slice(const Constellation& c, size_t m) {
  Slice s;
  s.n = c.points.size() + 1;
  s.m = m;
  s.points = c;
  if (c.points.empty()) return s;
  const Field& f = c.points[0].at(0).field();
  for (size_t i = 2; i + 1 <= s.n; ++i) {
    const Vector& p1 = c.points[0];
    const Vector& pi = c.points[i - 1];
    RrefResult r = rref(Matrix::from_rows(f, m, {p1, pi}));
    if (r.rank != 2)
      throw DegenerateConstellation("constellation points 1 and " + std::to_string(i) + " coincide");
    std::vector<Vector> comp;
    for (size_t k = 0; k < m; ++k)
      if (k != r.pivots[0] && k != r.pivots[1]) comp.push_back(unit_vector(f, m, k));
    Subspace e = Subspace::span(f, m, comp);
    if (sum(Subspace::span(f, m, {p1, pi}), e).dim() != m)
      throw std::logic_error("slice complement is not a direct complement");
    s.complements.push_back(std::move(e));
  }
  return s;
}

bool slice_valid_for(const Slice& s, const FullEntries& e) {
  if (s.n != e.n()) return false;
  for (size_t i = 2; i + 1 <= s.n; ++i) {
    Subspace d = sum(Subspace::span(e.field(), e.m(), {e.lam(1, 2), e.lam(i, i + 1)}), s.E(i));
    if (d.dim() != e.m() || s.E(i).dim() + 2 != e.m()) return false;
  }
  return true;
}

FullEntries conjugation_action(const Matrix& u, const FullEntries& e) {
  Matrix uinv = inverse(u);
  FullEntries out(e.field(), e.n(), e.m());
  auto mats = e.matrices();
  for (size_t a = 0; a < e.m(); ++a) {
    Matrix c = u * mats[a] * uinv;
    for (size_t i = 1; i <= e.n(); ++i)
      for (size_t j = i + 1; j <= e.n(); ++j) out.lam(i, j)[a] = c(i - 1, j - 1);
  }
  return out;
}

FullEntries conjugation_closed_formula(const Matrix& u, const FullEntries& e) {
  const size_t n = e.n();
  const Field& f = e.field();
  // 1-based helpers over the unipotent u.
  auto U = [&](size_t i, size_t j) { return i == j ? Scalar::one(f) : u(i - 1, j - 1); };
  std::vector<std::vector<Scalar>> w(n + 1, std::vector<Scalar>(n + 1, Scalar::zero(f)));
  for (size_t i = 1; i <= n; ++i) w[i][i] = Scalar::one(f);
  for (size_t d = 1; d < n; ++d)
    for (size_t i = 1; i + d <= n; ++i) {
      size_t j = i + d;
      Scalar acc = -U(i, j);
      for (size_t k = i + 1; k < j; ++k) acc -= U(i, k) * w[k][j];
      w[i][j] = acc;
    }
  FullEntries out(f, n, e.m());
  for (size_t i = 1; i <= n; ++i)
    for (size_t j = i + 1; j <= n; ++j) {
      Vector acc = zero_vector(f, e.m());
      for (size_t k = i; k <= j; ++k)
        for (size_t l = k + 1; l <= j; ++l) {
          Scalar coef = U(i, k) * w[l][j];
          if (!coef.is_zero()) acc = add(acc, scale(coef, e.lam(k, l)));
        }
      out.lam(i, j) = std::move(acc);
    }
  return out;
}

Reduction u_reduce(const FullEntries& e, const Slice& s) {
  if (!slice_valid_for(s, e)) throw std::invalid_argument("slice is not valid for this representation");
  const size_t n = e.n();
  const Field& f = e.field();
  Matrix u = Matrix::identity(f, n);
  const Vector& l12 = e.lam(1, 2);
  for (size_t d = 2; d < n; ++d)
    for (size_t i = 1; i + d <= n; ++i) {
      const size_t j = i + d;
      Vector cur = conjugation_action(u, e).lam(i, j);
      if (i == 1) {
        Decomposition dc = decompose(cur, l12, e.lam(j - 1, j), s.E(j - 1));
        u(1, j - 1) = dc.alpha;        // u_{2,j}
        u(0, j - 2) = -dc.beta;        // u_{1,j-1}
      } else {
        Decomposition dc = decompose(cur, l12, e.lam(i, i + 1), s.E(i));
        u(i, j - 1) = dc.beta;         // u_{i+1,j}
      }
    }
  Reduction out{u, conjugation_action(u, e)};
  if (!entries_in_slice(out.entries, s)) throw std::logic_error("u_reduce left the slice");
  return out;
}

Reduction u_reduce(const Representation& r, const Slice& s) {
  if (!is_wide(r)) throw std::invalid_argument("u_reduce needs a wide representation");
  if (!r.is_standard()) throw std::invalid_argument("u_reduce needs standard coordinates");
  return u_reduce(FullEntries::of(r), s);
}

TorusNormalization torus_normalize(const FullEntries& e) {
  const size_t n = e.n();
  const Field& f = e.field();
  Vector t{Scalar::one(f)};
  for (size_t i = 1; i < n; ++i) {
    const Vector& lam = e.lam(i, i + 1);
    Scalar c = Scalar::zero(f);
    for (const auto& x : lam)
      if (!x.is_zero()) {
        c = x;
        break;
      }
    if (c.is_zero()) throw std::invalid_argument("torus_normalize needs nonzero consecutive entries");
    t.push_back(t.back() * c);
  }
  FullEntries out(f, n, e.m());
  for (size_t i = 1; i <= n; ++i)
    for (size_t j = i + 1; j <= n; ++j) out.lam(i, j) = scale(t[i - 1] / t[j - 1], e.lam(i, j));
  return {std::move(t), std::move(out)};
}

CanonicalForm canonical_form(const Representation& r) {
  if (!is_wide(r)) throw std::invalid_argument("canonical_form needs a wide representation");
  Standardized st = standardize(r);
  FullEntries e = FullEntries::of(st.rep);
  Slice s = choose_slice(constellation(st.rep), r.algebra().dim());
  Reduction red = u_reduce(e, s);
  TorusNormalization tn = torus_normalize(red.entries);
  return {std::move(s), std::move(st.change_of_basis), std::move(red.u), std::move(tn.t),
          std::move(tn.entries)};
}

IsoReport iso_test_wide(const Representation& r, const Representation& rp) {
  if (r.n() != rp.n()) throw DimensionMismatch("iso_test_wide needs equal dimensions");
  if (r.field() != rp.field() || !r.algebra().same_structure(rp.algebra()))
    throw std::invalid_argument("iso_test_wide needs representations of the same algebra");
  if (!is_wide(r) || !is_wide(rp)) throw std::invalid_argument("iso_test_wide needs wide representations");
  IsoReport rep;
  if (constellation(r) != constellation(rp)) {
    rep.constellations_differ = true;
    return rep;
  }
  CanonicalForm a = canonical_form(r), b = canonical_form(rp);
  for (size_t i = 1; i <= r.n(); ++i)
    for (size_t j = i + 1; j <= r.n(); ++j)
      if (a.entries.lam(i, j) != b.entries.lam(i, j)) rep.differing.emplace_back(i, j);
  rep.isomorphic = rep.differing.empty();
  return rep;
}

}  // namespace nilrep
