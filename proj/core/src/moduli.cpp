#include "nilrep/moduli.hpp"

#include <sstream>
#include <thread>

#include "nilrep/automorphisms.hpp"
#include "nilrep/fixtures.hpp"
#include "nilrep/gluing.hpp"

namespace nilrep {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

Rational SmallScalarSource::rational(bool integral) {
  std::uniform_int_distribution<int> num(-10, 10), den(1, 10);
  Rational q(num(rng_), integral ? 1 : den(rng_));
  q.canonicalize();
  return q;
}

Scalar SmallScalarSource::scalar(const Field& f, bool integral) {
  std::vector<Rational> c;
  for (int k = 0; k < f.degree(); ++k) c.push_back(rational(integral));
  return Scalar(f, std::move(c));
}

namespace {

Vector random_combination(SmallScalarSource& src, const Field& f, const std::vector<Vector>& basis,
                          size_t len) {
  Vector v = zero_vector(f, len);
  for (const auto& b : basis) v = add(v, scale(src.scalar(f), b));
  return v;
}

// Keeps each basis vector with probability 1/2, with a coefficient in {-2, -1, 1, 2}.
// Reaches the special points that dense combinations almost never hit.
Vector sparse_combination(SmallScalarSource& src, const Field& f, const std::vector<Vector>& basis,
                          size_t len) {
  std::uniform_int_distribution<int> coin(0, 1), coef(1, 2);
  Vector v = zero_vector(f, len);
  for (const auto& b : basis) {
    if (coin(src.engine()) == 0) continue;
    int c = coef(src.engine()) * (coin(src.engine()) == 0 ? -1 : 1);
    v = add(v, scale(Scalar(f, Rational(c)), b));
  }
  return v;
}

Vector slice_functional(const Vector& mu, size_t k, size_t m) {
  return Vector(mu.begin() + k * m, mu.begin() + (k + 1) * m);
}

// Homogeneous system for a new last column; see column_extension_space.
Matrix column_system(const Representation& r) {
  const LieAlgebra& g = r.algebra();
  const size_t n = r.n(), m = g.dim();
  const Field& f = r.field();
  Matrix sys(f, m * (m - 1) / 2 * n, n * m);
  size_t row = 0;
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a + 1; b < m; ++b)
      for (size_t i = 0; i < n; ++i, ++row) {
        const Vector& c = g.bracket_basis(a, b);
        for (size_t x = 0; x < m; ++x)
          if (!c[x].is_zero()) sys(row, i * m + x) += c[x];
        for (size_t k = 0; k < n; ++k) {
          if (!r.matrix(a)(i, k).is_zero()) sys(row, k * m + b) -= r.matrix(a)(i, k);
          if (!r.matrix(b)(i, k).is_zero()) sys(row, k * m + a) += r.matrix(b)(i, k);
        }
      }
  return sys;
}

Subspace bracket_image(const LieAlgebra& g) {
  const size_t np = g.dim() * (g.dim() - 1) / 2;
  if (np == 0) return Subspace::zero(g.field(), 0);
  return image(bracket_form_matrix(g));
}

size_t pair_idx(size_t p, size_t q, size_t k) { return p * k - p * (p + 1) / 2 + (q - p - 1); }

// x_{pq} with x_{qp} = -x_{pq}.
Scalar bivector_coeff(const Vector& x, size_t p, size_t q, size_t k) {
  if (p == q) return Scalar::zero(x.at(0).field());
  return p < q ? x[pair_idx(p, q, k)] : -x[pair_idx(q, p, k)];
}

// Writes a nonzero decomposable bivector (coordinates over alpha) as lambda1 ^ lambda2.
std::pair<Vector, Vector> decompose_bivector(const Vector& x, const std::vector<Vector>& alpha) {
  const size_t k = alpha.size();
  const Field& f = x.at(0).field();
  const size_t m = alpha.at(0).size();
  for (size_t p = 0; p < k; ++p)
    for (size_t q = p + 1; q < k; ++q) {
      Scalar xpq = x[pair_idx(p, q, k)];
      if (xpq.is_zero()) continue;
      Vector bp = zero_vector(f, m), bq = zero_vector(f, m);
      for (size_t s = 0; s < k; ++s) {
        bp = add(bp, scale(bivector_coeff(x, p, s, k), alpha[s]));
        bq = add(bq, scale(bivector_coeff(x, q, s, k), alpha[s]));
      }
      return {scale(xpq.inverse(), bp), bq};
    }
  throw std::invalid_argument("cannot decompose the zero bivector");
}

std::optional<Representation> three_dim_from(const AlgebraPtr& g, const Vector& l1, const Vector& l2) {
  const LieAlgebra& alg = *g;
  auto corner = solve(bracket_form_matrix(alg), wedge(l1, l2));
  if (!corner) return std::nullopt;
  const Field& f = alg.field();
  std::vector<Matrix> mats;
  for (size_t a = 0; a < alg.dim(); ++a) {
    Matrix x(f, 3, 3);
    x(0, 1) = l1[a];
    x(1, 2) = l2[a];
    x(0, 2) = (*corner)[a];
    mats.push_back(std::move(x));
  }
  return Representation(g, std::move(mats));
}

bool is_perfect_square(const Rational& q, Rational& root) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

// Bivector coordinates of sum_t y_t s_t.
Vector combine(const std::vector<Vector>& s, const Vector& y) {
  Vector x = zero_vector(y.at(0).field(), s.at(0).size());
  for (size_t t = 0; t < s.size(); ++t)
    if (!y[t].is_zero()) x = add(x, scale(y[t], promote(s[t], y[t].field())));
  return x;
}

std::optional<Representation> witness_from_bivector(const AlgebraPtr& g, const Vector& x,
                                                    const std::vector<Vector>& alpha) {
  const Field& f = x.at(0).field();
  AlgebraPtr gf = f == g->field() ? g : std::make_shared<const LieAlgebra>(g->base_change(f));
  std::vector<Vector> af;
  for (const auto& a : alpha) af.push_back(promote(a, f));
  auto [l1, l2] = decompose_bivector(x, af);
  return three_dim_from(gf, l1, l2);
}

}  // namespace

Subspace column_extension_space(const Representation& r) {
  if (r.algebra().dim() < 2) return Subspace::full(r.field(), r.n() * r.algebra().dim());
  return kernel_basis(column_system(r));
}

Representation extend_by_column(const Representation& r, const Vector& mu) {
  const size_t n = r.n(), m = r.algebra().dim();
  if (mu.size() != n * m) throw DimensionMismatch("column vector has the wrong length");
  std::vector<Matrix> mats;
  for (size_t a = 0; a < m; ++a) {
    Matrix x(r.field(), n + 1, n + 1);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) x(i, j) = r.matrix(a)(i, j);
      x(i, n) = mu[i * m + a];
    }
    mats.push_back(std::move(x));
  }
  return Representation(r.algebra_ptr(), std::move(mats));
}

std::optional<Vector> constrained_column(const Representation& r,
                                         const std::vector<std::pair<size_t, Vector>>& fixed) {
  const size_t n = r.n(), m = r.algebra().dim();
  const Field& f = r.field();
  std::vector<bool> is_fixed(n, false);
  Vector known = zero_vector(f, n * m);
  for (const auto& [k, lam] : fixed) {
    if (k < 1 || k > n || lam.size() != m) throw std::out_of_range("bad constrained column entry");
    is_fixed[k - 1] = true;
    for (size_t a = 0; a < m; ++a) known[(k - 1) * m + a] = lam[a];
  }
  if (m < 2) return known;
  Matrix sys = column_system(r);
  std::vector<size_t> free_cols;
  for (size_t k = 0; k < n; ++k)
    if (!is_fixed[k])
      for (size_t a = 0; a < m; ++a) free_cols.push_back(k * m + a);
  Vector rhs = scale(-Scalar::one(f), sys * known);
  Matrix a(f, sys.rows(), free_cols.size());
  for (size_t i = 0; i < sys.rows(); ++i)
    for (size_t j = 0; j < free_cols.size(); ++j) a(i, j) = sys(i, free_cols[j]);
  std::optional<Vector> y;
  if (free_cols.empty()) {
    if (!is_zero(rhs)) return std::nullopt;
    y = Vector{};
  } else {
    y = solve(a, rhs);
  }
  if (!y) return std::nullopt;
  Vector mu = known;
  for (size_t j = 0; j < free_cols.size(); ++j) mu[free_cols[j]] = (*y)[j];
  return mu;
}

Representation trivial_rep(const AlgebraPtr& g) {
  return Representation(g, std::vector<Matrix>(g->dim(), Matrix(g->field(), 1, 1)));
}

Wide3Decision wide3_exists(const AlgebraPtr& gp, const SearchOptions& opts) {
  const LieAlgebra& g = *gp;
  const Field& f = g.field();
  Wide3Decision d;
  std::ostringstream trace;
  std::vector<Vector> alpha = g.abelian_dual().basis();
  const size_t k = alpha.size(), m = g.dim();
  d.dim_abelian = k;
  const size_t npk = k * (k - 1) / 2, npg = m * (m - 1) / 2;
  Subspace s_space = Subspace::zero(f, npk);
  if (npk > 0) {
    std::vector<Vector> cols;
    for (size_t p = 0; p < k; ++p)
      for (size_t q = p + 1; q < k; ++q) cols.push_back(wedge(alpha[p], alpha[q]));
    Matrix w = Matrix::from_columns(f, npg, cols);
    s_space = preimage(w, bracket_image(g));
  }
  std::vector<Vector> s = s_space.basis();
  d.dim_s = s.size();
  trace << "dim g^ab = " << k << ", dim S = " << d.dim_s;

  // Restricted Plucker quadrics as symmetric matrices in the S coordinates.
  std::vector<Matrix> quadrics;
  const Scalar half(f, Rational(1, 2));
  for (size_t p = 0; p < k; ++p)
    for (size_t q = p + 1; q < k; ++q)
      for (size_t r = q + 1; r < k; ++r)
        for (size_t t = r + 1; t < k; ++t) {
          Matrix qm(f, s.size(), s.size());
          auto B = [&](const Vector& x, const Vector& y) {
            auto X = [&](const Vector& v, size_t i, size_t j) { return v[pair_idx(i, j, k)]; };
            return half * (X(x, p, q) * X(y, r, t) + X(y, p, q) * X(x, r, t)) -
                   half * (X(x, p, r) * X(y, q, t) + X(y, p, r) * X(x, q, t)) +
                   half * (X(x, p, t) * X(y, q, r) + X(y, p, t) * X(x, q, r));
          };
          for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = 0; j < s.size(); ++j) qm(i, j) = B(s[i], s[j]);
          if (!qm.is_zero()) quadrics.push_back(std::move(qm));
        }
  {
    std::vector<Vector> flat;
    for (const auto& q : quadrics) {
      Vector v;
      for (size_t i = 0; i < q.rows(); ++i)
        for (size_t j = 0; j < q.cols(); ++j) v.push_back(q(i, j));
      flat.push_back(std::move(v));
    }
    d.quadric_rank = flat.empty() ? 0 : rank(Matrix::from_rows(f, flat[0].size(), flat));
  }
  trace << ", quadric rank = " << d.quadric_rank;

  auto finish_yes = [&](char c, const Vector& x) {
    d.verdict = Verdict::yes;
    d.decided_case = c;
    d.witness = witness_from_bivector(gp, x, alpha);
  };

  if (k <= 3 || d.quadric_rank == 0) {
    d.decided_case = k <= 3 ? 'a' : 'b';
    if (s.empty()) {
      d.verdict = Verdict::no;
    } else {
      finish_yes(d.decided_case, s[0]);
    }
  } else if (s.size() == 1) {
    d.decided_case = 'c';
    bool decomposable = true;
    for (const auto& q : quadrics)
      if (!q(0, 0).is_zero()) decomposable = false;
    if (decomposable) finish_yes('c', s[0]);
    else d.verdict = Verdict::no;
  } else if (d.quadric_rank == 1) {
    d.decided_case = 'd';
    d.verdict = Verdict::yes;
    const Matrix& q = quadrics.front();
    std::optional<Vector> x;
    for (size_t t = 0; t < s.size() && !x; ++t)
      if (q(t, t).is_zero()) x = s[t];
    if (!x && f.is_rational()) {
      // Zero of a y0^2 + b y0 + c with y = y0 e0 + e1.
      Rational a = q(0, 0).rational(), b = 2 * q(0, 1).rational(), c = q(1, 1).rational();
      Rational disc = b * b - 4 * a * c, root;
      Field ff = f;
      Scalar sq;
      if (is_perfect_square(disc, root)) {
        sq = Scalar(f, root);
      } else {
        ff = Field::extension({-disc, Rational(0), Rational(1)}, "w");
        sq = Scalar::generator(ff);
        trace << ", witness over " << ff.describe();
      }
      Scalar y0 = (Scalar(ff, -b) + sq) / Scalar(ff, 2 * a);
      Vector y = zero_vector(ff, s.size());
      y[0] = y0;
      y[1] = Scalar::one(ff);
      x = combine(s, y);
    }
    if (x) d.witness = witness_from_bivector(gp, *x, alpha);
  } else {
    d.decided_case = 'e';
    SmallScalarSource src(opts.seed);
    Subspace im = bracket_image(g);
    for (size_t it = 0; it < opts.budget && d.verdict != Verdict::yes; ++it) {
      Vector l1 = random_combination(src, f, alpha, m);
      if (is_zero(l1)) continue;
      std::vector<Vector> cols;
      for (const auto& a : alpha) cols.push_back(wedge(l1, a));
      Subspace l = preimage(Matrix::from_columns(f, npg, cols), im);
      for (const auto& y : l.basis()) {
        Vector l2 = zero_vector(f, m);
        for (size_t t = 0; t < k; ++t) l2 = add(l2, scale(y[t], alpha[t]));
        if (is_zero(wedge(l1, l2))) continue;
        d.verdict = Verdict::yes;
        d.witness = three_dim_from(gp, l1, l2);
        trace << ", witness found by search at sample " << it;
        break;
      }
    }
    if (d.verdict != Verdict::yes) trace << ", search budget exhausted";
  }
  if (d.witness && !is_wide(*d.witness)) throw std::logic_error("wide3 witness is not wide");
  d.trace = trace.str();
  return d;
}

std::optional<Representation> search_wide(const AlgebraPtr& g, size_t target_dim,
                                          const SearchOptions& opts, std::uint64_t seed) {
  std::vector<AlgebraPtr> algebras{g};
  for (const auto& f : opts.extensions)
    if (f != g->field()) algebras.push_back(std::make_shared<const LieAlgebra>(g->base_change(f)));
  SmallScalarSource src(seed);
  std::optional<Representation> best;
  for (size_t attempt = 0; attempt < opts.budget; ++attempt) {
    const AlgebraPtr& ga = algebras[attempt % algebras.size()];
    const Field& f = ga->field();
    const size_t m = ga->dim();
    Representation r = trivial_rep(ga);
    std::vector<Vector> points;
    while (r.n() < target_dim) {
      std::vector<Vector> basis = column_extension_space(r).basis();
      if (basis.empty()) break;
      // Among fresh candidates keep the one leaving the largest extension space.
      std::optional<Vector> pick, pick_point;
      size_t pick_room = 0;
      const bool last_step = r.n() + 1 == target_dim;
      for (int tries = 0; tries < 12; ++tries) {
        Vector mu = (attempt / algebras.size()) % 2 == 0 ? sparse_combination(src, f, basis, r.n() * m)
                                                         : random_combination(src, f, basis, r.n() * m);
        Vector last = slice_functional(mu, r.n() - 1, m);
        if (is_zero(last)) continue;
        Vector p = normalize_point(last);
        bool fresh = true;
        for (const auto& q : points)
          if (q == p) fresh = false;
        if (!fresh) continue;
        size_t room = last_step ? 0 : column_extension_space(extend_by_column(r, mu)).dim();
        if (!pick || room > pick_room) {
          pick = std::move(mu);
          pick_point = std::move(p);
          pick_room = room;
        }
        if (last_step) break;
      }
      bool extended = pick.has_value();
      if (extended) {
        r = extend_by_column(r, *pick);
        points.push_back(std::move(*pick_point));
      }
      if (!extended) break;
    }
    if (r.n() >= 2 && (!best || r.n() > best->n())) best = r;
    if (best && best->n() >= target_dim) break;
  }
  if (best && !is_wide(*best)) throw std::logic_error("search produced a non-wide representation");
  return best;
}

WidthReport width_bounds(const AlgebraPtr& g, const WidthOptions& opts) {
  WidthReport rep;
  rep.seed = opts.seed;
  rep.upper = g->depth();
  if (opts.assume_width_at_most) rep.upper = std::min(rep.upper, *opts.assume_width_at_most);
  std::vector<Vector> alpha = g->abelian_dual().basis();
  if (!alpha.empty()) {
    Vector mu = alpha[0];
    rep.witness = extend_by_column(trivial_rep(g), mu);
    rep.lower = 1;
    rep.method = "two-dimensional";
  }
  std::vector<Representation> candidates = opts.hints;
  for (const auto& name : fixture_names()) {
    Fixture fx = make_fixture(name);
    if (!fx.algebra->same_structure(*g)) continue;
    for (auto& [rep_name, r] : fx.reps) candidates.push_back(std::move(r));
  }
  for (size_t c = 0; c < candidates.size(); ++c) {
    const Representation& h = candidates[c];
    if (!h.algebra().same_structure(*g) || !h.is_flag() || !is_wide(h)) continue;
    if (h.n() - 1 > rep.lower) {
      rep.lower = h.n() - 1;
      rep.witness = standardize(h).rep;
      rep.method = c < opts.hints.size() ? "hint" : "fixture";
    }
  }
  if (rep.lower < rep.upper && rep.lower < 2) {
    rep.wide3 = wide3_exists(g, opts);
    if (rep.wide3->verdict == Verdict::no) {
      rep.upper = std::min<size_t>(rep.upper, 1);
      rep.method = "wide3";
    } else if (rep.wide3->verdict == Verdict::yes && rep.wide3->witness) {
      rep.lower = 2;
      rep.witness = rep.wide3->witness;
      rep.method = "wide3";
    }
  }
  if (rep.lower < rep.upper) {
    const size_t jobs = std::max<size_t>(1, opts.jobs);
    std::vector<std::optional<Representation>> found(jobs);
    auto run = [&](size_t j) { found[j] = search_wide(g, rep.upper + 1, opts, opts.seed + j); };
    if (jobs == 1) {
      run(0);
    } else {
      std::vector<std::thread> threads;
      for (size_t j = 0; j < jobs; ++j) threads.emplace_back(run, j);
      for (auto& t : threads) t.join();
    }
    for (size_t j = 0; j < jobs; ++j) {
      if (!found[j] || found[j]->n() - 1 <= rep.lower) continue;
      rep.lower = found[j]->n() - 1;
      rep.witness = found[j];
      rep.method = "search";
      rep.seed = opts.seed + j;
    }
  }
  if (rep.witness && (!is_wide(*rep.witness) || rep.witness->n() != rep.lower + 1))
    throw std::logic_error("width witness does not certify the lower bound");
  rep.exact = rep.lower == rep.upper;
  return rep;
}

namespace {

// Standard-coordinates flag representation with the given consecutive entries;
// the remaining entries are the pivot solutions of the column systems.
std::optional<Representation> chain_from_consecutive(const AlgebraPtr& g,
                                                     const std::vector<Vector>& consecutive) {
  Representation r = trivial_rep(g);
  for (const auto& lam : consecutive) {
    auto mu = constrained_column(r, {{r.n(), lam}});
    if (!mu) return std::nullopt;
    r = extend_by_column(r, *mu);
  }
  return r;
}

}  // namespace

AInvariantVerdict a_invariant(const AlgebraPtr& g, size_t n, const WidthOptions& opts) {
  if (n < 2 || n > 4) throw std::invalid_argument("a_invariant is available for n in {2, 3, 4}");
  std::vector<Vector> alpha = g->abelian_dual().basis();
  if (alpha.empty()) throw std::invalid_argument("a_invariant needs dim g^ab >= 1");
  AInvariantVerdict v;
  v.n = n;
  auto set_exact = [&](size_t value, std::string method, std::optional<Representation> cert) {
    v.lo = v.hi = value;
    v.method = std::move(method);
    v.certificate = std::move(cert);
  };
  if (n == 2) {
    set_exact(2, "closed-form", chain_from_consecutive(g, {alpha[0]}));
    return v;
  }
  if (n == 3) {
    Wide3Decision d = wide3_exists(g, opts);
    v.note = d.trace;
    if (d.verdict == Verdict::yes) set_exact(2, "closed-form", d.witness);
    else if (d.verdict == Verdict::no) set_exact(3, "closed-form", chain_from_consecutive(g, {alpha[0], alpha[0]}));
    else {
      v.lo = 2;
      v.hi = 3;
      v.method = "search";
    }
    return v;
  }
  AInvariantVerdict a3 = a_invariant(g, 3, opts);
  if (!a3.exact()) {
    v.lo = 2;
    v.hi = 4;
    v.method = "search";
    v.note = "A(g,3) undetermined";
    return v;
  }
  if (a3.lo == 3) {
    set_exact(4, "closed-form", chain_from_consecutive(g, {alpha[0], alpha[0], alpha[0]}));
    return v;
  }
  WidthReport w = width_bounds(g, opts);
  if (w.lower >= 3) {
    set_exact(2, "width-based", subquotient(*w.witness, 0, 4));
    return v;
  }
  if (w.upper > 2) {
    v.lo = 2;
    v.hi = 3;
    v.method = "search";
    v.note = "width is 2 or more; no wide 4-dimensional witness found";
    return v;
  }
  // Width exactly 2: nondegenerate 4-dim reps have lambda3 proportional to
  // lambda1, and after a torus rescaling lambda3 = lambda1.
  const LieAlgebra& alg = *g;
  const Field& f = alg.field();
  const size_t m = alg.dim();
  if (alpha.size() == 2) {
    Matrix bf = bracket_form_matrix(alg);
    auto l40 = solve(bf, wedge(alpha[0], alpha[1]));
    if (!l40) throw std::logic_error("alpha1 ^ alpha2 must factor through the bracket when A(g,3) = 2");
    std::vector<Vector> cols;
    for (const auto& a : alpha) cols.push_back(wedge(a, *l40));
    Subspace l = preimage(Matrix::from_columns(f, m * (m - 1) / 2, cols), image(bf));
    if (l.dim() == 0) {
      v.exists = false;
      v.method = "exact-decision";
      v.note = "no nondegenerate 4-dimensional representation exists: lambda1 ^ lambda4 never "
               "factors through the bracket";
      return v;
    }
    Vector y = l.basis()[0];
    Vector l1 = add(scale(y[0], alpha[0]), scale(y[1], alpha[1]));
    Vector l2 = y[0].is_zero() ? alpha[0] : alpha[1];
    auto r4 = chain_from_consecutive(g, {l1, l2, l1});
    if (!r4) throw std::logic_error("decided 4-dimensional representation could not be built");
    set_exact(3, "exact-decision", r4);
    return v;
  }
  SmallScalarSource src(opts.seed);
  for (size_t it = 0; it < opts.budget; ++it) {
    auto r3 = search_wide(g, 3, SearchOptions{opts.seed + it, 4, {}, 1}, opts.seed + it);
    if (!r3 || r3->n() < 3) continue;
    Vector l1 = FullEntries::of(*r3).lam(1, 2);
    auto mu = constrained_column(*r3, {{3, l1}});
    if (!mu) continue;
    Representation r4 = extend_by_column(*r3, *mu);
    if (!r4.is_flag()) continue;
    set_exact(3, "search", r4);
    return v;
  }
  v.lo = 2;
  v.hi = 4;
  v.method = "search";
  v.note = "width 2; no 4-dimensional representation with nondegenerate subquotients found";
  return v;
}

NondegeneracyReport is_nondegenerate(const Representation& r0, const WidthOptions& opts) {
  if (!r0.is_flag()) throw NotFlag("is_nondegenerate requires a flag representation");
  const Representation r = r0.is_standard() ? r0 : standardize(r0).rep;
  NondegeneracyReport rep;
  rep.aut_dimension = aut_dimension(r);
  const size_t n = r.n();
  if (n <= 2) {
    rep.verdict = Verdict::yes;
    rep.reason = n == 1 ? "one-dimensional" : "every flag representation of dimension 2";
    return rep;
  }
  if (is_wide(r)) {
    rep.verdict = Verdict::yes;
    rep.reason = "wide; it certifies width >= n-1";
    return rep;
  }
  if (n <= 4) {
    NondegeneracyReport bottom = is_nondegenerate(subquotient(r, 0, n - 1), opts);
    NondegeneracyReport top = is_nondegenerate(subquotient(r, 1, n), opts);
    if (bottom.verdict == Verdict::no || top.verdict == Verdict::no) {
      rep.verdict = Verdict::no;
      rep.reason = std::string(bottom.verdict == Verdict::no ? "r_{n-1}" : "r^1") +
                   " is degenerate (aut dimension " +
                   std::to_string(bottom.verdict == Verdict::no ? bottom.aut_dimension
                                                                : top.aut_dimension) +
                   ")";
      return rep;
    }
    if (bottom.verdict == Verdict::yes && top.verdict == Verdict::yes) {
      AInvariantVerdict a = a_invariant(r.algebra_ptr(), n, opts);
      if (a.exact()) {
        rep.verdict = rep.aut_dimension == a.lo ? Verdict::yes : Verdict::no;
        rep.reason = "aut dimension " + std::to_string(rep.aut_dimension) +
                     (rep.verdict == Verdict::yes ? " = " : " != ") + "A(g," + std::to_string(n) +
                     ") = " + std::to_string(a.lo);
        return rep;
      }
    }
  }
  WidthReport w = width_bounds(r.algebra_ptr(), opts);
  if (n <= w.lower + 1) {
    rep.verdict = Verdict::no;
    rep.reason = "not wide and n <= certified width + 1";
    return rep;
  }
  rep.verdict = Verdict::unknown;
  rep.reason = "outside the decidable range";
  return rep;
}

bool iso_class_dim2(const Representation& r, const Representation& rp) {
  if (r.n() != 2 || rp.n() != 2) throw DimensionMismatch("iso_class_dim2 needs 2-dimensional representations");
  if (!r.is_flag() || !rp.is_flag()) throw std::invalid_argument("iso_class_dim2 needs nonzero representations");
  return constellation(r) == constellation(rp);
}

}  // namespace nilrep
