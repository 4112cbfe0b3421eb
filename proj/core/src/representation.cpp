#include "nilrep/representation.hpp"

#include <sstream>

namespace nilrep {

RepCheckReport check_representation(const LieAlgebra& g, const std::vector<Matrix>& matrices) {
  if (matrices.size() != g.dim())
    throw DimensionMismatch("expected " + std::to_string(g.dim()) + " matrices, got " +
                            std::to_string(matrices.size()));
  const size_t n = matrices.empty() ? 0 : matrices[0].rows();
  for (const auto& m : matrices) {
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("matrices must all be n x n");
    if (m.field() != g.field()) throw FieldMismatch("matrix field differs from algebra field");
  }
  RepCheckReport rep;
  for (size_t a = 0; a < g.dim(); ++a)
    for (size_t b = a + 1; b < g.dim(); ++b) {
      Matrix lhs(g.field(), n, n);
      const Vector& c = g.bracket_basis(a, b);
      for (size_t k = 0; k < g.dim(); ++k)
        if (!c[k].is_zero()) lhs = lhs + c[k] * matrices[k];
      if (lhs != commutator(matrices[a], matrices[b])) {
        rep.ok = false;
        rep.violations.emplace_back(a, b);
      }
    }
  return rep;
}

bool Filtration::exhaustive() const {
  return !steps.empty() && steps.back().dim() == steps.back().ambient_dim();
}

std::vector<size_t> Filtration::jumps() const {
  std::vector<size_t> out;
  for (size_t i = 1; i < steps.size(); ++i) out.push_back(steps[i].dim() - steps[i - 1].dim());
  return out;
}

Representation::Representation(AlgebraPtr g, std::vector<Matrix> matrices)
    : g_(std::move(g)), mats_(std::move(matrices)), cache_(std::make_shared<Cache>()) {
  if (!g_) throw std::invalid_argument("representation needs an algebra");
  RepCheckReport rep = check_representation(*g_, mats_);
  n_ = mats_.empty() ? 0 : mats_[0].rows();
  if (!rep.ok) {
    std::ostringstream os;
    os << "matrices do not preserve the bracket at";
    for (auto [a, b] : rep.violations)
      os << " [" << g_->labels()[a] << "," << g_->labels()[b] << "]";
    throw RepresentationError(os.str());
  }
}

Matrix Representation::image(const Vector& x) const {
  if (x.size() != g_->dim()) throw DimensionMismatch("element length differs from dim g");
  Matrix m(field(), n_, n_);
  for (size_t a = 0; a < x.size(); ++a)
    if (!x[a].is_zero()) m = m + x[a] * mats_[a];
  return m;
}

const Filtration& Representation::filtration() const {
  std::call_once(cache_->once, [this] { cache_->filtration = canonical_filtration(*this); });
  return cache_->filtration;
}

bool Representation::is_flag() const {
  if (!is_nilpotent()) return false;
  for (size_t j : filtration().jumps())
    if (j != 1) return false;
  return true;
}

bool Representation::is_standard() const {
  for (const auto& m : mats_)
    if (!m.is_strictly_upper()) return false;
  return is_flag();
}

Representation Representation::base_change(const Field& f) const {
  if (f == field()) return *this;
  auto g = std::make_shared<const LieAlgebra>(g_->base_change(f));
  std::vector<Matrix> m;
  for (const auto& x : mats_) m.push_back(x.promoted(f));
  return Representation(std::move(g), std::move(m));
}

Representation rep_from_generators(AlgebraPtr g, const std::vector<Matrix>& images,
                                   std::vector<size_t> generators) {
  const LieAlgebra& alg = *g;
  const Field& f = alg.field();
  if (generators.empty()) generators = alg.default_generators();
  if (images.size() != generators.size())
    throw DimensionMismatch("expected " + std::to_string(generators.size()) +
                            " generator images, got " + std::to_string(images.size()));
  const size_t n = images.empty() ? 0 : images[0].rows();
  for (const auto& m : images)
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("generator images must be n x n");
  // Grow a spanning set of (element, image) pairs closed under bracketing with generators.
  std::vector<Vector> elems;
  std::vector<Matrix> mats;
  Subspace acc = Subspace::zero(f, alg.dim());
  auto try_add = [&](Vector v, Matrix m) {
    if (acc.contains(v)) return false;
    acc = sum(acc, Subspace::span(f, alg.dim(), {v}));
    elems.push_back(std::move(v));
    mats.push_back(std::move(m));
    return true;
  };
  for (size_t k = 0; k < generators.size(); ++k)
    try_add(unit_vector(f, alg.dim(), generators[k]), images[k].promoted(f));
  for (size_t frontier = 0; frontier < elems.size(); ++frontier)
    for (size_t k = 0; k < generators.size(); ++k) {
      Vector v = alg.bracket(unit_vector(f, alg.dim(), generators[k]), elems[frontier]);
      Matrix m = commutator(mats[k], mats[frontier]);
      try_add(std::move(v), std::move(m));
    }
  if (acc.dim() != alg.dim()) throw RepresentationError("the chosen generators do not generate g");
  Matrix basis = Matrix::from_columns(f, alg.dim(), elems);
  Matrix inv = inverse(basis);
  std::vector<Matrix> out;
  for (size_t a = 0; a < alg.dim(); ++a) {
    Matrix m(f, n, n);
    for (size_t k = 0; k < elems.size(); ++k)
      if (!inv(k, a).is_zero()) m = m + inv(k, a) * mats[k];
    out.push_back(std::move(m));
  }
  return Representation(std::move(g), std::move(out));
}

Subspace zero_eigenspace(const Representation& r) {
  if (r.algebra().dim() == 0) return Subspace::full(r.field(), r.n());
  return kernel_basis(vstack(r.field(), r.n(), r.matrices()));
}

Filtration canonical_filtration(const Representation& r) {
  const Field& f = r.field();
  Filtration fil;
  fil.steps.push_back(Subspace::zero(f, r.n()));
  while (true) {
    const Subspace& cur = fil.steps.back();
    // Fil_{k+1} = {e : rho(v) e in Fil_k for all v}.
    Subspace next = Subspace::full(f, r.n());
    for (const auto& m : r.matrices()) next = intersection(next, preimage(m, cur));
    if (next == cur) break;
    fil.steps.push_back(std::move(next));
  }
  return fil;
}

bool is_nilpotent_rep(const Representation& r) { return r.is_nilpotent(); }
bool is_flag(const Representation& r) { return r.is_flag(); }

Standardized standardize(const Representation& r) {
  if (!r.is_flag()) throw NotFlag("standardize requires a flag representation");
  const Field& f = r.field();
  const auto& steps = r.filtration().steps;
  std::vector<Vector> cols;
  for (size_t k = 1; k < steps.size(); ++k)
    for (const auto& v : steps[k].basis())
      if (!steps[k - 1].contains(v)) {
        cols.push_back(v);
        break;
      }
  Matrix p = Matrix::from_columns(f, r.n(), cols);
  Matrix pinv = inverse(p);
  std::vector<Matrix> mats;
  for (const auto& m : r.matrices()) mats.push_back(pinv * m * p);
  return {Representation(r.algebra_ptr(), std::move(mats)), p};
}

FullEntries::FullEntries(const Field& f, size_t n, size_t m)
    : field_(f), n_(n), m_(m), lam_(n * n, zero_vector(f, m)) {}

size_t FullEntries::index(size_t i, size_t j) const {
  if (i < 1 || j > n_ || i >= j) throw std::out_of_range("full entry index out of range");
  return (i - 1) * n_ + (j - 1);
}

const Vector& FullEntries::lam(size_t i, size_t j) const { return lam_[index(i, j)]; }
Vector& FullEntries::lam(size_t i, size_t j) { return lam_[index(i, j)]; }

FullEntries FullEntries::of(const Representation& r) {
  for (const auto& m : r.matrices())
    if (!m.is_strictly_upper())
      throw std::invalid_argument("full entries need strictly upper triangular matrices");
  FullEntries e(r.field(), r.n(), r.algebra().dim());
  for (size_t i = 1; i <= r.n(); ++i)
    for (size_t j = i + 1; j <= r.n(); ++j)
      for (size_t a = 0; a < e.m_; ++a) e.lam(i, j)[a] = r.matrix(a)(i - 1, j - 1);
  return e;
}

std::vector<Matrix> FullEntries::matrices() const {
  std::vector<Matrix> out(m_, Matrix(field_, n_, n_));
  for (size_t i = 1; i <= n_; ++i)
    for (size_t j = i + 1; j <= n_; ++j)
      for (size_t a = 0; a < m_; ++a) out[a](i - 1, j - 1) = lam(i, j)[a];
  return out;
}

bool FullEntries::operator==(const FullEntries& o) const {
  return n_ == o.n_ && m_ == o.m_ && lam_ == o.lam_;
}

FullEntries full_entries(const Representation& r) { return FullEntries::of(r); }

Representation subquotient(const Representation& r, size_t l, size_t m) {
  if (l > m || m > r.n()) throw std::out_of_range("subquotient indices out of range");
  if (!r.is_standard())
    throw std::invalid_argument("subquotient needs a flag representation in standard coordinates");
  std::vector<Matrix> mats;
  for (const auto& x : r.matrices()) mats.push_back(x.block(l, l, m - l, m - l));
  return Representation(r.algebra_ptr(), std::move(mats));
}

CanonicalEntry canonical_entry(const Representation& r, size_t i, size_t j) {
  if (!r.is_standard())
    throw std::invalid_argument("canonical entries need a flag representation in standard coordinates");
  if (i < 1 || j > r.n() || i >= j) throw std::out_of_range("canonical entry index out of range");
  const LieAlgebra& g = r.algebra();
  const size_t s = j - i;
  const Vector lam = FullEntries::of(r).lam(i, j);
  for (const auto& w : g.series_term(s + 1).basis())
    if (!dot(lam, w).is_zero())
      throw std::logic_error("canonical entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") does not vanish on g^(" + std::to_string(s + 1) + ")");
  CanonicalEntry e{i, j, {}};
  for (const auto& u : g.graded_piece(s).lifts) e.values.push_back(dot(lam, u));
  return e;
}

Vector normalize_point(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return scale(x.inverse(), v);
  throw std::invalid_argument("cannot normalize the zero functional");
}

bool Constellation::distinct() const {
  for (size_t a = 0; a < points.size(); ++a)
    for (size_t b = a + 1; b < points.size(); ++b)
      if (points[a] == points[b]) return false;
  return true;
}

Constellation constellation(const Representation& r) {
  if (!r.is_flag()) throw NotFlag("constellation requires a flag representation");
  const Representation s = r.is_standard() ? r : standardize(r).rep;
  Constellation c;
  for (size_t i = 0; i < s.n(); ++i) {
    if (i + 1 >= s.n()) break;
    Vector lam;
    for (const auto& m : s.matrices()) lam.push_back(m(i, i + 1));
    c.points.push_back(normalize_point(lam));
  }
  return c;
}

bool is_wide(const Representation& r) {
  if (!r.is_flag()) return false;
  return constellation(r).distinct();
}

}  // namespace nilrep
