#include "nilrep/matrix.hpp"

#include <sstream>

namespace nilrep {

Vector zero_vector(const Field& f, size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const Field& f, size_t n, size_t k) {
  Vector v = zero_vector(f, n);
  v.at(k) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= s;
  return r;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  if (a.empty()) throw DimensionMismatch("dot product of empty vectors has no field");
  Scalar acc = Scalar::zero(a[0].field());
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

Vector promote(const Vector& v, const Field& f) {
  Vector r;
  r.reserve(v.size());
  for (const auto& s : v) r.push_back(s.promoted(f));
  return r;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

Matrix::Matrix(const Field& f, size_t rows, size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, size_t n) {
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f, size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const Field& f, size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
    for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows) {
  const Field q = Field::rationals();
  size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(q, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
    for (size_t j = 0; j < cols; ++j) m(i, j) = Scalar(rows[i][j]);
  }
  return m;
}

Vector Matrix::row(size_t i) const {
  return Vector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

Vector Matrix::col(size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Matrix b(field_, nr, nc);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

Matrix Matrix::promoted(const Field& f) const {
  if (f == field_) return *this;
  Matrix m(f, rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].promoted(f);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_strictly_upper() const {
  if (!is_square()) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j <= i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& s : r.a_) s = -s;
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix r = a;
  for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix r = a;
  for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  if (a.field_ != b.field_) throw FieldMismatch("matrix product over different fields");
  Matrix r(a.field_, a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix r = a;
  for (auto& x : r.a_) x *= s;
  return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector r = zero_vector(a.field_, a.rows_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t j = 0; j < a.cols_; ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix vstack(const Field& f, size_t cols, const std::vector<Matrix>& parts) {
  size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw DimensionMismatch("vstack column mismatch");
    rows += p.rows();
  }
  Matrix m(f, rows, cols);
  size_t r = 0;
  for (const auto& p : parts)
    for (size_t i = 0; i < p.rows(); ++i, ++r)
      for (size_t j = 0; j < cols; ++j) m(r, j) = p(i, j);
  return m;
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.reduced;
  const size_t rows = a.rows(), cols = a.cols();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    for (size_t j = c; j < cols; ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar factor = a(i, c);
      for (size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw DivisionByZero("singular matrix");
  return r.reduced.block(0, n, n, n);
}

Subspace Subspace::zero(const Field& f, size_t n) {
  Subspace s;
  s.basis_ = Matrix(f, 0, n);
  return s;
}

Subspace Subspace::full(const Field& f, size_t n) {
  Subspace s;
  s.basis_ = Matrix::identity(f, n);
  for (size_t i = 0; i < n; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(const Field& f, size_t n, const std::vector<Vector>& vectors) {
  RrefResult r = rref(Matrix::from_rows(f, n, vectors));
  Subspace s;
  s.basis_ = r.reduced.block(0, 0, r.rank, n);
  s.pivots_ = std::move(r.pivots);
  return s;
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  for (size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("vector not in ambient space");
  Vector r = v;
  for (size_t i = 0; i < dim(); ++i) {
    Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (size_t j = 0; j < r.size(); ++j)
      if (!basis_(i, j).is_zero()) r[j] -= c * basis_(i, j);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return nilrep::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("subspace ambient mismatch");
  for (size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  // In reduced echelon form the coordinate along row i is the pivot entry.
  Vector c;
  for (size_t i = 0; i < dim(); ++i) c.push_back(v[pivots_[i]]);
  return c;
}

bool Subspace::operator==(const Subspace& o) const { return basis_ == o.basis_; }

Subspace kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  const size_t n = m.cols();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, n);
    v[free] = Scalar::one(f);
    for (size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(f, n, vecs);
}

Subspace image(const Matrix& m) {
  return Subspace::span(m.field(), m.rows(), [&] {
    std::vector<Vector> cols;
    for (size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return cols;
  }());
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length mismatch");
  const Field& f = a.field();
  const size_t n = a.cols();
  Matrix aug(f, a.rows(), n + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;
  Vector x = zero_vector(f, n);
  for (size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, n);
  return x;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace ambient mismatch");
  auto vecs = a.basis();
  for (auto& v : b.basis()) vecs.push_back(std::move(v));
  return Subspace::span(a.field(), a.ambient_dim(), vecs);
}

Subspace annihilator(const Subspace& s) { return kernel_basis(s.basis_matrix()); }

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace ambient mismatch");
  return annihilator(sum(annihilator(a), annihilator(b)));
}

Subspace preimage(const Matrix& m, const Subspace& target) {
  if (m.rows() != target.ambient_dim()) throw DimensionMismatch("preimage target mismatch");
  Subspace ann = annihilator(target);
  if (ann.dim() == 0) return Subspace::full(m.field(), m.cols());
  return kernel_basis(ann.basis_matrix() * m);
}

}  // namespace nilrep
