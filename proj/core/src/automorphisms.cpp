#include "nilrep/automorphisms.hpp"

namespace nilrep {

InfAut infinitesimal_automorphisms(const Representation& r0) {
  if (!r0.is_flag()) throw NotFlag("infinitesimal automorphisms require a flag representation");
  const Representation r = r0.is_standard() ? r0 : standardize(r0).rep;
  const Field& f = r.field();
  const size_t n = r.n();
  std::vector<std::pair<size_t, size_t>> unknowns;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) unknowns.emplace_back(i, j);
  const size_t m = r.algebra().dim();
  // Row (a, p, q) holds the (p, q) entry of [phi, rho_a] as a linear form in phi.
  Matrix sys(f, m * n * n, unknowns.size());
  for (size_t a = 0; a < m; ++a) {
    const Matrix& x = r.matrix(a);
    for (size_t u = 0; u < unknowns.size(); ++u) {
      auto [i, j] = unknowns[u];
      // phi = E_ij: (E_ij x)_{pq} = delta_pi x_jq ; (x E_ij)_{pq} = x_pi delta_jq.
      for (size_t q = 0; q < n; ++q)
        if (!x(j, q).is_zero()) sys(a * n * n + i * n + q, u) += x(j, q);
      for (size_t p = 0; p < n; ++p)
        if (!x(p, i).is_zero()) sys(a * n * n + p * n + j, u) -= x(p, i);
    }
  }
  InfAut out;
  for (const auto& v : kernel_basis(sys).basis()) {
    Matrix phi(f, n, n);
    for (size_t u = 0; u < unknowns.size(); ++u) phi(unknowns[u].first, unknowns[u].second) = v[u];
    out.basis.push_back(std::move(phi));
  }
  return out;
}

size_t aut_dimension(const Representation& r) { return infinitesimal_automorphisms(r).dim() + 1; }

bool is_nilpotent_matrix(const Matrix& m) {
  if (!m.is_square()) return false;
  Matrix p = Matrix::identity(m.field(), m.rows());
  for (size_t k = 0; k < m.rows(); ++k) p = p * m;
  return p.is_zero();
}

Matrix exp_nilpotent(const Matrix& n) {
  if (!is_nilpotent_matrix(n)) throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
  const Field& f = n.field();
  Matrix result = Matrix::identity(f, n.rows());
  Matrix term = Matrix::identity(f, n.rows());
  for (size_t k = 1; k < n.rows(); ++k) {
    term = Scalar(f, Rational(1, k)) * (term * n);
    if (term.is_zero()) break;
    result = result + term;
  }
  return result;
}

Matrix log_unipotent(const Matrix& u) {
  if (!u.is_square()) throw std::invalid_argument("log_unipotent: matrix is not square");
  const Field& f = u.field();
  Matrix x = u - Matrix::identity(f, u.rows());
  if (!is_nilpotent_matrix(x)) throw std::invalid_argument("log_unipotent: matrix is not unipotent");
  Matrix result(f, u.rows(), u.rows());
  Matrix power = Matrix::identity(f, u.rows());
  for (size_t k = 1; k < u.rows(); ++k) {
    power = power * x;
    if (power.is_zero()) break;
    Rational c(k % 2 == 1 ? 1 : -1, k);
    result = result + Scalar(f, c) * power;
  }
  return result;
}

Representation conjugate_rep(const Matrix& b, const Representation& r) {
  Matrix binv = inverse(b);
  std::vector<Matrix> mats;
  for (const auto& m : r.matrices()) mats.push_back(b * m * binv);
  return Representation(r.algebra_ptr(), std::move(mats));
}

bool is_automorphism(const Matrix& b, const Representation& r) {
  inverse(b);
  for (const auto& m : r.matrices())
    if (b * m != m * b) return false;
  return true;
}

InvariantsReport invariants_equal_zero_eigenspace(const Representation& r,
                                                  const std::vector<Vector>& samples) {
  const Field& f = r.field();
  const size_t n = r.n();
  std::vector<Matrix> parts;
  auto add = [&](const Matrix& x) { parts.push_back(exp_nilpotent(x) - Matrix::identity(f, n)); };
  for (const auto& m : r.matrices()) add(m);
  for (const auto& v : samples) add(r.image(v));
  InvariantsReport rep;
  rep.fixed = parts.empty() ? Subspace::full(f, n) : kernel_basis(vstack(f, n, parts));
  rep.zero_eigen = zero_eigenspace(r);
  return rep;
}

}  // namespace nilrep
