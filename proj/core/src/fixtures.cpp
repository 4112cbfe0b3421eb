#include "nilrep/fixtures.hpp"

#include <functional>
#include <map>

#include "nilrep/lie_algebra.hpp"

namespace nilrep {

const Representation& Fixture::rep(const std::string& rep_name) const {
  for (const auto& [n, r] : reps)
    if (n == rep_name) return r;
  throw std::invalid_argument("fixture '" + name + "' has no representation '" + rep_name + "'");
}

std::vector<Representation> Fixture::hints() const {
  std::vector<Representation> out;
  for (const auto& [n, r] : reps) out.push_back(r);
  return out;
}

Matrix superdiagonal(const Field& f, const std::vector<Scalar>& entries) {
  Matrix m(f, entries.size() + 1, entries.size() + 1);
  for (size_t i = 0; i < entries.size(); ++i) m(i, i + 1) = entries[i];
  return m;
}

Matrix elementary(const Field& f, size_t n, size_t i, size_t j) {
  Matrix m(f, n, n);
  m(i - 1, j - 1) = Scalar::one(f);
  return m;
}

Representation natural_rep(const AlgebraPtr& g, size_t n) {
  std::vector<Matrix> mats;
  for (size_t i = 1; i <= n; ++i)
    for (size_t j = i + 1; j <= n; ++j) mats.push_back(elementary(g->field(), n, i, j));
  return Representation(g, std::move(mats));
}

namespace {

const Field Q = Field::rationals();

Representation two_dim(const AlgebraPtr& g, const Vector& lam) {
  std::vector<Matrix> mats;
  for (size_t a = 0; a < g->dim(); ++a) {
    Matrix m(g->field(), 2, 2);
    m(0, 1) = lam[a];
    mats.push_back(std::move(m));
  }
  return Representation(g, std::move(mats));
}

Fixture abelian_fixture(size_t m) {
  Fixture fx;
  fx.name = "abelian" + std::to_string(m);
  fx.description = "abelian Lie algebra k^" + std::to_string(m);
  fx.algebra = std::make_shared<const LieAlgebra>(abelian_algebra(m));
  const auto& g = fx.algebra;
  fx.reps.emplace_back("lambda_e1", two_dim(g, unit_vector(Q, m, 0)));
  fx.reps.emplace_back("lambda_e2", two_dim(g, unit_vector(Q, m, 1)));
  fx.reps.emplace_back("zero", Representation(g, std::vector<Matrix>(m, Matrix(Q, 2, 2))));
  {
    // lambda1 = lambda2 = e1^vee: the generic 3-dimensional flag shape for k^m.
    std::vector<Matrix> mats(m, Matrix(Q, 3, 3));
    mats[0] = superdiagonal(Q, {Scalar(1), Scalar(1)});
    if (m > 1) mats[1](0, 2) = Scalar(1);
    fx.reps.emplace_back("flag3", Representation(g, std::move(mats)));
  }
  fx.expected.a_values = {2, 3, 4};
  fx.expected.width = 1;
  fx.expected.depth = 1;
  fx.expected.series_dims = {m, 0};
  fx.expected.h2 = m * (m - 1) / 2;
  return fx;
}

Fixture strictly_upper_fixture(size_t n) {
  Fixture fx;
  fx.name = "n" + std::to_string(n);
  fx.description = "strictly upper triangular " + std::to_string(n) + "x" + std::to_string(n) + " matrices";
  fx.algebra = std::make_shared<const LieAlgebra>(strictly_upper_algebra(n));
  fx.reps.emplace_back("natural", natural_rep(fx.algebra, n));
  fx.expected.width = n - 1;
  fx.expected.depth = n - 1;
  for (size_t s = 1; s <= n; ++s) fx.expected.series_dims.push_back((n - s) * (n - s + 1) / 2);
  if (n == 2) {
    fx.expected.a_values = {2, 3, 4};
    fx.expected.h2 = 0;
  } else if (n == 3) {
    // Independently checked by hand: the corner equation at (1,4) forces lambda3 = 0.
    fx.expected.a_values = {2, 2, std::nullopt};
    fx.expected.h2 = 2;
  } else {
    fx.expected.a_values = {2, 2, 2};
  }
  return fx;
}

Fixture example48_fixture() {
  Fixture fx;
  fx.name = "example48";
  fx.description = "[v1,v2]=v3, [v1,v3]=v4; wide 4-dim witness over Q(i)";
  fx.algebra = std::make_shared<const LieAlgebra>(algebra_from_brackets(
      Q, {"v1", "v2", "v3", "v4"}, {{0, 1, {{2, Scalar(1)}}}, {0, 2, {{3, Scalar(1)}}}}));
  const Field qi = Field::extension({Rational(1), Rational(0), Rational(1)}, "i");
  auto gi = std::make_shared<const LieAlgebra>(fx.algebra->base_change(qi));
  const Scalar one = Scalar::one(qi), i = Scalar::generator(qi);
  Matrix x1 = superdiagonal(qi, {one, one, one + Scalar(qi, Rational(2)) * i});
  Matrix x2 = superdiagonal(qi, {one, i, -one});
  fx.reps.emplace_back("witness", rep_from_generators(gi, {x1, x2}, {0, 1}));
  fx.reps.emplace_back("lambda_v1", two_dim(fx.algebra, unit_vector(Q, 4, 0)));
  fx.expected.a_values = {2, 2, 2};
  fx.expected.width = 3;
  fx.expected.depth = 3;
  fx.expected.series_dims = {4, 2, 1, 0};
  return fx;
}

Fixture example49_fixture() {
  Fixture fx;
  fx.name = "example49";
  fx.description = "five-dimensional Heisenberg algebra [v1,v2]=[v3,v4]=v5";
  fx.algebra = std::make_shared<const LieAlgebra>(algebra_from_brackets(
      Q, {"v1", "v2", "v3", "v4", "v5"}, {{0, 1, {{4, Scalar(1)}}}, {2, 3, {{4, Scalar(1)}}}}));
  fx.reps.emplace_back("lambda_v1", two_dim(fx.algebra, unit_vector(Q, 5, 0)));
  fx.reps.emplace_back("lambda_v3", two_dim(fx.algebra, unit_vector(Q, 5, 2)));
  fx.expected.a_values = {2, 3, 4};
  fx.expected.width = 1;
  fx.expected.depth = 2;
  fx.expected.series_dims = {5, 1, 0};
  return fx;
}

Fixture free23_fixture() {
  Fixture fx;
  fx.name = "free23";
  fx.description = "free nilpotent Lie algebra of rank 2 and class 3";
  fx.algebra = std::make_shared<const LieAlgebra>(free_nilpotent(2, 3));
  const auto& g = fx.algebra;
  // lambda1 = x1^vee, lambda2 = lambda3 = x2^vee.
  fx.reps.emplace_back("example269",
                       rep_from_generators(g, {elementary(Q, 4, 1, 2),
                                               elementary(Q, 4, 2, 3) + elementary(Q, 4, 3, 4)}));
  fx.reps.emplace_back("wide4",
                       rep_from_generators(g, {elementary(Q, 4, 1, 2) + elementary(Q, 4, 2, 3),
                                               elementary(Q, 4, 2, 3) + elementary(Q, 4, 3, 4)}));
  fx.expected.a_values = {2, 2, 2};
  fx.expected.width = 3;
  fx.expected.depth = 3;
  fx.expected.series_dims = {5, 3, 2, 0};
  return fx;
}

const std::map<std::string, std::function<Fixture()>>& registry() {
  static const std::map<std::string, std::function<Fixture()>> r = {
      {"abelian2", [] { return abelian_fixture(2); }},
      {"abelian3", [] { return abelian_fixture(3); }},
      {"n2", [] { return strictly_upper_fixture(2); }},
      {"n3", [] { return strictly_upper_fixture(3); }},
      {"n4", [] { return strictly_upper_fixture(4); }},
      {"n5", [] { return strictly_upper_fixture(5); }},
      {"example48", example48_fixture},
      {"example49", example49_fixture},
      {"free23", free23_fixture},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

Fixture make_fixture(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown fixture '" + name + "'");
  return it->second();
}

}  // namespace nilrep
