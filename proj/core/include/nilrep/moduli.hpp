#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nilrep/representation.hpp"

namespace nilrep {

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

// Seeded source of small-height scalars: numerators in [-10, 10], denominators in [1, 10].
class SmallScalarSource {
 public:
  explicit SmallScalarSource(std::uint64_t seed) : rng_(seed) {}
  Rational rational(bool integral = false);
  // c0 + c1*a + ... over `f`.
  Scalar scalar(const Field& f, bool integral = false);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// --- Column extension -------------------------------------------------------
// For a standard-coordinates r of dimension n, the linear space of new last
// columns (mu_1, ..., mu_n), mu_k in g^vee, making the (n+1)-dim extension a
// representation. Coordinates: index k*m + a holds mu_{k+1}(v_a).
Subspace column_extension_space(const Representation& r);
Representation extend_by_column(const Representation& r, const Vector& mu);
// Solves the affine version with mu_k fixed for the given (k, functional) pairs
// (k is 1-based). Returns the pivot solution, if any.
std::optional<Vector> constrained_column(const Representation& r,
                                         const std::vector<std::pair<size_t, Vector>>& fixed);
// The 1-dimensional zero representation of g.
Representation trivial_rep(const AlgebraPtr& g);

// --- Wide three-dimensional representations ----------------------------------
struct Wide3Decision {
  Verdict verdict = Verdict::unknown;
  char decided_case = '?';  // 'a'..'e' as documented in wide3_exists
  size_t dim_abelian = 0;   // dim g^ab
  size_t dim_s = 0;         // admissible bivectors
  size_t quadric_rank = 0;  // dimension of the span of the restricted quadrics
  std::optional<Representation> witness;
  std::string trace;
};

struct SearchOptions {
  std::uint64_t seed = 0;
  size_t budget = 200;
  std::vector<Field> extensions;
  size_t jobs = 1;
};

// Decides whether some extension field admits lambda1, lambda2 in (g^ab)^vee with
// lambda1 ^ lambda2 != 0 factoring through the bracket. With S the space of such
// bivectors (coordinates over a basis of (g^ab)^vee) and the Plucker quadrics
// restricted to S:
//  (a) dim g^ab <= 3: yes iff S != 0;
//  (b) all restricted quadrics vanish: yes iff S != 0;
//  (c) dim S = 1: test the generator;
//  (d) quadrics span a line and dim S >= 2: yes, witness over Q(sqrt D);
//  (e) otherwise budgeted search, else unknown.
Wide3Decision wide3_exists(const AlgebraPtr& g, const SearchOptions& opts = {});

// --- Width -------------------------------------------------------------------
struct WidthOptions : SearchOptions {
  std::vector<Representation> hints;
  std::optional<size_t> assume_width_at_most;
};

struct WidthReport {
  size_t lower = 0;
  size_t upper = 0;
  bool exact = false;
  std::optional<Representation> witness;  // wide, dimension lower + 1
  std::string method;
  std::uint64_t seed = 0;
  std::optional<Wide3Decision> wide3;
};

WidthReport width_bounds(const AlgebraPtr& g, const WidthOptions& opts = {});

// Best wide representation reachable by random column-extension chains.
std::optional<Representation> search_wide(const AlgebraPtr& g, size_t target_dim,
                                          const SearchOptions& opts, std::uint64_t seed);

// --- A(g, n) -----------------------------------------------------------------
struct AInvariantVerdict {
  size_t n = 0;
  size_t lo = 0, hi = 0;
  // False when no nondegenerate representation of dimension n exists.
  bool exists = true;
  std::string method;
  std::optional<Representation> certificate;
  std::string note;
  bool exact() const { return exists && lo == hi; }
};

AInvariantVerdict a_invariant(const AlgebraPtr& g, size_t n, const WidthOptions& opts = {});

// --- Nondegeneracy -----------------------------------------------------------
struct NondegeneracyReport {
  Verdict verdict = Verdict::unknown;
  std::string reason;
  size_t aut_dimension = 0;
};
NondegeneracyReport is_nondegenerate(const Representation& r, const WidthOptions& opts = {});

// Two nonzero 2-dimensional representations are isomorphic iff their
// classifying functionals are proportional.
bool iso_class_dim2(const Representation& r, const Representation& rp);

}  // namespace nilrep
