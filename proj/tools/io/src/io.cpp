#include "nilrep/io.hpp"

#include <fstream>
#include <set>

namespace nilrep::io {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, size_t idx) { return path + "/" + std::to_string(idx); }

const Json& require(const Json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path.empty() ? "/" : path, "missing key '" + key + "'");
  return *it;
}

size_t require_count(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw SchemaError(path, "expected a non-negative integer");
  return j.get<size_t>();
}

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

Rational rational_from_json(const Json& j, const std::string& path) {
  Scalar s = scalar_from_json(Field::rationals(), j, path);
  return s.rational();
}

std::string rational_string(const Rational& q) { return q.get_str(); }

// Label or 1-based index.
size_t basis_index(const LieAlgebra& g, const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return g.index_of(j.get<std::string>());
    } catch (const std::exception&) {
      throw SchemaError(path, "unknown basis label '" + j.get<std::string>() + "'");
    }
  }
  size_t k = require_count(j, path);
  if (k < 1 || k > g.dim()) throw SchemaError(path, "basis index out of range 1.." + std::to_string(g.dim()));
  return k - 1;
}

size_t label_index(const std::vector<std::string>& labels, const Json& j, const std::string& path) {
  if (j.is_string()) {
    for (size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == j.get<std::string>()) return k;
    throw SchemaError(path, "unknown basis label '" + j.get<std::string>() + "'");
  }
  size_t k = require_count(j, path);
  if (k < 1 || k > labels.size())
    throw SchemaError(path, "basis index out of range 1.." + std::to_string(labels.size()));
  return k - 1;
}

}  // namespace

// --- Field and scalars ------------------------------------------------------

Field field_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return Field::parse_extension(j.get<std::string>());
    } catch (const std::exception& e) {
      throw SchemaError(path, e.what());
    }
  }
  const std::string kind = [&] {
    const Json& k = require(j, path, "kind");
    if (!k.is_string()) throw SchemaError(child(path, "kind"), "expected a string");
    return k.get<std::string>();
  }();
  if (kind == "rational") return Field::rationals();
  if (kind != "extension")
    throw SchemaError(child(path, "kind"), "expected \"rational\" or \"extension\"");
  std::string symbol = "a";
  if (j.contains("symbol")) {
    if (!j["symbol"].is_string()) throw SchemaError(child(path, "symbol"), "expected a string");
    symbol = j["symbol"].get<std::string>();
  }
  try {
    if (j.contains("poly")) {
      if (!j["poly"].is_string()) throw SchemaError(child(path, "poly"), "expected a string");
      return Field::parse_extension(j["poly"].get<std::string>());
    }
    const Json& mp = require_array(require(j, path, "min_poly"), child(path, "min_poly"));
    std::vector<Rational> coeffs;
    for (size_t k = 0; k < mp.size(); ++k)
      coeffs.push_back(rational_from_json(mp[k], child(child(path, "min_poly"), k)));
    return Field::extension(std::move(coeffs), symbol);
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
}

Json to_json(const Field& f) {
  if (f.is_rational()) return Json{{"kind", "rational"}};
  Json mp = Json::array();
  for (const auto& c : f.min_poly()) mp.push_back(rational_string(c));
  return Json{{"kind", "extension"}, {"min_poly", mp}, {"symbol", f.symbol()}};
}

Scalar scalar_from_json(const Field& f, const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(f, Rational(j.get<long>()));
  if (!j.is_string()) throw SchemaError(path, "expected a scalar string such as \"1/2\"");
  try {
    return Scalar::parse(f, j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
}

Json to_json(const Scalar& s) { return s.to_string(); }

Matrix matrix_from_json(const Field& f, const Json& j, const std::string& path) {
  require_array(j, path);
  const size_t rows = j.size();
  size_t cols = 0;
  for (size_t i = 0; i < rows; ++i) {
    require_array(j[i], child(path, i));
    if (i == 0) cols = j[i].size();
    else if (j[i].size() != cols) throw SchemaError(child(path, i), "ragged matrix row");
  }
  Matrix m(f, rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(f, j[i][k], child(child(path, i), k));
  return m;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

// --- Algebras ---------------------------------------------------------------

LieAlgebra algebra_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
  if (j.contains("free_nilpotent")) {
    const std::string p = child(path, "free_nilpotent");
    const Json& fn = j["free_nilpotent"];
    size_t m = require_count(require(fn, p, "rank"), child(p, "rank"));
    size_t c = require_count(require(fn, p, "class"), child(p, "class"));
    if (m < 1 || c < 1) throw SchemaError(p, "rank and class must be positive");
    FreeNilpotentOptions opts;
    if (fn.contains("word_cap")) opts.word_cap = require_count(fn["word_cap"], child(p, "word_cap"));
    try {
      LieAlgebra g = free_nilpotent(m, c, opts);
      if (j.contains("field")) g = g.base_change(field_from_json(j["field"], child(path, "field")));
      return g;
    } catch (const SchemaError&) {
      throw;
    } catch (const InvalidAlgebra&) {
      throw;
    } catch (const std::exception& e) {
      throw SchemaError(p, e.what());
    }
  }
  Field f = j.contains("field") ? field_from_json(j["field"], child(path, "field")) : Field::rationals();
  const size_t dim = require_count(require(j, path, "dim"), child(path, "dim"));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& lj = require_array(j["labels"], child(path, "labels"));
    if (lj.size() != dim) throw SchemaError(child(path, "labels"), "expected " + std::to_string(dim) + " labels");
    std::set<std::string> seen;
    for (size_t k = 0; k < dim; ++k) {
      if (!lj[k].is_string()) throw SchemaError(child(child(path, "labels"), k), "expected a string");
      if (!seen.insert(lj[k].get<std::string>()).second)
        throw SchemaError(child(child(path, "labels"), k), "duplicate label");
      labels.push_back(lj[k].get<std::string>());
    }
  } else {
    for (size_t k = 1; k <= dim; ++k) labels.push_back("v" + std::to_string(k));
  }
  std::vector<std::vector<Vector>> c(dim, std::vector<Vector>(dim, zero_vector(f, dim)));
  std::vector<std::vector<bool>> given(dim, std::vector<bool>(dim, false));
  if (j.contains("brackets")) {
    const std::string bp = child(path, "brackets");
    const Json& bj = require_array(j["brackets"], bp);
    for (size_t t = 0; t < bj.size(); ++t) {
      const std::string ep = child(bp, t);
      size_t a = label_index(labels, require(bj[t], ep, "i"), child(ep, "i"));
      size_t b = label_index(labels, require(bj[t], ep, "j"), child(ep, "j"));
      if (a == b) throw SchemaError(ep, "bracket of a basis vector with itself is always zero");
      if (given[a][b]) throw SchemaError(ep, "bracket given twice");
      given[a][b] = given[b][a] = true;
      const Json& cj = require(bj[t], ep, "coeffs");
      Vector v = zero_vector(f, dim);
      if (cj.is_object()) {
        for (auto it = cj.begin(); it != cj.end(); ++it) {
          const std::string cp = child(child(ep, "coeffs"), it.key());
          size_t k = label_index(labels, Json(it.key()), cp);
          v[k] = scalar_from_json(f, it.value(), cp);
        }
      } else if (cj.is_array()) {
        if (cj.size() != dim) throw SchemaError(child(ep, "coeffs"), "expected " + std::to_string(dim) + " entries");
        for (size_t k = 0; k < dim; ++k) v[k] = scalar_from_json(f, cj[k], child(child(ep, "coeffs"), k));
      } else {
        throw SchemaError(child(ep, "coeffs"), "expected an object or array");
      }
      c[a][b] = v;
      c[b][a] = scale(-Scalar::one(f), v);
    }
  }
  return LieAlgebra::create(f, std::move(labels), std::move(c));
}

Json to_json(const LieAlgebra& g) {
  Json out;
  out["field"] = to_json(g.field());
  out["dim"] = g.dim();
  out["labels"] = g.labels();
  Json br = Json::array();
  for (size_t a = 0; a < g.dim(); ++a)
    for (size_t b = a + 1; b < g.dim(); ++b) {
      const Vector& v = g.bracket_basis(a, b);
      if (is_zero(v)) continue;
      Json coeffs = Json::object();
      for (size_t k = 0; k < g.dim(); ++k)
        if (!v[k].is_zero()) coeffs[g.labels()[k]] = v[k].to_string();
      br.push_back(Json{{"i", g.labels()[a]}, {"j", g.labels()[b]}, {"coeffs", coeffs}});
    }
  out["brackets"] = br;
  return out;
}

// --- Representations --------------------------------------------------------

Representation rep_from_json(const AlgebraPtr& g0, const Json& j, const std::string& path,
                             const std::string& doc_name) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  if (j.contains("algebra_ref") && !doc_name.empty()) {
    if (!j["algebra_ref"].is_string() || j["algebra_ref"].get<std::string>() != doc_name)
      throw SchemaError(child(path, "algebra_ref"), "does not name this document's algebra '" + doc_name + "'");
  }
  AlgebraPtr g = g0;
  if (j.contains("field")) {
    Field f = field_from_json(j["field"], child(path, "field"));
    if (f != g0->field()) {
      if (!g0->field().is_rational())
        throw SchemaError(child(path, "field"), "can only extend an algebra defined over Q");
      g = std::make_shared<const LieAlgebra>(g0->base_change(f));
    }
  }
  const Field& f = g->field();
  std::optional<size_t> n;
  if (j.contains("n")) n = require_count(j["n"], child(path, "n"));
  auto check_shape = [&](const Matrix& m, const std::string& p) {
    if (!n) n = m.rows();
    if (m.rows() != *n || m.cols() != *n)
      throw SchemaError(p, "expected a " + std::to_string(*n) + "x" + std::to_string(*n) + " matrix");
  };
  if (j.contains("matrices")) {
    const std::string mp = child(path, "matrices");
    const Json& mj = require_array(j["matrices"], mp);
    if (mj.size() != g->dim())
      throw SchemaError(mp, "expected one matrix per basis vector (" + std::to_string(g->dim()) + ")");
    std::vector<Matrix> mats;
    for (size_t a = 0; a < mj.size(); ++a) {
      mats.push_back(matrix_from_json(f, mj[a], child(mp, a)));
      check_shape(mats.back(), child(mp, a));
    }
    return Representation(g, std::move(mats));
  }
  if (j.contains("generator_images")) {
    const std::string gp = child(path, "generator_images");
    const Json& gj = j["generator_images"];
    if (!gj.is_object()) throw SchemaError(gp, "expected an object mapping labels to matrices");
    std::vector<size_t> gens;
    std::vector<Matrix> images;
    for (auto it = gj.begin(); it != gj.end(); ++it) {
      const std::string p = child(gp, it.key());
      gens.push_back(basis_index(*g, Json(it.key()), p));
      images.push_back(matrix_from_json(f, it.value(), p));
      check_shape(images.back(), p);
    }
    if (gens.size() != g->abelianization_dim())
      throw SchemaError(gp, "expected images of " + std::to_string(g->abelianization_dim()) + " generators");
    return rep_from_generators(g, images, gens);
  }
  throw SchemaError(path, "expected \"matrices\" or \"generator_images\"");
}

Json to_json(const Representation& r, const std::string& algebra_ref) {
  Json out;
  if (!algebra_ref.empty()) out["algebra_ref"] = algebra_ref;
  if (!r.field().is_rational()) out["field"] = to_json(r.field());
  out["n"] = r.n();
  Json mats = Json::array();
  for (const auto& m : r.matrices()) mats.push_back(to_json(m));
  out["matrices"] = mats;
  return out;
}

// --- Documents --------------------------------------------------------------

const Representation& Document::rep(const std::string& rep_name) const {
  for (const auto& [n, r] : reps)
    if (n == rep_name) return r;
  std::string known;
  for (const auto& [n, r] : reps) known += (known.empty() ? "" : ", ") + n;
  throw SchemaError("/representations", "no representation named '" + rep_name + "' (have: " + known + ")");
}

std::vector<Representation> Document::hints() const {
  std::vector<Representation> out;
  for (const auto& [n, r] : reps) out.push_back(r);
  return out;
}

Document document_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("/", "expected an object");
  Document d;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SchemaError("/name", "expected a string");
    d.name = j["name"].get<std::string>();
  }
  if (j.contains("algebra")) {
    d.algebra = std::make_shared<const LieAlgebra>(algebra_from_json(j["algebra"], "/algebra"));
  } else {
    // A bare algebra with no representations.
    d.algebra = std::make_shared<const LieAlgebra>(algebra_from_json(j, ""));
    return d;
  }
  if (j.contains("representations")) {
    const Json& rj = j["representations"];
    if (!rj.is_object()) throw SchemaError("/representations", "expected an object keyed by name");
    for (auto it = rj.begin(); it != rj.end(); ++it)
      d.reps.emplace_back(it.key(), rep_from_json(d.algebra, it.value(), child("/representations", it.key()), d.name));
  }
  return d;
}

Document load_document(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw SchemaError(file, "cannot open file");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(file, e.what());
  }
  return document_from_json(j);
}

Document document_from_fixture(const Fixture& fx) {
  Document d;
  d.name = fx.name;
  d.algebra = fx.algebra;
  d.reps = fx.reps;
  return d;
}

Json to_json(const Document& d) {
  Json out;
  if (!d.name.empty()) out["name"] = d.name;
  out["algebra"] = to_json(*d.algebra);
  Json reps = Json::object();
  for (const auto& [n, r] : d.reps) reps[n] = to_json(r, d.name);
  out["representations"] = reps;
  return out;
}

// --- Reports ----------------------------------------------------------------

Json to_json(const Filtration& f) {
  Json dims = Json::array();
  for (const auto& s : f.steps) dims.push_back(s.dim());
  return Json{{"dims", dims}, {"exhaustive", f.exhaustive()}, {"jumps", f.jumps()}};
}

Json to_json(const Constellation& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(to_json(p));
  return Json{{"points", pts}, {"distinct", c.distinct()}};
}

Json to_json(const Wide3Decision& d) {
  Json out{{"verdict", to_string(d.verdict)},
           {"case", std::string(1, d.decided_case)},
           {"dim_abelian", d.dim_abelian},
           {"dim_s", d.dim_s},
           {"quadric_rank", d.quadric_rank},
           {"trace", d.trace}};
  out["witness"] = d.witness ? to_json(*d.witness) : Json(nullptr);
  return out;
}

Json to_json(const WidthReport& w) {
  Json out{{"lower", w.lower}, {"upper", w.upper}, {"exact", w.exact}, {"method", w.method}, {"seed", w.seed}};
  out["witness"] = w.witness ? to_json(*w.witness) : Json(nullptr);
  out["wide3"] = w.wide3 ? to_json(*w.wide3) : Json(nullptr);
  return out;
}

Json to_json(const AInvariantVerdict& a) {
  Json out{{"n", a.n}, {"exists", a.exists}};
  out["lower"] = a.exists ? Json(a.lo) : Json(nullptr);
  out["upper"] = a.exists ? Json(a.hi) : Json(nullptr);
  out["exact"] = a.exact();
  out["method"] = a.method;
  out["certificate"] = a.certificate ? to_json(*a.certificate) : Json(nullptr);
  out["note"] = a.note;
  return out;
}

Json to_json(const NondegeneracyReport& n) {
  return Json{{"verdict", to_string(n.verdict)}, {"reason", n.reason}, {"aut_dimension", n.aut_dimension}};
}

Json to_json(const Slice& s) {
  Json comps = Json::array();
  for (size_t i = 2; i < s.n; ++i) {
    Json basis = Json::array();
    for (const auto& v : s.E(i).basis()) basis.push_back(to_json(v));
    comps.push_back(Json{{"i", i}, {"basis", basis}});
  }
  return Json{{"points", to_json(s.points)["points"]}, {"complements", comps}};
}

Json to_json(const CanonicalForm& cf) {
  Json entries = Json::array();
  for (size_t i = 1; i <= cf.entries.n(); ++i)
    for (size_t j = i + 1; j <= cf.entries.n(); ++j)
      entries.push_back(Json{{"i", i}, {"j", j}, {"lambda", to_json(cf.entries.lam(i, j))}});
  return Json{{"slice", to_json(cf.slice)},
              {"change_of_basis", to_json(cf.change_of_basis)},
              {"u", to_json(cf.u)},
              {"t", to_json(cf.t)},
              {"entries", entries}};
}

Json to_json(const IsoReport& r) {
  Json diff = Json::array();
  for (auto [i, j] : r.differing) diff.push_back(Json::array({i, j}));
  return Json{{"isomorphic", r.isomorphic}, {"constellations_differ", r.constellations_differ}, {"differing", diff}};
}

Json to_json(const ObstructionClass& o) {
  Json basis = Json::array();
  for (const auto& v : o.h2_basis) basis.push_back(to_json(v));
  return Json{{"vanishes", o.vanishes}, {"h2_dimension", o.h2_basis.size()}, {"coords", to_json(o.coords)},
              {"h2_basis", basis}};
}

Json to_json(const GlueResult& g) {
  Json ext = Json::array();
  for (const auto& v : g.ext1_basis) ext.push_back(to_json(v));
  Json out{{"glued", g.glued.has_value()}, {"obstruction", to_json(g.obstruction)}};
  out["representation"] = g.glued ? to_json(*g.glued) : Json(nullptr);
  out["ext1_basis"] = ext;
  return out;
}

}  // namespace nilrep::io
