#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilrep/io.hpp"

using namespace nilrep;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNegative = 2;

struct Options {
  std::string input;
  std::string fixture;
  std::string rep;
  std::string rep2;
  std::uint64_t seed = 0;
  size_t budget = 200;
  std::vector<std::string> extensions;
  size_t jobs = 1;
  bool json = false;
};

io::Document load(const Options& o) {
  if (!o.fixture.empty()) return io::document_from_fixture(make_fixture(o.fixture));
  return io::load_document(o.input);
}

const Representation& pick(const io::Document& d, const std::string& name, size_t fallback) {
  if (!name.empty()) return d.rep(name);
  if (d.reps.size() <= fallback) throw io::SchemaError("/representations", "not enough representations in input");
  return d.reps[fallback].second;
}

WidthOptions width_options(const Options& o, const io::Document& d) {
  WidthOptions w;
  w.seed = o.seed;
  w.budget = o.budget;
  w.jobs = std::max<size_t>(1, o.jobs);
  for (const auto& e : o.extensions) w.extensions.push_back(Field::parse_extension(e));
  w.hints = d.hints();
  return w;
}

std::string vec_text(const Vector& v) { return to_string(v); }

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::string sizes(const std::vector<size_t>& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s + ")";
}

int cmd_validate(const Options& o) {
  Json out;
  std::ostringstream txt;
  try {
    io::Document d = load(o);
    const LieAlgebra& g = *d.algebra;
    std::vector<size_t> series;
    for (const auto& s : g.central_series()) series.push_back(s.dim());
    out["valid"] = true;
    out["field"] = g.field().describe();
    out["dim"] = g.dim();
    out["depth"] = g.depth();
    out["central_series_dims"] = series;
    txt << "valid algebra over " << g.field().describe() << ": dim " << g.dim() << ", depth " << g.depth()
        << ", central series dims " << sizes(series) << "\n";
    Json reps = Json::object();
    for (const auto& [name, r] : d.reps) {
      reps[name] = Json{{"n", r.n()}, {"nilpotent", r.is_nilpotent()}, {"flag", r.is_flag()}};
      txt << "  " << name << ": n = " << r.n() << ", nilpotent " << (r.is_nilpotent() ? "yes" : "no")
          << ", flag " << (r.is_flag() ? "yes" : "no") << "\n";
    }
    out["representations"] = reps;
    emit(o, out, txt.str());
    return kOk;
  } catch (const InvalidAlgebra& e) {
    out = Json{{"valid", false}, {"error", e.what()}, {"violations", e.report().violations}};
    txt << "invalid algebra: " << e.what() << "\n";
    for (const auto& v : e.report().violations) txt << "  " << v << "\n";
  } catch (const RepresentationError& e) {
    out = Json{{"valid", false}, {"error", e.what()}};
    txt << "invalid representation: " << e.what() << "\n";
  }
  emit(o, out, txt.str());
  return kNegative;
}

int cmd_analyze(const Options& o) {
  io::Document d = load(o);
  const Representation& r = pick(d, o.rep, 0);
  Json out;
  std::ostringstream txt;
  const Filtration& fil = r.filtration();
  out["n"] = r.n();
  out["filtration"] = io::to_json(fil);
  out["nilpotent"] = r.is_nilpotent();
  out["flag"] = r.is_flag();
  txt << "n = " << r.n() << "\n";
  std::vector<size_t> dims;
  for (const auto& s : fil.steps) dims.push_back(s.dim());
  txt << "filtration dims " << sizes(dims) << (fil.exhaustive() ? "" : " (not exhaustive)") << "\n";
  txt << "flag: " << (r.is_flag() ? "yes" : "no") << "\n";
  if (!r.is_flag()) {
    out["wide"] = false;
    emit(o, out, txt.str());
    return kOk;
  }
  const bool wide = is_wide(r);
  Constellation c = constellation(r);
  out["wide"] = wide;
  out["constellation"] = io::to_json(c);
  txt << "wide: " << (wide ? "yes" : "no") << "\n";
  txt << "constellation:";
  for (const auto& p : c.points) txt << " " << vec_text(p);
  txt << "\n";
  NondegeneracyReport nd = is_nondegenerate(r, width_options(o, d));
  out["aut_dimension"] = nd.aut_dimension;
  out["nondegenerate"] = io::to_json(nd);
  txt << "dim Aut: " << nd.aut_dimension << "\n";
  txt << "nondegenerate: " << to_string(nd.verdict) << " (" << nd.reason << ")\n";
  emit(o, out, txt.str());
  return kOk;
}

int cmd_width(const Options& o) {
  io::Document d = load(o);
  WidthReport w = width_bounds(d.algebra, width_options(o, d));
  std::ostringstream txt;
  if (w.exact) txt << "width = " << w.lower;
  else txt << "width in [" << w.lower << ", " << w.upper << "]";
  txt << " (" << w.method << ", seed " << w.seed << ")\n";
  if (w.wide3) txt << "wide3: " << to_string(w.wide3->verdict) << ", case " << w.wide3->decided_case << ": "
                   << w.wide3->trace << "\n";
  emit(o, io::to_json(w), txt.str());
  return w.exact ? kOk : kNegative;
}

int cmd_a_invariants(const Options& o) {
  io::Document d = load(o);
  WidthOptions w = width_options(o, d);
  Json table = Json::array();
  std::ostringstream txt;
  bool all_decided = true;
  txt << "A(g, n) for n = 2..4:";
  for (size_t n = 2; n <= 4; ++n) {
    AInvariantVerdict a = a_invariant(d.algebra, n, w);
    table.push_back(io::to_json(a));
    if (!a.exists) txt << " none";
    else if (a.exact()) txt << " " << a.lo;
    else txt << " [" << a.lo << "," << a.hi << "]";
    all_decided = all_decided && (!a.exists || a.exact());
  }
  txt << "\n";
  for (const auto& a : table)
    if (!a["note"].get<std::string>().empty())
      txt << "  n = " << a["n"].get<size_t>() << ": " << a["note"].get<std::string>() << "\n";
  emit(o, Json{{"a_invariants", table}}, txt.str());
  return all_decided ? kOk : kNegative;
}

int cmd_canon(const Options& o) {
  io::Document d = load(o);
  const Representation& r = pick(d, o.rep, 0);
  try {
    CanonicalForm cf = canonical_form(r);
    std::ostringstream txt;
    txt << "canonical entries (n = " << cf.entries.n() << "):\n";
    for (size_t i = 1; i <= cf.entries.n(); ++i)
      for (size_t j = i + 1; j <= cf.entries.n(); ++j)
        txt << "  lambda_" << i << "," << j << " = " << vec_text(cf.entries.lam(i, j)) << "\n";
    txt << "t = " << vec_text(cf.t) << "\n";
    emit(o, io::to_json(cf), txt.str());
    return kOk;
  } catch (const DegenerateConstellation& e) {
    emit(o, Json{{"canonical", false}, {"reason", e.what()}}, std::string("no canonical form: ") + e.what() + "\n");
    return kNegative;
  }
}

int cmd_iso(const Options& o) {
  io::Document d = load(o);
  const Representation& r1 = pick(d, o.rep, 0);
  const Representation& r2 = pick(d, o.rep2, 1);
  IsoReport rep = iso_test_wide(r1, r2);
  std::ostringstream txt;
  txt << (rep.isomorphic ? "isomorphic" : "not isomorphic");
  if (rep.constellations_differ) txt << " (constellations differ)";
  else if (!rep.isomorphic) txt << " (" << rep.differing.size() << " canonical entries differ)";
  txt << "\n";
  emit(o, io::to_json(rep), txt.str());
  return rep.isomorphic ? kOk : kNegative;
}

int cmd_glue(const Options& o) {
  io::Document d = load(o);
  const Representation& r1 = pick(d, o.rep, 0);
  const Representation& r2 = pick(d, o.rep2, 1);
  GlueResult g = glue(r1, r2);
  std::ostringstream txt;
  if (g.glued) {
    txt << "glued to dimension " << g.glued->n() << "; Ext^1 ambiguity of dimension " << g.ext1_basis.size() << "\n";
  } else {
    txt << "no glue: obstruction class " << vec_text(g.obstruction.coords) << " in H^2 of dimension "
        << g.obstruction.h2_basis.size() << "\n";
  }
  emit(o, io::to_json(g), txt.str());
  return g.glued ? kOk : kNegative;
}

int cmd_h2(const Options& o) {
  io::Document d = load(o);
  size_t h = h2_dimension(*d.algebra);
  emit(o, Json{{"h2_dimension", h}}, "dim H^2 = " + std::to_string(h) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flag representations of nilpotent Lie algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool reps, bool two_reps, bool search) {
    auto* in = sub->add_option("--input,-i", o.input, "JSON document")->check(CLI::ExistingFile);
    auto* fx = sub->add_option("--fixture,-f", o.fixture, "built-in fixture name");
    in->excludes(fx);
    fx->excludes(in);
    if (reps) sub->add_option("--rep", o.rep, "representation name (default: first)");
    if (two_reps) sub->add_option("--rep2", o.rep2, "second representation name (default: second)");
    if (search) {
      sub->add_option("--seed", o.seed, "random seed");
      sub->add_option("--budget", o.budget, "search budget");
      sub->add_option("--extension", o.extensions, "extra field to search, e.g. \"x^2+1\"");
      sub->add_option("--jobs", o.jobs, "parallel seeds for the width search");
    }
    sub->add_flag("--json", o.json, "emit JSON");
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> cmds;
  auto reg = [&](const char* name, const char* desc, int (*fn)(const Options&), bool reps, bool two, bool search) {
    CLI::App* sub = app.add_subcommand(name, desc);
    add_common(sub, reps, two, search);
    cmds.emplace_back(sub, fn);
  };
  reg("validate", "check an algebra and its representations", cmd_validate, false, false, false);
  reg("analyze", "filtration, constellation, automorphisms and nondegeneracy", cmd_analyze, true, false, true);
  reg("width", "bounds on the width of the algebra", cmd_width, false, false, true);
  reg("a-invariants", "A(g, n) for n = 2, 3, 4", cmd_a_invariants, false, false, true);
  reg("canon", "canonical form of a wide representation", cmd_canon, true, false, false);
  reg("iso", "isomorphism test for wide representations", cmd_iso, true, true, false);
  reg("glue", "glue a compatible pair of flag representations", cmd_glue, true, true, false);
  reg("h2", "dimension of H^2(g, k)", cmd_h2, false, false, false);
  app.add_subcommand("fixtures", "list built-in fixtures")->callback([] {
    for (const auto& n : fixture_names()) std::cout << n << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  for (auto& [sub, fn] : cmds) {
    if (!sub->parsed()) continue;
    if (o.input.empty() && o.fixture.empty()) {
      std::cerr << "error: one of --input or --fixture is required\n";
      return kInputError;
    }
    try {
      return fn(o);
    } catch (const io::SchemaError& e) {
      std::cerr << "input error at " << e.what() << "\n";
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
    }
    return kInputError;
  }
  return kOk;
}
