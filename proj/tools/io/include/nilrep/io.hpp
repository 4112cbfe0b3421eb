#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilrep/automorphisms.hpp"
#include "nilrep/canonical_form.hpp"
#include "nilrep/fixtures.hpp"
#include "nilrep/gluing.hpp"
#include "nilrep/moduli.hpp"

namespace nilrep::io {

using Json = nlohmann::ordered_json;

// Input that parsed as JSON but does not match the expected shape. `path` is a
// JSON pointer to the offending value.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& msg)
      : std::runtime_error(path + ": " + msg), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// An algebra together with named representations.
struct Document {
  std::string name;
  AlgebraPtr algebra;
  std::vector<std::pair<std::string, Representation>> reps;

  const Representation& rep(const std::string& rep_name) const;
  std::vector<Representation> hints() const;
};

Field field_from_json(const Json& j, const std::string& path = "");
Json to_json(const Field& f);

Scalar scalar_from_json(const Field& f, const Json& j, const std::string& path = "");
Json to_json(const Scalar& s);

Matrix matrix_from_json(const Field& f, const Json& j, const std::string& path = "");
Json to_json(const Matrix& m);
Json to_json(const Vector& v);

// Accepts the bracket-table format or {"free_nilpotent": {"rank": m, "class": c}}.
LieAlgebra algebra_from_json(const Json& j, const std::string& path = "");
Json to_json(const LieAlgebra& g);

// Either "matrices" (one per basis vector) or "generator_images" (label -> matrix).
// An optional "field" base-changes the algebra before the matrices are read.
Representation rep_from_json(const AlgebraPtr& g, const Json& j, const std::string& path = "",
                             const std::string& doc_name = "");
Json to_json(const Representation& r, const std::string& algebra_ref = "");

Document document_from_json(const Json& j);
// Reads a file; JSON syntax errors become SchemaError with line and column.
Document load_document(const std::string& file);
Document document_from_fixture(const Fixture& fx);
Json to_json(const Document& d);

// Reports.
Json to_json(const Filtration& f);
Json to_json(const Constellation& c);
Json to_json(const Wide3Decision& d);
Json to_json(const WidthReport& w);
Json to_json(const AInvariantVerdict& a);
Json to_json(const NondegeneracyReport& n);
Json to_json(const Slice& s);
Json to_json(const CanonicalForm& cf);
Json to_json(const IsoReport& r);
Json to_json(const ObstructionClass& o);
Json to_json(const GlueResult& g);

}  // namespace nilrep::io
