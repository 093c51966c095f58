#pragma once

// Reading and writing the file formats of the library with nlohmann/json.
// Malformed documents (bad JSON, missing fields, wrong JSON types) raise
// ParseError; documents that parse but describe an invalid object raise
// ValidationError from the constructors they feed.

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fieldwork/algebras/frobenius.hpp"
#include "fieldwork/algebras/lie.hpp"
#include "fieldwork/algebras/structure_algebra.hpp"
#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/matrix.hpp"
#include "fieldwork/exactcore/rational.hpp"
#include "fieldwork/facthom/circle.hpp"
#include "fieldwork/factline.hpp"
#include "fieldwork/fieldtheory/polynomial.hpp"
#include "fieldwork/operads.hpp"
#include "fieldwork/vertex.hpp"
#include "fieldwork/weiss.hpp"

namespace fieldwork::io {

using Json = nlohmann::ordered_json;

inline Json parse_json_text(const std::string& text, const std::string& origin = "input") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

// --- small field accessors --------------------------------------------------

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

inline const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

inline std::size_t natural(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

inline long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<long>();
}

inline std::string text(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

// --- rationals, vectors, matrices --------------------------------------------

/// "p/q" or "p"; bare JSON integers are accepted on input too.
inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a string \"p/q\" or an integer");
}

inline Json to_json(const Rational& r) { return r.str(); }

inline Vector vector_from_json(const Json& j) {
  Vector v;
  for (const auto& x : array_of(j, "vector")) v.push_back(rational_from_json(x));
  return v;
}

inline Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

/// A list of rows. The column count comes from the rows, or from `cols`
/// when there are none.
inline Matrix matrix_from_json(const Json& j, std::optional<std::size_t> cols = std::nullopt) {
  std::vector<Vector> rows;
  for (const auto& r : array_of(j, "matrix")) rows.push_back(vector_from_json(r));
  if (rows.empty()) return Matrix(0, cols.value_or(0));
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw ValidationError("matrix rows have different lengths");
  }
  return Matrix::from_rows(rows);
}

inline Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

// --- algebra specs ------------------------------------------------------------

struct AlgebraSpec {
  std::string kind = "assoc";  // assoc | frobenius | lie
  std::vector<std::string> basis;
  std::vector<std::vector<Vector>> constants;
  std::optional<Vector> unit;
  std::optional<Vector> trace;
  Json extra;  // the whole document, for optional fields read by callers
};

inline AlgebraSpec algebra_spec_from_json(const Json& j) {
  AlgebraSpec s;
  s.extra = j;
  if (j.contains("kind")) {
    s.kind = text(j["kind"], "kind");
    if (s.kind != "assoc" && s.kind != "frobenius" && s.kind != "lie") {
      throw ParseError("unknown algebra kind '" + s.kind + "'");
    }
  }
  const std::size_t dim = natural(field(j, "dim"), "dim");
  if (j.contains("basis")) {
    for (const auto& b : array_of(j["basis"], "basis")) s.basis.push_back(text(b, "basis name"));
  } else {
    s.basis = algebras::default_basis_names(dim);
  }
  if (s.basis.size() != dim) throw ValidationError("basis length does not match dim");
  for (const auto& plane : array_of(field(j, "structure_constants"), "structure_constants")) {
    std::vector<Vector> row;
    for (const auto& v : array_of(plane, "structure_constants row")) row.push_back(vector_from_json(v));
    s.constants.push_back(std::move(row));
  }
  if (j.contains("unit")) s.unit = vector_from_json(j["unit"]);
  if (j.contains("trace")) s.trace = vector_from_json(j["trace"]);
  if (s.kind != "lie" && !s.unit) throw ParseError("associative algebra spec needs 'unit'");
  if (s.kind == "frobenius" && !s.trace) throw ParseError("frobenius algebra spec needs 'trace'");
  return s;
}

inline AlgebraSpec load_algebra_spec(const std::string& path) { return algebra_spec_from_json(read_json_file(path)); }

/// The associative algebra, with unit and associativity checked.
inline algebras::StructureConstantAlgebra associative_algebra(const AlgebraSpec& s) {
  if (s.kind == "lie") throw ValidationError("expected an associative algebra, got a Lie algebra spec");
  return algebras::validated(algebras::StructureConstantAlgebra(s.basis, s.constants, *s.unit));
}

inline algebras::FrobeniusAlgebra frobenius_algebra(const AlgebraSpec& s) {
  if (!s.trace) throw ValidationError("algebra spec has no trace");
  return algebras::FrobeniusAlgebra(associative_algebra(s), *s.trace);
}

/// Antisymmetry and Jacobi checked.
inline algebras::LieAlgebra lie_algebra(const AlgebraSpec& s) {
  if (s.kind != "lie") throw ValidationError("expected a Lie algebra spec (kind \"lie\")");
  return algebras::validated(algebras::LieAlgebra(s.basis, s.constants));
}

inline Json to_json(const algebras::StructureConstantAlgebra& a, const std::optional<Vector>& trace = std::nullopt) {
  const std::size_t d = a.dim();
  Json out;
  out["kind"] = trace ? "frobenius" : "assoc";
  out["dim"] = d;
  out["basis"] = a.basis_names();
  out["unit"] = to_json(a.unit());
  Json sc = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d; ++j) row.push_back(to_json(a.basis_product(i, j)));
    sc.push_back(std::move(row));
  }
  out["structure_constants"] = std::move(sc);
  if (trace) out["trace"] = to_json(*trace);
  return out;
}

inline Json to_json(const algebras::LieAlgebra& g) {
  const std::size_t d = g.dim();
  Json out;
  out["kind"] = "lie";
  out["dim"] = d;
  out["basis"] = g.basis_names();
  Json sc = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d; ++j) row.push_back(to_json(g.bracket(i, j)));
    sc.push_back(std::move(row));
  }
  out["structure_constants"] = std::move(sc);
  return out;
}

/// An associative spec carrying a "derivation" matrix (columns are images
/// of basis vectors).
inline vertex::DerivationRing derivation_ring(const AlgebraSpec& s) {
  const auto a = associative_algebra(s);
  return vertex::DerivationRing(a, matrix_from_json(field(s.extra, "derivation"), a.dim()));
}

inline Json to_json(const vertex::DerivationRing& r) {
  Json out = to_json(r.ring());
  out["derivation"] = to_json(r.derivation());
  return out;
}

// --- vertex data ----------------------------------------------------------------

/// {"dim", "vacuum", "shift", "truncation", "fields": per basis vector a
/// list of [power, matrix] pairs}.
inline vertex::VertexData vertex_data_from_json(const Json& j) {
  const std::size_t dim = natural(field(j, "dim"), "dim");
  const Vector vacuum = vector_from_json(field(j, "vacuum"));
  const Matrix shift = matrix_from_json(field(j, "shift"), dim);
  const long k = integer(field(j, "truncation"), "truncation");
  std::vector<vertex::LaurentField> fields;
  for (const auto& f : array_of(field(j, "fields"), "fields")) {
    vertex::LaurentField y(dim);
    for (const auto& term : array_of(f, "field")) {
      if (!term.is_array() || term.size() != 2) throw ParseError("field term must be a [power, matrix] pair");
      const Matrix m = matrix_from_json(term[1], dim);
      if (m.rows() != dim || m.cols() != dim) throw ValidationError("field coefficient has wrong shape");
      y.add(static_cast<int>(integer(term[0], "power")), m);
    }
    fields.push_back(std::move(y));
  }
  if (vacuum.size() != dim) throw ValidationError("vacuum has wrong length");
  return vertex::VertexData(vacuum, shift, std::move(fields), static_cast<int>(k));
}

inline Json to_json(const vertex::VertexData& v) {
  Json out;
  out["dim"] = v.dim();
  out["vacuum"] = to_json(v.vacuum());
  out["shift"] = to_json(v.shift());
  out["truncation"] = v.truncation();
  Json fields = Json::array();
  for (const auto& f : v.fields()) {
    Json terms = Json::array();
    for (const auto& [p, m] : f.terms()) terms.push_back(Json::array({p, to_json(m)}));
    fields.push_back(std::move(terms));
  }
  out["fields"] = std::move(fields);
  return out;
}

// --- weiss -----------------------------------------------------------------------

struct CoverSpec {
  weiss::FinitePointModel model;
  weiss::CoverFamily family;
};

/// {"points": {"labels": [...], "coordinates": [...]}} or
/// {"grid": {"lo", "hi", "dim"}}, plus "members" as lists of labels.
inline CoverSpec cover_spec_from_json(const Json& j) {
  weiss::FinitePointModel m;
  if (j.contains("grid")) {
    const Json& g = j["grid"];
    m = weiss::FinitePointModel::grid(integer(field(g, "lo"), "lo"), integer(field(g, "hi"), "hi"),
                                      natural(field(g, "dim"), "dim"));
  } else {
    const Json& p = field(j, "points");
    std::vector<std::string> labels;
    for (const auto& l : array_of(field(p, "labels"), "labels")) labels.push_back(text(l, "label"));
    std::vector<std::vector<long>> coords;
    if (p.contains("coordinates")) {
      for (const auto& c : array_of(p["coordinates"], "coordinates")) {
        std::vector<long> x;
        for (const auto& v : array_of(c, "coordinate")) x.push_back(integer(v, "coordinate"));
        coords.push_back(std::move(x));
      }
    }
    m = weiss::FinitePointModel(std::move(labels), std::move(coords));
  }
  std::vector<weiss::Subset> members;
  for (const auto& mem : array_of(field(j, "members"), "members")) {
    weiss::Subset s;
    for (const auto& l : array_of(mem, "member")) s.push_back(m.index_of(text(l, "label")));
    members.push_back(std::move(s));
  }
  weiss::CoverFamily c(m, std::move(members));
  return {std::move(m), std::move(c)};
}

inline Json labels_of(const weiss::FinitePointModel& m, const weiss::Subset& s) {
  Json out = Json::array();
  for (auto i : s) out.push_back(m.labels.at(i));
  return out;
}

// --- factline ----------------------------------------------------------------------

inline factline::Interval interval_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("interval must be an endpoint pair");
  return factline::Interval(rational_from_json(j[0]), rational_from_json(j[1]));
}

inline Json to_json(const factline::Interval& i) { return Json::array({i.a.str(), i.b.str()}); }

/// {"ambient": [a, b], "parts": [[a, b], ...]}.
inline factline::IntervalConfig interval_config_from_json(const Json& j) {
  std::vector<factline::Interval> parts;
  for (const auto& p : array_of(field(j, "parts"), "parts")) parts.push_back(interval_from_json(p));
  return factline::IntervalConfig(std::move(parts), interval_from_json(field(j, "ambient")));
}

inline Json to_json(const factline::IntervalConfig& c) {
  Json parts = Json::array();
  for (const auto& p : c.parts()) parts.push_back(to_json(p));
  Json out;
  out["ambient"] = to_json(c.ambient());
  out["parts"] = std::move(parts);
  return out;
}

inline factline::NestedConfig nested_config_from_json(const Json& j) {
  std::vector<factline::IntervalConfig> inner;
  for (const auto& c : array_of(field(j, "inner"), "inner")) inner.push_back(interval_config_from_json(c));
  return factline::NestedConfig(interval_config_from_json(field(j, "outer")), std::move(inner));
}

/// {"side": "left" | "right", "actions": one matrix per algebra basis vector}.
inline factline::ModuleAction module_from_json(const Json& j) {
  factline::ModuleAction m;
  const std::string side = text(field(j, "side"), "side");
  if (side == "left") {
    m.side = factline::ModuleAction::Side::Left;
  } else if (side == "right") {
    m.side = factline::ModuleAction::Side::Right;
  } else {
    throw ParseError("module side must be \"left\" or \"right\"");
  }
  for (const auto& a : array_of(field(j, "actions"), "actions")) m.actions.push_back(matrix_from_json(a));
  return m;
}

// --- operads ------------------------------------------------------------------------

inline operads::DoubleMonoidTable double_monoid_from_json(const Json& j) {
  operads::DoubleMonoidTable t;
  t.size = natural(field(j, "size"), "size");
  auto table = [](const Json& rows) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& r : array_of(rows, "table")) {
      std::vector<std::size_t> row;
      for (const auto& x : array_of(r, "table row")) row.push_back(natural(x, "table entry"));
      out.push_back(std::move(row));
    }
    return out;
  };
  t.first = table(field(j, "first"));
  t.second = table(field(j, "second"));
  t.first_unit = natural(field(j, "first_unit"), "first_unit");
  t.second_unit = natural(field(j, "second_unit"), "second_unit");
  if (j.contains("names")) {
    for (const auto& n : array_of(j["names"], "names")) t.names.push_back(text(n, "name"));
  }
  t.validate();
  return t;
}

// --- polynomials and weight tables -----------------------------------------------------

/// A list of [exponent, coefficient] pairs, or {"nvars": n, "terms": [...]}
/// (needed for the zero polynomial).
inline fieldtheory::Polynomial polynomial_from_json(const Json& j) {
  const Json* terms = &j;
  std::optional<std::size_t> nvars;
  if (j.is_object()) {
    nvars = natural(field(j, "nvars"), "nvars");
    terms = &field(j, "terms");
  }
  array_of(*terms, "polynomial terms");
  if (!nvars) {
    if (terms->empty()) throw ParseError("empty term list: give {\"nvars\": n, \"terms\": []}");
    const Json& first = (*terms)[0];
    if (!first.is_array() || first.size() != 2 || !first[0].is_array()) {
      throw ParseError("polynomial term must be an [exponent, coefficient] pair");
    }
    nvars = first[0].size();
  }
  fieldtheory::Polynomial p(*nvars);
  for (const auto& t : *terms) {
    if (!t.is_array() || t.size() != 2) throw ParseError("polynomial term must be an [exponent, coefficient] pair");
    fieldtheory::Exponent e;
    for (const auto& x : array_of(t[0], "exponent")) e.push_back(static_cast<unsigned>(natural(x, "exponent")));
    p.add(e, rational_from_json(t[1]));
  }
  return p;
}

inline Json to_json(const fieldtheory::Polynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, c.str()}));
  return out;
}

/// [[degree, weight, dim], ...] in (degree, weight) order.
inline Json to_json(const facthom::WeightTable& t) {
  Json out = Json::array();
  for (const auto& [deg, weight, dim] : t.triples()) out.push_back(Json::array({deg, weight, dim}));
  return out;
}

}  // namespace fieldwork::io
