#include "nilalg/document.hpp"

#include "nilalg/error.hpp"

#include <algorithm>
#include <set>

namespace nilalg {

namespace {

Error schema(const std::string& where, const std::string& what) {
  return Error(ErrorCode::Schema, (where.empty() ? std::string("/") : where) + ": " + what);
}

std::string child(const std::string& parent, const std::string& key) { return parent + "/" + key; }
std::string child(const std::string& parent, std::size_t index) { return parent + "/" + std::to_string(index); }

const Json& require(const Json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw schema(where, std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw schema(where, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw schema(where, "integer out of range");
  }
  return static_cast<int>(v);
}

Rational as_rational(const Json& j, const std::string& where) {
  if (!j.is_string()) throw schema(where, "coefficient must be a \"num/den\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw schema(where, e.what());
  }
}

void warn_unknown(const Json& obj, const std::string& where, std::initializer_list<const char*> known,
                  std::vector<std::string>& warnings) {
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return key == k; })) {
      warnings.push_back("ignoring unknown field " + child(where, key));
    }
  }
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

AlgebraDocument parse_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Schema, "malformed JSON at " + line_column(text, e.byte));
  }
  if (!root.is_object()) throw schema("", "document must be a JSON object");

  AlgebraDocument doc;
  warn_unknown(root, "", {"dim", "basis", "products", "metadata"}, doc.warnings);

  const int dim = as_int(require(root, "", "dim"), "/dim");
  if (dim < 0) throw schema("/dim", "dimension must be non-negative");

  std::vector<std::string> labels;
  if (auto it = root.find("basis"); it != root.end()) {
    if (!it->is_array()) throw schema("/basis", "expected a list of labels");
    if (static_cast<int>(it->size()) != dim) {
      throw schema("/basis", "has " + std::to_string(it->size()) + " labels for dimension " + std::to_string(dim));
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& label = (*it)[i];
      if (!label.is_string()) throw schema(child("/basis", i), "label must be a string");
      labels.push_back(label.get<std::string>());
    }
  }

  ProductTable table;
  const Json& products = require(root, "", "products");
  if (!products.is_array()) throw schema("/products", "expected a list");
  for (std::size_t r = 0; r < products.size(); ++r) {
    const std::string at = child("/products", r);
    const Json& rec = products[r];
    if (!rec.is_object()) throw schema(at, "expected an object");
    warn_unknown(rec, at, {"left", "right", "result"}, doc.warnings);
    const int left = as_int(require(rec, at, "left"), child(at, "left"));
    const int right = as_int(require(rec, at, "right"), child(at, "right"));
    if (left < 1 || left > dim) throw schema(child(at, "left"), "index out of range 1.." + std::to_string(dim));
    if (right < 1 || right > dim) throw schema(child(at, "right"), "index out of range 1.." + std::to_string(dim));
    if (table.count({left, right})) throw schema(at, "product listed twice");

    const Json& result = require(rec, at, "result");
    const std::string rat = child(at, "result");
    if (!result.is_array()) throw schema(rat, "expected a list");
    std::vector<Term> terms;
    std::set<int> seen;
    for (std::size_t t = 0; t < result.size(); ++t) {
      const std::string tat = child(rat, t);
      const Json& term = result[t];
      if (!term.is_object()) throw schema(tat, "expected an object");
      warn_unknown(term, tat, {"index", "coeff"}, doc.warnings);
      const int index = as_int(require(term, tat, "index"), child(tat, "index"));
      if (index < 1 || index > dim) throw schema(child(tat, "index"), "index out of range 1.." + std::to_string(dim));
      if (!seen.insert(index).second) throw schema(child(tat, "index"), "index repeated within one product");
      Rational coeff = as_rational(require(term, tat, "coeff"), child(tat, "coeff"));
      if (coeff.is_zero()) throw schema(child(tat, "coeff"), "zero coefficients must be omitted");
      terms.push_back({index, std::move(coeff)});
    }
    table[{left, right}] = std::move(terms);
  }

  if (auto it = root.find("metadata"); it != root.end()) {
    if (!it->is_object()) throw schema("/metadata", "expected an object");
    doc.metadata = *it;
  }
  try {
    doc.algebra = make_algebra(dim, table, labels);
  } catch (const Error& e) {
    throw schema("/basis", e.what());
  }
  return doc;
}

Json algebra_to_json(const Algebra& algebra, const Json& metadata) {
  Json root = Json::object();
  root["dim"] = algebra.dim();
  Json basis = Json::array();
  for (int i = 1; i <= algebra.dim(); ++i) basis.push_back(algebra.label(i));
  root["basis"] = std::move(basis);
  Json products = Json::array();
  for (const auto& [key, terms] : algebra.products()) {
    Json result = Json::array();
    for (const Term& t : terms) result.push_back(Json{{"index", t.index}, {"coeff", t.coeff.fraction_str()}});
    products.push_back(Json{{"left", key.first}, {"right", key.second}, {"result", std::move(result)}});
  }
  root["products"] = std::move(products);
  root["metadata"] = metadata.is_null() ? Json::object() : metadata;
  return root;
}

std::string emit(const Algebra& algebra, const Json& metadata) {
  return algebra_to_json(algebra, metadata).dump(2) + "\n";
}

Json family_to_json(const FamilySpec& spec) {
  Json j = Json::object();
  j["name"] = to_string(spec.family);
  j["n"] = spec.n;
  switch (spec.family) {
    case Family::NullFiliform:
      break;
    case Family::Filiform:
    case Family::QuasiFiliform:
      j["variant"] = spec.variant;
      break;
    case Family::DegreeP:
    case Family::PFiliformGraded:
      j["p"] = spec.p;
      break;
  }
  if (spec.alpha) j["alpha"] = spec.alpha->fraction_str();
  if (spec.family == Family::PFiliformGraded) {
    j["s"] = spec.s;
    Json b = Json::array();
    for (const auto& [key, value] : spec.b) {
      Json f = Json::array();
      for (const auto& c : value.f) f.push_back(c.fraction_str());
      b.push_back(Json{{"i", key.i}, {"j", key.j}, {"k", key.k}, {"t", key.t},
                       {"e", value.e.fraction_str()}, {"f", std::move(f)}});
    }
    j["b"] = std::move(b);
  }
  return j;
}

FamilySpec family_from_json(const Json& j) {
  const std::string at = "/metadata/family";
  if (!j.is_object()) throw schema(at, "expected an object");
  FamilySpec spec;
  const Json& name = require(j, at, "name");
  if (!name.is_string()) throw schema(child(at, "name"), "expected a string");
  try {
    spec.family = parse_family(name.get<std::string>());
  } catch (const Error& e) {
    throw schema(child(at, "name"), e.what());
  }
  spec.n = as_int(require(j, at, "n"), child(at, "n"));
  if (auto it = j.find("p"); it != j.end()) spec.p = as_int(*it, child(at, "p"));
  if (auto it = j.find("variant"); it != j.end()) spec.variant = as_int(*it, child(at, "variant"));
  if (auto it = j.find("alpha"); it != j.end()) spec.alpha = as_rational(*it, child(at, "alpha"));
  if (auto it = j.find("s"); it != j.end()) {
    if (!it->is_array()) throw schema(child(at, "s"), "expected a list");
    for (std::size_t i = 0; i < it->size(); ++i) spec.s.push_back(as_int((*it)[i], child(child(at, "s"), i)));
  }
  if (auto it = j.find("b"); it != j.end()) {
    if (!it->is_array()) throw schema(child(at, "b"), "expected a list");
    for (std::size_t r = 0; r < it->size(); ++r) {
      const std::string bat = child(child(at, "b"), r);
      const Json& rec = (*it)[r];
      if (!rec.is_object()) throw schema(bat, "expected an object");
      BKey key{as_int(require(rec, bat, "i"), child(bat, "i")), as_int(require(rec, bat, "j"), child(bat, "j")),
               as_int(require(rec, bat, "k"), child(bat, "k")), as_int(require(rec, bat, "t"), child(bat, "t"))};
      BValue value;
      if (auto e = rec.find("e"); e != rec.end()) value.e = as_rational(*e, child(bat, "e"));
      if (auto f = rec.find("f"); f != rec.end()) {
        if (!f->is_array()) throw schema(child(bat, "f"), "expected a list");
        for (std::size_t l = 0; l < f->size(); ++l) value.f.push_back(as_rational((*f)[l], child(child(bat, "f"), l)));
      }
      if (!spec.b.emplace(key, std::move(value)).second) throw schema(bat, "b-key listed twice");
    }
  }
  return spec;
}

std::string emit_family(const FamilySpec& spec) {
  Json metadata = Json::object();
  metadata["description"] = describe(spec);
  metadata["family"] = family_to_json(spec);
  return emit(build(spec), metadata);
}

std::optional<FamilySpec> document_family(const AlgebraDocument& doc) {
  auto it = doc.metadata.find("family");
  if (it == doc.metadata.end()) return std::nullopt;
  return family_from_json(*it);
}

Json constraints_to_json(const ConstraintSystem& system) {
  Json j = Json::object();
  j["unknowns"] = system.unknowns;
  j["equations"] = system.equation_strings();
  return j;
}

}  // namespace nilalg
