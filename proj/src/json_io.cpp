#include "symtensor/json_io.hpp"

namespace symtensor {

namespace {

Rational rational_from_json(const Json& value, std::string_view where) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string(where) + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw InputError(std::string(where) + ": rationals must be strings like \"p/q\"");
}

int positive_int(const Json& value, std::string_view where) {
  if (!value.is_number_integer() || value.get<long long>() < 1 || value.get<long long>() > 1'000'000)
    throw InputError(std::string(where) + ": expected a positive integer");
  return value.get<int>();
}

VectorFamily family_from_json(const Json& value, int dim, int n, std::string_view name) {
  if (!value.is_array()) throw InputError(std::string(name) + ": expected an array of vectors");
  if (static_cast<int>(value.size()) != n)
    throw InputError(std::string(name) + ": expected " + std::to_string(n) + " vectors (sum of lambda)");
  std::vector<std::vector<Rational>> vectors;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const Json& vec = value[i];
    const std::string where = std::string(name) + "[" + std::to_string(i) + "]";
    if (!vec.is_array() || static_cast<int>(vec.size()) != dim)
      throw InputError(where + ": expected " + std::to_string(dim) + " coordinates");
    std::vector<Rational> coords;
    for (const Json& x : vec) coords.push_back(rational_from_json(x, where));
    vectors.push_back(std::move(coords));
  }
  return VectorFamily(dim, std::move(vectors));
}

Json matching_fields(Json out, const ColumnMatching& m) {
  out["sigma"] = m.targets;
  Json scalars = Json::array();
  for (const Rational& c : m.scalars) scalars.push_back(to_json(c));
  out["scalars"] = std::move(scalars);
  out["product"] = to_json(m.product);
  return out;
}

}  // namespace

ProblemInstance parse_instance(const Json& doc) {
  if (!doc.is_object()) throw InputError("instance: expected a JSON object");
  for (const char* key : {"dim", "lambda", "v"})
    if (!doc.contains(key)) throw InputError(std::string("instance: missing \"") + key + "\"");

  ProblemInstance inst;
  inst.dim = positive_int(doc["dim"], "dim");

  const Json& lam = doc["lambda"];
  if (!lam.is_array() || lam.empty()) throw InputError("lambda: expected a nonempty array");
  std::vector<int> parts;
  for (const Json& p : lam) parts.push_back(positive_int(p, "lambda"));
  try {
    inst.lambda = Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("lambda: ") + e.what());
  }

  inst.v = family_from_json(doc["v"], inst.dim, inst.lambda.size(), "v");
  if (doc.contains("u") && !doc["u"].is_null())
    inst.u = family_from_json(doc["u"], inst.dim, inst.lambda.size(), "u");
  return inst;
}

ProblemInstance parse_instance_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return parse_instance(doc);
}

Json to_json(const Rational& x) { return format_rational(x); }

Json to_json(const Partition& lambda) { return lambda.parts(); }

Json to_json(const ColumnSystem& system) { return system.columns(); }

Json to_json(const Tableau& t) { return t.rows(); }

Json to_json(const SparseTensor& x) {
  Json entries = Json::array();
  for (const auto& [index, c] : x.entries()) {
    Json e;
    e["index"] = index;
    e["coeff"] = to_json(c);
    entries.push_back(std::move(e));
  }
  Json out;
  out["dim"] = x.dim();
  out["order"] = x.order();
  out["entries"] = std::move(entries);
  return out;
}

SparseTensor tensor_from_json(const Json& doc) {
  try {
    if (!doc.is_object()) throw InputError("tensor: expected a JSON object");
    SparseTensor x(positive_int(doc.at("dim"), "dim"), doc.at("order").get<int>());
    for (const Json& e : doc.at("entries")) {
      const auto index = e.at("index").get<MultiIndex>();
      if (x.entries().count(index)) throw InputError("tensor: duplicate index");
      const Rational c = rational_from_json(e.at("coeff"), "coeff");
      if (c == 0) throw InputError("tensor: zero coefficient stored");
      x.add(index, c);
    }
    return x;
  } catch (const Json::exception& e) {
    throw InputError(std::string("tensor: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("tensor: ") + e.what());
  }
}

Json to_json(const EqualityVerdict& verdict) {
  Json out;
  out["equal"] = verdict.equal;
  out["mode"] = std::string(to_string(verdict.mode));
  Json failures = Json::array();
  for (const auto& f : verdict.failures) {
    Json item;
    item["system"] = to_json(f.system);
    item["reason"] = std::string(to_string(f.reason));
    if (f.attempt) item = matching_fields(std::move(item), *f.attempt);
    failures.push_back(std::move(item));
  }
  out["failures"] = std::move(failures);
  Json witnesses = Json::array();
  for (const auto& w : verdict.witnesses) {
    Json item;
    item["system"] = to_json(w.system);
    witnesses.push_back(matching_fields(std::move(item), w.matching));
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json to_json(const CharacterTable& table) {
  Json out;
  out["n"] = table.n;
  Json classes = Json::array();
  for (const auto& c : table.classes) classes.push_back(to_json(c));
  out["classes"] = std::move(classes);
  out["class_sizes"] = table.class_sizes;
  Json partitions = Json::array();
  for (const auto& p : table.partitions) partitions.push_back(to_json(p));
  out["partitions"] = std::move(partitions);
  out["rows"] = table.rows;
  return out;
}

Json gamas_report(const GamasResult& gamas, const StandardGamasResult& standard) {
  Json out;
  out["nonzero"] = gamas.nonzero;
  out["witness_system"] = gamas.witness ? to_json(*gamas.witness) : Json(nullptr);
  out["standard_witness"] = standard.witness ? to_json(*standard.witness) : Json(nullptr);
  return out;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace symtensor
