#include "hfsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hfsim/error.hpp"

namespace hfsim {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

std::vector<double> numbers(const Json& arr, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_number()) {
      throw ParseError(where + "[" + std::to_string(k) + "]: expected a number");
    }
    out.push_back(arr[k].get<double>());
  }
  return out;
}

HesitantElement element_at(const Json& arr, const std::string& where) {
  const auto raw = numbers(arr, where);
  try {
    return make_element(raw, true);
  } catch (const EmptyElement&) {
    throw ValidationError("EmptyElement", where + ": no membership grades");
  } catch (const OutOfRange& e) {
    throw ValidationError("OutOfRange", where + ": grade " + std::to_string(e.value()) +
                                            " outside [0,1]");
  }
}

WeightVector weights_at(const Json& arr, const std::string& where) {
  try {
    return WeightVector(numbers(arr, where));
  } catch (const WeightNotNormalized& e) {
    throw ValidationError("WeightSum", where + ": " + e.what());
  }
}

HesitantSet set_at(const Json& obj, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object of element -> grades");
  std::vector<HesitantSet::Entry> entries;
  for (const auto& [id, grades] : obj.items()) {
    entries.emplace_back(id, element_at(grades, where + "." + id));
  }
  try {
    return HesitantSet(std::move(entries));
  } catch (const InvalidSpec& e) {
    throw ValidationError("Universe", where + ": " + e.what());
  }
}

DecisionProblem problem_from(const Json& doc) {
  const Json& attrs = require(doc, "attributes", "document");
  if (!attrs.is_array()) throw ParseError("attributes: expected an array of names");
  std::vector<std::string> attributes;
  for (std::size_t k = 0; k < attrs.size(); ++k) {
    if (!attrs[k].is_string()) {
      throw ParseError("attributes[" + std::to_string(k) + "]: expected a string");
    }
    attributes.push_back(attrs[k].get<std::string>());
  }

  const Json& alts = require(doc, "alternatives", "document");
  if (!alts.is_object()) throw ParseError("alternatives: expected an object of name -> cells");
  std::vector<Alternative> alternatives;
  for (const auto& [name, cells] : alts.items()) {
    const std::string where = "alternatives." + name;
    if (!cells.is_array()) throw ParseError(where + ": expected one grade list per attribute");
    if (cells.size() != attributes.size()) {
      throw ValidationError("AttributeCount", where + ": " + std::to_string(cells.size()) +
                                                  " grade lists for " +
                                                  std::to_string(attributes.size()) +
                                                  " attributes");
    }
    std::vector<HesitantSet::Entry> entries;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      entries.emplace_back(attributes[i],
                           element_at(cells[i], where + "[" + std::to_string(i) + "]"));
    }
    try {
      alternatives.push_back({name, HesitantSet(std::move(entries))});
    } catch (const InvalidSpec& e) {
      throw ValidationError("Universe", where + ": " + e.what());
    }
  }

  auto weights = weights_at(require(doc, "weights", "document"), "weights");
  if (weights.size() != attributes.size()) {
    throw ValidationError("WeightCount", "weights: " + std::to_string(weights.size()) +
                                             " entries for " + std::to_string(attributes.size()) +
                                             " attributes");
  }
  try {
    return DecisionProblem(std::move(attributes), std::move(alternatives), std::move(weights));
  } catch (const InvalidProblem& e) {
    throw ValidationError("InvalidProblem", e.what());
  }
}

SetPair pair_from(const Json& doc) {
  SetPair pair{set_at(require(doc, "A", "document"), "A"), set_at(require(doc, "B", "document"), "B"),
               std::nullopt};
  bool same_universe = pair.a.size() == pair.b.size();
  for (std::size_t i = 0; same_universe && i < pair.a.size(); ++i) {
    same_universe = pair.b.index_of(pair.a.id(i)) < pair.b.size();
  }
  if (!same_universe) throw ValidationError("Universe", "A and B are defined on different elements");
  if (doc.contains("weights")) pair.weights = weights_at(doc.at("weights"), "weights");
  if (pair.weights && pair.weights->size() != pair.a.size()) {
    throw ValidationError("WeightCount", "weights: " + std::to_string(pair.weights->size()) +
                                             " entries for " + std::to_string(pair.a.size()) +
                                             " elements");
  }
  return pair;
}

}  // namespace

DecisionProblem parse_problem(std::string_view text) { return problem_from(parse_json(text)); }

SetPair parse_pair(std::string_view text) { return pair_from(parse_json(text)); }

Document parse_document(std::string_view text) {
  const Json doc = parse_json(text);
  if (doc.is_object() && doc.contains("alternatives")) return problem_from(doc);
  if (doc.is_object() && doc.contains("A")) return pair_from(doc);
  throw ParseError("document: expected either 'alternatives' or 'A'/'B' at the top level");
}

std::string emit_problem(const DecisionProblem& problem) {
  Json doc;
  doc["attributes"] = problem.attributes();
  doc["weights"] = std::vector<double>(problem.weights().values().begin(),
                                       problem.weights().values().end());
  Json alts = Json::object();
  for (const auto& alt : problem.alternatives()) {
    Json cells = Json::array();
    for (const auto& [id, element] : alt.evaluations.entries()) {
      cells.push_back(std::vector<double>(element.values().begin(), element.values().end()));
    }
    alts[alt.name] = std::move(cells);
  }
  doc["alternatives"] = std::move(alts);
  return doc.dump(2) + "\n";
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hfsim
