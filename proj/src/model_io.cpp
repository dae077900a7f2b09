// SPDX-License-Identifier: Apache-2.0

#include "hli/model_io.hpp"

#include <fstream>
#include <sstream>

#include "hli/error.hpp"

namespace hli {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, json::value_t type, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::FormatError, where + ": missing \"" + key + "\"");
  if (it->type() != type && !(type == json::value_t::number_unsigned && it->is_number_integer())) {
    throw Error(ErrorKind::FormatError, where + ": \"" + key + "\" has the wrong type");
  }
  return *it;
}

Rational01 rational_field(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Rational01::parse(v.get<std::string>());
    } catch (const Error& e) {
      throw Error(e.kind(), where + ": " + e.message());
    }
  }
  if (v.is_number_integer()) return Rational01(mpq_class(v.get<long>()));
  throw Error(ErrorKind::FormatError, where + ": expected a \"p/q\" string");
}

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(key);
  while (std::getline(in, item, ',')) parts.push_back(item);
  if (!key.empty() && key.back() == ',') parts.emplace_back();
  return parts;
}

std::string join_key(const Tuple& t, const std::vector<std::string>& universe) {
  std::string key;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) key += ',';
    key += universe[t[i]];
  }
  return key;
}

template <class Cell, class Decode>
std::vector<Cell> read_table(const json& table, std::size_t arity, const std::vector<std::string>& universe,
                             const std::string& where, Decode decode) {
  const std::size_t n = universe.size();
  const std::size_t cells = table_size(n, arity);
  std::vector<std::optional<Cell>> slots(cells);
  for (const auto& [key, value] : table.items()) {
    const auto parts = split_key(key);
    if (parts.size() != arity) throw Error(ErrorKind::FormatError, where + ": key \"" + key + "\" has the wrong arity");
    Tuple t;
    for (const auto& p : parts) {
      const auto it = std::find(universe.begin(), universe.end(), p);
      if (it == universe.end()) throw Error(ErrorKind::FormatError, where + ": unknown element \"" + p + "\"");
      t.push_back(static_cast<Element>(it - universe.begin()));
    }
    slots[tuple_index(t, n)] = decode(value, where + "[" + key + "]");
  }
  std::vector<Cell> out;
  out.reserve(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    if (!slots[i]) {
      throw Error(ErrorKind::TableIncomplete, where + ": no entry for (" + join_key(tuple_at(i, arity, n), universe) + ")");
    }
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

std::size_t read_arity(const json& entry, const std::string& where) {
  const json& a = require(entry, "arity", json::value_t::number_unsigned, where);
  if (!a.is_number_integer() || a.get<long long>() < 1) {
    throw Error(ErrorKind::FormatError, where + ": arity must be a positive integer");
  }
  return a.get<std::size_t>();
}

}  // namespace

WeakProbModel model_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::FormatError, "model must be a JSON object");
  std::vector<std::string> universe;
  for (const auto& e : require(j, "universe", json::value_t::array, "model")) {
    if (!e.is_string()) throw Error(ErrorKind::FormatError, "universe entries must be strings");
    universe.push_back(e.get<std::string>());
  }
  if (universe.empty()) throw Error(ErrorKind::FormatError, "universe must be non-empty");

  const json& mj = require(j, "measure", json::value_t::object, "model");
  std::vector<Rational01> measure;
  for (const auto& name : universe) {
    const auto it = mj.find(name);
    if (it == mj.end()) throw Error(ErrorKind::TableIncomplete, "measure: no weight for \"" + name + "\"");
    measure.push_back(rational_field(*it, "measure[" + name + "]"));
  }
  for (const auto& [name, v] : mj.items()) {
    if (std::find(universe.begin(), universe.end(), name) == universe.end()) {
      throw Error(ErrorKind::FormatError, "measure: unknown element \"" + name + "\"");
    }
  }

  std::map<std::string, PredicateTable> predicates;
  if (j.contains("predicates")) {
    for (const auto& [name, entry] : require(j, "predicates", json::value_t::object, "model").items()) {
      const std::string where = "predicates." + name;
      if (!entry.is_object()) throw Error(ErrorKind::FormatError, where + " must be an object");
      const std::size_t arity = read_arity(entry, where);
      auto values = read_table<Rational01>(require(entry, "table", json::value_t::object, where), arity, universe,
                                           where, rational_field);
      predicates.emplace(name, PredicateTable{arity, std::move(values)});
    }
  }

  std::map<std::string, FunctionTable> functions;
  if (j.contains("functions")) {
    for (const auto& [name, entry] : require(j, "functions", json::value_t::object, "model").items()) {
      const std::string where = "functions." + name;
      if (!entry.is_object()) throw Error(ErrorKind::FormatError, where + " must be an object");
      const std::size_t arity = read_arity(entry, where);
      auto decode = [&](const json& v, const std::string& at) -> Element {
        if (!v.is_string()) throw Error(ErrorKind::FormatError, at + ": expected an element name");
        const auto it = std::find(universe.begin(), universe.end(), v.get<std::string>());
        if (it == universe.end()) throw Error(ErrorKind::ValueOutOfRange, at + ": not an element of the universe");
        return static_cast<Element>(it - universe.begin());
      };
      auto values = read_table<Element>(require(entry, "table", json::value_t::object, where), arity, universe, where,
                                        decode);
      functions.emplace(name, FunctionTable{arity, std::move(values)});
    }
  }

  std::map<std::string, Element> constants;
  if (j.contains("constants")) {
    for (const auto& [name, v] : require(j, "constants", json::value_t::object, "model").items()) {
      if (!v.is_string()) throw Error(ErrorKind::FormatError, "constants." + name + ": expected an element name");
      const auto it = std::find(universe.begin(), universe.end(), v.get<std::string>());
      if (it == universe.end()) throw Error(ErrorKind::ValueOutOfRange, "constants." + name + ": not an element");
      constants.emplace(name, static_cast<Element>(it - universe.begin()));
    }
  }

  return WeakProbModel(std::move(universe), std::move(measure), std::move(predicates), std::move(functions),
                       std::move(constants));
}

json model_to_json(const WeakProbModel& model) {
  const auto& universe = model.universe();
  json j;
  j["universe"] = universe;
  json measure = json::object();
  for (Element e = 0; e < model.size(); ++e) measure[universe[e]] = model.measure(e).str();
  j["measure"] = measure;

  json predicates = json::object();
  for (const auto& [name, table] : model.predicates()) {
    json cells = json::object();
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      cells[join_key(tuple_at(i, table.arity, model.size()), universe)] = table.values[i].str();
    }
    predicates[name] = {{"arity", table.arity}, {"table", cells}};
  }
  j["predicates"] = predicates;

  json functions = json::object();
  for (const auto& [name, table] : model.functions()) {
    json cells = json::object();
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      cells[join_key(tuple_at(i, table.arity, model.size()), universe)] = universe[table.values[i]];
    }
    functions[name] = {{"arity", table.arity}, {"table", cells}};
  }
  j["functions"] = functions;

  json constants = json::object();
  for (const auto& [name, e] : model.constants()) constants[name] = universe[e];
  j["constants"] = constants;
  return j;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FormatError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::FormatError, path.string() + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

WeakProbModel load_model(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  try {
    return model_from_json(j);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.message());
  }
}

}  // namespace hli
