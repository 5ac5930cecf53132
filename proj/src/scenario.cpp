#include "condind/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "condind/error.hpp"

namespace condind {

using Json = nlohmann::ordered_json;

Partition Scenario::partition(const std::string& name) const {
  if (auto it = partitions.find(name); it != partitions.end()) return it->second;
  if (name == "trivial") return Partition::trivial(space->size());
  if (name == "discrete") return Partition::discrete(space->size());
  throw UnknownName("unknown partition '" + name + "'");
}

const RandomVariable& Scenario::variable(const std::string& name) const {
  if (auto it = variables.find(name); it != variables.end()) return it->second;
  if (auto it = densities.find(name); it != densities.end()) return it->second;
  throw UnknownName("unknown variable '" + name + "'");
}

const Filtration& Scenario::require_filtration() const {
  if (!filtration) throw ValidationError("scenario has no filtration");
  return *filtration;
}

bool operator==(const Scenario& a, const Scenario& b) {
  return *a.space == *b.space && a.partitions == b.partitions && a.filtration_names == b.filtration_names &&
         a.variables == b.variables && a.densities == b.densities;
}

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

std::string value_text(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  throw ValidationError(where + ": expected a number or a string");
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ValidationError(where + ": missing '" + key + "'");
  return obj.at(key);
}

std::size_t atom_index(const ProbabilitySpace& space, const std::string& label, const std::string& where) {
  auto idx = space.index_of(label);
  if (!idx) throw ValidationError(where + ": unknown atom '" + label + "'");
  return *idx;
}

RandomVariable read_variable(const SpacePtr& space, const Json& j, const std::string& where) {
  std::vector<ExtReal> values(space->size());
  std::vector<bool> seen(space->size(), false);
  auto parse_value = [&](const Json& v, const std::string& at) {
    try {
      return ExtReal::parse(value_text(v, at));
    } catch (const std::invalid_argument& e) {
      throw ValidationError(at + ": " + e.what());
    }
  };
  if (j.is_array()) {
    if (j.size() != space->size())
      throw ValidationError(where + ": expected " + std::to_string(space->size()) + " values");
    for (std::size_t i = 0; i < j.size(); ++i) {
      values[i] = parse_value(j[i], where + "[" + std::to_string(i) + "]");
      seen[i] = true;
    }
  } else if (j.is_object()) {
    for (const auto& [label, v] : j.items()) {
      std::size_t a = atom_index(*space, label, where);
      values[a] = parse_value(v, where + "." + label);
      seen[a] = true;
    }
  } else {
    throw ValidationError(where + ": expected an object of atom values");
  }
  for (std::size_t a = 0; a < seen.size(); ++a)
    if (!seen[a]) throw ValidationError(where + ": no value for atom '" + space->label(a) + "'");
  return RandomVariable(space, std::move(values));
}

Json variable_json(const RandomVariable& x) {
  Json j = Json::object();
  for (std::size_t a = 0; a < x.size(); ++a) j[x.space()->label(a)] = x[a].to_string();
  return j;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!root.is_object()) throw ValidationError("scenario: expected a JSON object");

  Scenario s;
  const Json& atoms = member(root, "atoms", "scenario");
  if (!atoms.is_array() || atoms.empty()) throw ValidationError("atoms: expected a nonempty array");
  std::vector<std::string> labels;
  std::vector<Rational> probs;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string where = "atoms[" + std::to_string(i) + "]";
    const Json& lab = member(atoms[i], "label", where);
    if (!lab.is_string()) throw ValidationError(where + ".label: expected a string");
    labels.push_back(lab.get<std::string>());
    try {
      probs.push_back(parse_rational(value_text(member(atoms[i], "prob", where), where + ".prob")));
    } catch (const std::invalid_argument& e) {
      throw ValidationError(where + ".prob: " + e.what());
    }
  }
  s.space = ProbabilitySpace::create(std::move(labels), std::move(probs));

  if (root.contains("partitions")) {
    const Json& parts = root.at("partitions");
    if (!parts.is_object()) throw ValidationError("partitions: expected an object");
    for (const auto& [name, cells_json] : parts.items()) {
      const std::string where = "partitions." + name;
      if (!cells_json.is_array()) throw ValidationError(where + ": expected an array of cells");
      std::vector<std::vector<std::size_t>> cells;
      for (const auto& cell : cells_json) {
        if (!cell.is_array()) throw ValidationError(where + ": each cell must be an array of labels");
        std::vector<std::size_t> c;
        for (const auto& lab : cell) {
          if (!lab.is_string()) throw ValidationError(where + ": atom labels must be strings");
          c.push_back(atom_index(*s.space, lab.get<std::string>(), where));
        }
        cells.push_back(std::move(c));
      }
      try {
        s.partitions.emplace(name, Partition(s.space->size(), std::move(cells)));
      } catch (const ValidationError& e) {
        throw ValidationError(where + ": " + e.what());
      }
    }
  }

  if (root.contains("filtration")) {
    const Json& f = root.at("filtration");
    if (!f.is_array()) throw ValidationError("filtration: expected an array of partition names");
    std::vector<Partition> parts;
    for (const auto& name : f) {
      if (!name.is_string()) throw ValidationError("filtration: expected partition names");
      s.filtration_names.push_back(name.get<std::string>());
      try {
        parts.push_back(s.partition(s.filtration_names.back()));
      } catch (const UnknownName& e) {
        throw ValidationError(std::string("filtration: ") + e.what());
      }
    }
    s.filtration = Filtration(s.filtration_names, std::move(parts));
  }

  for (const char* key : {"variables", "densities"}) {
    if (!root.contains(key)) continue;
    const Json& vars = root.at(key);
    if (!vars.is_object()) throw ValidationError(std::string(key) + ": expected an object");
    auto& target = std::string(key) == "variables" ? s.variables : s.densities;
    for (const auto& [name, v] : vars.items())
      target.emplace(name, read_variable(s.space, v, std::string(key) + "." + name));
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read scenario file '" + path + "'", 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario& s) {
  Json root;
  Json atoms = Json::array();
  for (std::size_t a = 0; a < s.space->size(); ++a)
    atoms.push_back(Json{{"label", s.space->label(a)}, {"prob", rational_to_string(s.space->prob(a))}});
  root["atoms"] = atoms;
  Json parts = Json::object();
  for (const auto& [name, p] : s.partitions) {
    Json cells = Json::array();
    for (const auto& c : p.cells()) {
      Json cell = Json::array();
      for (auto a : c) cell.push_back(s.space->label(a));
      cells.push_back(cell);
    }
    parts[name] = cells;
  }
  root["partitions"] = parts;
  if (s.filtration) root["filtration"] = s.filtration_names;
  Json vars = Json::object();
  for (const auto& [name, x] : s.variables) vars[name] = variable_json(x);
  root["variables"] = vars;
  if (!s.densities.empty()) {
    Json dens = Json::object();
    for (const auto& [name, x] : s.densities) dens[name] = variable_json(x);
    root["densities"] = dens;
  }
  return root.dump(2) + "\n";
}

Scenario canonical_scenario() {
  return parse_scenario(R"({
  "atoms": [{"label": "a", "prob": "1/4"}, {"label": "b", "prob": "1/4"},
            {"label": "c", "prob": "1/4"}, {"label": "d", "prob": "1/4"}],
  "partitions": {"F0": [["a", "b", "c", "d"]], "H": [["a", "b"], ["c", "d"]],
                 "F1": [["a", "b"], ["c", "d"]], "F2": [["a"], ["b"], ["c"], ["d"]]},
  "filtration": ["F0", "F1", "F2"],
  "variables": {"X": {"a": "1", "b": "3", "c": "2", "d": "6"}}
})");
}

}  // namespace condind
