#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "condind/filtration.hpp"
#include "condind/random_variable.hpp"

namespace condind {

/// A loaded scenario: the space, named partitions, an optional filtration
/// over partition names, and named variables and densities.
struct Scenario {
  SpacePtr space;
  std::map<std::string, Partition> partitions;
  std::vector<std::string> filtration_names;
  std::optional<Filtration> filtration;
  std::map<std::string, RandomVariable> variables;
  std::map<std::string, RandomVariable> densities;

  /// Named partition; "trivial" and "discrete" resolve when not defined.
  /// Throws UnknownName.
  Partition partition(const std::string& name) const;
  /// Looks in variables, then densities. Throws UnknownName.
  const RandomVariable& variable(const std::string& name) const;
  /// Throws ValidationError when the scenario has no filtration.
  const Filtration& require_filtration() const;
};

bool operator==(const Scenario& a, const Scenario& b);

/// Parses the JSON scenario format. Throws ParseError (with line) on
/// malformed JSON, ValidationError on wrong shapes or broken invariants.
Scenario parse_scenario(const std::string& text);
/// Reads and parses a file. Throws ParseError when unreadable.
Scenario load_scenario(const std::string& path);
/// JSON text that parse_scenario reads back to an equal scenario.
std::string scenario_to_json(const Scenario& s);

/// Four equally likely atoms a..d, H = {{a,b},{c,d}}, filtration F0 trivial,
/// F1 = H, F2 discrete, X = (1, 3, 2, 6).
Scenario canonical_scenario();

}  // namespace condind
