#pragma once

#include <string>

#include <json.hpp>

#include "condind/check_report.hpp"
#include "condind/density.hpp"
#include "condind/stochastic.hpp"

namespace condind {

using Json = nlohmann::ordered_json;

/// {"a": "3", "b": "3", ...} in atom order; values are rational strings,
/// "inf" or "-inf".
Json to_json(const RandomVariable& x);
Json to_json(const Witness& w);
Json to_json(const CheckReport& r);
Json to_json(const DensityReport& d);
/// {"t0": {...}, "t1": {...}} keyed by date label.
Json to_json(const AdaptedProcess& p, const Filtration& f);

/// Indented one-line-per-node rendering of a report tree.
std::string render_text(const CheckReport& r);

}  // namespace condind
