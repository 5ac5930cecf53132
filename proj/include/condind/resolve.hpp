#pragma once

#include <string>

#include "condind/indicator.hpp"
#include "condind/scenario.hpp"
#include "condind/stochastic.hpp"

namespace condind {

/// Builds an indicator from its name with target `h`:
///   esssup, essinf, condexp, condexp-ext, weighted:<density>,
///   dual:<name>, mix:<name>, famsup:<n1,n2,...>, faminf:<n1,n2,...>,
///   lowext:<name>:<E1,E2,...>, upext:<name>:<E1,E2,...>
/// Throws UnknownName.
IndicatorSpec resolve_indicator(const Scenario& s, const std::string& name, const Partition& h);

/// One indicator per filtration date. `spec` is either one name used at
/// every date or ';'-separated names, one per date.
StochasticIndicator resolve_family(const Scenario& s, const std::string& spec);

}  // namespace condind
