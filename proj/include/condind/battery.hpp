#pragma once

#include "condind/check_report.hpp"
#include "condind/scenario.hpp"

namespace condind {

/// The partition verify-all conditions on: "H" when defined, else the first
/// nontrivial named partition, else the trivial one.
Partition default_sigma(const Scenario& s);

/// The full lemma battery on one scenario: indicator axioms and declared
/// flags, regularity and averaging, h+/h- decomposition, duals, extensions,
/// implication checks, risk measures, the extended conditional expectation
/// lemma and density recovery; with a filtration also the tower property,
/// projection and indicator martingales.
CheckReport verify_all(const Scenario& s, const CheckOptions& opt);

}  // namespace condind
