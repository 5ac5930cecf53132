#pragma once

#include <vector>

#include "condind/check_report.hpp"
#include "condind/indicator.hpp"
#include "condind/sampling.hpp"

namespace condind {

/// Draws inputs for one property from a seeded stream. The stream depends on
/// the seed and the property name, so every check is reproducible on its own.
class CaseSource {
 public:
  CaseSource(const IndicatorSpec& ind, const CheckOptions& opt, std::string_view property);

  Sampler& sampler() { return sampler_; }
  /// A variable in the indicator's domain; mixes grid variables, finite
  /// variables and target-measurable variables.
  RandomVariable x();
  /// A target-measurable variable with values in grid.
  RandomVariable measurable(const ValueGrid& grid) { return sampler_.measurable(ind_.target, grid); }
  Event event() { return sampler_.event(ind_.target); }

 private:
  const IndicatorSpec& ind_;
  Sampler sampler_;
  ValueGrid grid_;
};

std::uint64_t property_seed(std::uint64_t seed, std::string_view property);

/// Conditional-indicator axioms: output is target-measurable, lies between
/// essinf and esssup (P1), is the identity on measurable inputs, is >= 0 on
/// nonnegative inputs, and the domain is closed under finite measurable
/// shifts (P2). Single-variable parts sweep the whole grid when small enough.
CheckReport check_axioms(const IndicatorSpec& ind, const CheckOptions& opt);

/// Regularity: the three equivalent statements (locality, I(X 1_H) = I(X) 1_H,
/// patching) and the averaging property I(X 1_H) 1_{H^c} = 0, over every event
/// of the target (or sampled events past the cap).
CheckReport check_regular(const IndicatorSpec& ind, const CheckOptions& opt);

/// Falsification check of one declared property.
CheckReport check_structural(const IndicatorSpec& ind, Flag which, const CheckOptions& opt);

/// Fatou on finite prefixes of eventually constant sequences. Always
/// Skipped(partial): on a finite space every a.s. convergent sequence is
/// eventually constant, so only the prefix evaluation can be reported.
CheckReport check_fatou(const IndicatorSpec& ind, const std::vector<std::vector<RandomVariable>>& sequences);

/// I(hX) = h+ I(X) + h- I(-X) for measurable finite h. Needs regular and
/// pos_homogeneous flags.
CheckReport check_hplus_decomposition(const IndicatorSpec& ind, const CheckOptions& opt);

/// If conditional convexity verifies, regularity must verify too; a failure
/// raises the alarm.
CheckReport check_convex_implies_regular(const IndicatorSpec& ind, const CheckOptions& opt);

/// Subadditive => 1_H I(X) <= I(1_H X); additive => regular. Failures of a
/// verified implication raise the alarm.
CheckReport check_additive_implies_regular(const IndicatorSpec& ind, const CheckOptions& opt);

/// dual(dual(I)) = I.
CheckReport check_dual_involution(const IndicatorSpec& ind, const CheckOptions& opt);

/// I^L <= I <= I^U on the domain, equality on E (sampled lists and
/// measurable variables).
CheckReport check_extension_sandwich(const IndicatorSpec& ind, const CheckOptions& opt);

/// (I^{L(E)})* = (I*)^{U(-E)} and (I^{U(E)})* = (I*)^{L(-E)}.
CheckReport check_extension_duality(const IndicatorSpec& ind, const CheckOptions& opt);

/// For a self-dual additive indicator: I(alpha X) = alpha I(X) for constant
/// grid rationals and measurable step alpha. Alarm when the premises verify
/// and the conclusion fails.
CheckReport check_linear_from_additive(const IndicatorSpec& ind, const CheckOptions& opt);

}  // namespace condind
