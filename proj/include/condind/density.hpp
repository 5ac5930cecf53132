#pragma once

#include <optional>
#include <string>
#include <vector>

#include "condind/check_report.hpp"
#include "condind/indicator.hpp"

namespace condind {

/// RestOper for every event, LinMult for measurable alpha, and LinExp on the
/// set where E(X+|H) and E(X-|H) are not both +inf. Throws CapExceeded.
CheckReport check_lemm_cond_exp(SpacePtr space, const Partition& h, const CheckOptions& opt);

/// E(X+Y|H) = E(X|H) + E(Y|H) asserted on F only. Cells off F are logged as
/// Skipped(off-F) with what was observed there.
CheckReport check_additivity_on_F(const RandomVariable& x, const RandomVariable& y, const Partition& h);

struct DensityReport {
  RandomVariable density;
  /// mu(atom) = E(I(1_atom)).
  std::vector<ExtReal> mu;
  /// mu(Omega) = 1, mu(A) in [0, 1] and mu(A) = sum of its atoms on the events tried.
  bool mu_is_probability = false;
  bool conditional_mean_one = false;
  bool reconstruction_ok = false;
  std::optional<Witness> mismatch_witness;
  std::size_t cases = 0;
};

/// Recovers rho = dmu/dP from an additive self-dual indicator and checks
/// I(X) = E(rho X | H) on grid and sampled X. Throws HypothesisFailed naming
/// "additivity" and/or "self-duality" when the sampled checks falsify them.
DensityReport recover_density(const IndicatorSpec& ind, const CheckOptions& opt);

struct ConditionalExpectationVerdict {
  bool is_conditional_expectation = false;
  /// Empty when the hypotheses failed.
  std::optional<DensityReport> report;
  std::vector<std::string> failed_hypotheses;
  /// E|I(X)| <= E|X| held on every sample.
  bool contractive = false;
  bool subadditive = false;
  bool self_dual = false;
};

/// True iff recovery succeeds with rho = 1. Contractivity, subadditivity and
/// self-duality are sampled and reported as evidence.
ConditionalExpectationVerdict is_conditional_expectation(const IndicatorSpec& ind, const CheckOptions& opt);

}  // namespace condind
