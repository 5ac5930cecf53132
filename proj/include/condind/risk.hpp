#pragma once

#include <optional>
#include <string>

#include "condind/check_report.hpp"
#include "condind/indicator.hpp"

namespace condind {

/// 2^-40
Rational default_rho_tolerance();

/// True iff I(X) >= 0 on every atom. Throws DomainViolation when X is outside D_I.
bool acceptance_contains(const IndicatorSpec& ind, const RandomVariable& x);

/// rho_I(X): the least target-measurable Y with I(X + Y) >= 0.
/// Translation-invariant indicators take the exact path -I(X); others are
/// solved cell by cell by bisection, which needs regularity. Cells with no
/// acceptable shift get +inf. X must be finite-valued.
/// Throws NotIncreasing, NotRegular, DomainViolation.
RandomVariable rho(const IndicatorSpec& ind, const RandomVariable& x, const Rational& tol = default_rho_tolerance());
/// The bisection path regardless of flags (still needs increasing and regular).
RandomVariable rho_bisection(const IndicatorSpec& ind, const RandomVariable& x,
                             const Rational& tol = default_rho_tolerance());

enum class RiskSide { IndicatorOfNegative, NegativeIndicator };  // I(-X), -I(X)
std::string to_string(RiskSide side);

enum class Provenance { Acceptance, FromIndicator, Custom };
std::string to_string(Provenance p);

struct RiskMeasureSpec {
  std::string name;
  SpacePtr space;
  Partition target;
  DomainPredicate domain;
  EvalMap eval;
  Provenance provenance = Provenance::Custom;
  std::optional<RiskSide> side;
  /// Comparisons in the axiom checks allow this slack (0 means exact).
  Rational tolerance = 0;

  bool in_domain(const RandomVariable& x) const { return !domain || domain(x); }
  RandomVariable operator()(const RandomVariable& x) const { return eval(x); }
};

/// rho_I on finite-valued members of D_I. Throws NotIncreasing.
RiskMeasureSpec rho_measure(const IndicatorSpec& ind, const Rational& tol = default_rho_tolerance());
/// rho(X) = I(-X) or rho(X) = -I(X).
RiskMeasureSpec rho_from_indicator(const IndicatorSpec& ind, RiskSide side);
RiskMeasureSpec custom_risk(std::string name, SpacePtr space, Partition target, EvalMap eval,
                            DomainPredicate domain = {});

/// P1 rho(0) = 0, P2 X <= Y => rho(Y) <= rho(X), P3 rho(X + a) = rho(X) - a.
CheckReport check_rm_axioms(const RiskMeasureSpec& r, const CheckOptions& opt);
CheckReport check_rm_convexity(const RiskMeasureSpec& r, const CheckOptions& opt);
CheckReport check_rm_pos_hom(const RiskMeasureSpec& r, const CheckOptions& opt);
CheckReport check_rm_subadditive(const RiskMeasureSpec& r, const CheckOptions& opt);
/// Convexity and positive homogeneity.
CheckReport check_rm_coherent(const RiskMeasureSpec& r, const CheckOptions& opt);

/// The risk-measure axioms of rho_from_indicator(I, side) against
/// "I increasing and translation invariant" on one shared case list. A
/// disagreement raises the alarm.
CheckReport check_rho_correspondence(const IndicatorSpec& ind, RiskSide side, const CheckOptions& opt);

/// Closure of Dom rho_I under nonnegative measurable scaling, sums,
/// upward moves and measurable convex combinations.
CheckReport check_dom_closure(const IndicatorSpec& ind, const CheckOptions& opt);

/// X, Y accepted => a X + (1 - a) Y accepted, for measurable a in [0, 1].
CheckReport check_acceptance_convex(const IndicatorSpec& ind, const CheckOptions& opt);

/// rho_I is a risk measure. Convexity is checked when the acceptance set is
/// convex on the samples; positive homogeneity and (from superadditivity)
/// subadditivity when I declares them.
/// Throws NotIncreasing.
CheckReport check_prop_rm(const IndicatorSpec& ind, const CheckOptions& opt);

}  // namespace condind
