#include "condind/risk.hpp"

#include "condind/checks.hpp"
#include "condind/error.hpp"
#include "condind/essential.hpp"

namespace condind {

Rational default_rho_tolerance() {
  Rational tol(1);
  mpz_class den(1);
  den <<= 40;
  tol /= den;
  return tol;
}

bool acceptance_contains(const IndicatorSpec& ind, const RandomVariable& x) {
  return atomwise_leq(RandomVariable::zero(x.space()), ind.apply(x));
}

namespace {

void require_rho_input(const IndicatorSpec& ind, const RandomVariable& x) {
  if (!ind.flags.has(Flag::Increasing)) throw NotIncreasing("rho needs an increasing indicator: " + ind.name);
  if (!x.all_finite()) throw DomainViolation("rho is defined on finite-valued variables only");
  if (!ind.in_domain(x)) throw DomainViolation("X is outside the domain of " + ind.name);
}

bool cell_accepts(const RandomVariable& v, const std::vector<std::size_t>& cell) {
  for (auto a : cell)
    if (v[a] < ExtReal(0)) return false;
  return true;
}

}  // namespace

RandomVariable rho_bisection(const IndicatorSpec& ind, const RandomVariable& x, const Rational& tol) {
  require_rho_input(ind, x);
  if (!ind.flags.has(Flag::Regular)) throw NotRegular("rho bisection needs a regular indicator: " + ind.name);
  if (tol <= 0) throw ValidationError("rho tolerance must be positive");
  const Partition& h = ind.target;
  const SpacePtr& space = x.space();
  const std::size_t k = h.cell_count();

  std::vector<ExtReal> lo = cell_max(x, h);
  std::vector<ExtReal> hi = cell_min(x, h);
  for (std::size_t c = 0; c < k; ++c) {
    lo[c] = -lo[c];
    hi[c] = -hi[c];
  }
  auto evaluate = [&](const std::vector<ExtReal>& shift) {
    return ind(x + RandomVariable::from_cells(space, h, shift));
  };

  std::vector<ExtReal> result(k);
  std::vector<bool> active(k, false);
  RandomVariable at_lo = evaluate(lo);
  RandomVariable at_hi = evaluate(hi);
  for (std::size_t c = 0; c < k; ++c) {
    if (cell_accepts(at_lo, h.cell(c))) result[c] = lo[c];
    else if (!cell_accepts(at_hi, h.cell(c))) result[c] = ExtReal::plus_inf();
    else active[c] = true;
  }

  std::vector<Rational> a(k), b(k);
  for (std::size_t c = 0; c < k; ++c)
    if (active[c]) {
      a[c] = lo[c].value();
      b[c] = hi[c].value();
    }
  while (true) {
    bool any = false;
    std::vector<ExtReal> mid = hi;
    for (std::size_t c = 0; c < k; ++c) {
      if (!active[c]) continue;
      if (b[c] - a[c] <= tol) {
        result[c] = ExtReal(b[c]);
        active[c] = false;
        continue;
      }
      any = true;
      mid[c] = ExtReal(Rational((a[c] + b[c]) / 2));
    }
    if (!any) break;
    RandomVariable v = evaluate(mid);
    for (std::size_t c = 0; c < k; ++c) {
      if (!active[c]) continue;
      if (cell_accepts(v, h.cell(c))) b[c] = mid[c].value();
      else a[c] = mid[c].value();
    }
  }
  return RandomVariable::from_cells(space, h, result);
}

RandomVariable rho(const IndicatorSpec& ind, const RandomVariable& x, const Rational& tol) {
  require_rho_input(ind, x);
  if (ind.flags.has(Flag::TranslationInvariant)) return -ind(x);
  return rho_bisection(ind, x, tol);
}

std::string to_string(RiskSide side) {
  return side == RiskSide::IndicatorOfNegative ? "I(-X)" : "-I(X)";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Acceptance: return "acceptance";
    case Provenance::FromIndicator: return "from-indicator";
    case Provenance::Custom: return "custom";
  }
  return "?";
}

RiskMeasureSpec rho_measure(const IndicatorSpec& ind, const Rational& tol) {
  if (!ind.flags.has(Flag::Increasing)) throw NotIncreasing("rho needs an increasing indicator: " + ind.name);
  RiskMeasureSpec r;
  r.name = "rho:" + ind.name;
  r.space = ind.space;
  r.target = ind.target;
  r.domain = [ind](const RandomVariable& x) { return x.all_finite() && ind.in_domain(x); };
  r.eval = [ind, tol](const RandomVariable& x) { return rho(ind, x, tol); };
  r.provenance = Provenance::Acceptance;
  if (!ind.flags.has(Flag::TranslationInvariant)) r.tolerance = tol;
  return r;
}

RiskMeasureSpec rho_from_indicator(const IndicatorSpec& ind, RiskSide side) {
  RiskMeasureSpec r;
  r.name = (side == RiskSide::IndicatorOfNegative ? "negarg:" : "neg:") + ind.name;
  r.space = ind.space;
  r.target = ind.target;
  r.provenance = Provenance::FromIndicator;
  r.side = side;
  if (side == RiskSide::IndicatorOfNegative) {
    r.domain = [ind](const RandomVariable& x) { return x.all_finite() && ind.in_domain(-x); };
    r.eval = [ind](const RandomVariable& x) { return ind(-x); };
  } else {
    r.domain = [ind](const RandomVariable& x) { return x.all_finite() && ind.in_domain(x); };
    r.eval = [ind](const RandomVariable& x) { return -ind(x); };
  }
  return r;
}

RiskMeasureSpec custom_risk(std::string name, SpacePtr space, Partition target, EvalMap eval,
                            DomainPredicate domain) {
  RiskMeasureSpec r;
  r.name = std::move(name);
  r.space = std::move(space);
  r.target = std::move(target);
  r.eval = std::move(eval);
  r.domain = std::move(domain);
  return r;
}

namespace {

using Inputs = std::vector<std::pair<std::string, RandomVariable>>;

bool close_leq(const ExtReal& a, const ExtReal& b, const Rational& tol) {
  if (a <= b) return true;
  if (!a.is_finite() || !b.is_finite()) return false;
  return a.value() - b.value() <= tol;
}

bool close_leq(const RandomVariable& a, const RandomVariable& b, const Rational& tol) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!close_leq(a[i], b[i], tol)) return false;
  return true;
}

// CaseRecorder with slack.
struct TolRecorder {
  CaseRecorder rec;
  Rational tol;

  void leq(const RandomVariable& lhs, const RandomVariable& rhs, Inputs in, std::string note) {
    if (rec.failed()) return;
    if (close_leq(lhs, rhs, tol)) rec.pass();
    else rec.fail(Witness{std::move(in), lhs, rhs, "<=", std::move(note)});
  }
  void equal(const RandomVariable& lhs, const RandomVariable& rhs, Inputs in, std::string note) {
    if (rec.failed()) return;
    if (close_leq(lhs, rhs, tol) && close_leq(rhs, lhs, tol)) rec.pass();
    else rec.fail(Witness{std::move(in), lhs, rhs, "==", std::move(note)});
  }
};

class RiskCases {
 public:
  RiskCases(const RiskMeasureSpec& r, const CheckOptions& opt, std::string_view property)
      : r_(r), s_(r.space, property_seed(opt.seed, property)) {}

  RandomVariable x() {
    auto accept = [this](const RandomVariable& v) { return r_.in_domain(v); };
    if (s_.index(4) == 0) {
      RandomVariable m = s_.measurable(r_.target, finite_grid());
      if (accept(m)) return m;
    }
    return s_.variable_where(finite_grid(), accept);
  }
  RandomVariable measurable(const ValueGrid& g) { return s_.measurable(r_.target, g); }
  RandomVariable bump() { return s_.variable(nonneg_scalar_grid()); }

 private:
  const RiskMeasureSpec& r_;
  Sampler s_;
};

}  // namespace

CheckReport check_rm_axioms(const RiskMeasureSpec& r, const CheckOptions& opt) {
  RiskCases cases(r, opt, "risk axioms");
  RandomVariable zero = RandomVariable::zero(r.space);
  CaseRecorder p1("P1 normalization");
  if (r.in_domain(zero)) p1.equal(r(zero), zero, {}, "rho(0) = 0");
  TolRecorder p2{CaseRecorder("P2 monotonicity"), r.tolerance};
  TolRecorder p3{CaseRecorder("P3 cash invariance"), r.tolerance};
  for (std::size_t i = 0; i < opt.samples; ++i) {
    RandomVariable x = cases.x();
    RandomVariable y = x + cases.bump();
    if (r.in_domain(y)) p2.leq(r(y), r(x), {{"X", x}, {"Y", y}}, "X <= Y => rho(Y) <= rho(X)");
    RandomVariable alpha = cases.measurable(finite_grid());
    RandomVariable shifted = x + alpha;
    if (r.in_domain(shifted))
      p3.equal(r(shifted), r(x) - alpha, {{"X", x}, {"alpha", alpha}}, "rho(X + alpha) = rho(X) - alpha");
  }
  return CheckReport::composite("risk axioms", {p1.report(), p2.rec.report(), p3.rec.report()});
}

CheckReport check_rm_convexity(const RiskMeasureSpec& r, const CheckOptions& opt) {
  RiskCases cases(r, opt, "risk convexity");
  TolRecorder rec{CaseRecorder("risk convexity"), r.tolerance};
  for (std::size_t i = 0; i < opt.samples; ++i) {
    RandomVariable x = cases.x();
    RandomVariable y = cases.x();
    RandomVariable a = cases.measurable(unit_grid());
    RandomVariable b = RandomVariable::constant(r.space, ExtReal(1)) - a;
    RandomVariable combo = a * x + b * y;
    if (!r.in_domain(combo)) {
      rec.rec.fail(Witness{{{"X", x}, {"Y", y}, {"alpha", a}}, combo, combo, "in", "domain is not convex"});
      break;
    }
    rec.leq(r(combo), a * r(x) + b * r(y), {{"X", x}, {"Y", y}, {"alpha", a}},
            "rho(aX + (1-a)Y) <= a rho(X) + (1-a) rho(Y)");
  }
  return rec.rec.report();
}

CheckReport check_rm_pos_hom(const RiskMeasureSpec& r, const CheckOptions& opt) {
  RiskCases cases(r, opt, "risk positive homogeneity");
  TolRecorder rec{CaseRecorder("risk positive homogeneity"), r.tolerance};
  for (std::size_t i = 0; i < opt.samples; ++i) {
    RandomVariable x = cases.x();
    RandomVariable a = cases.measurable(nonneg_scalar_grid());
    RandomVariable scaled = a * x;
    if (!r.in_domain(scaled)) {
      rec.rec.fail(Witness{{{"X", x}, {"alpha", a}}, scaled, scaled, "in", "domain is not a cone"});
      break;
    }
    rec.equal(r(scaled), a * r(x), {{"X", x}, {"alpha", a}}, "rho(aX) = a rho(X)");
  }
  return rec.rec.report();
}

CheckReport check_rm_subadditive(const RiskMeasureSpec& r, const CheckOptions& opt) {
  RiskCases cases(r, opt, "risk subadditivity");
  TolRecorder rec{CaseRecorder("risk subadditivity"), r.tolerance};
  for (std::size_t i = 0; i < opt.samples; ++i) {
    RandomVariable x = cases.x();
    RandomVariable y = cases.x();
    RandomVariable sum = x + y;
    if (!r.in_domain(sum)) continue;
    rec.leq(r(sum), r(x) + r(y), {{"X", x}, {"Y", y}}, "rho(X + Y) <= rho(X) + rho(Y)");
  }
  return rec.rec.report();
}

CheckReport check_rm_coherent(const RiskMeasureSpec& r, const CheckOptions& opt) {
  return CheckReport::composite("risk coherence", {check_rm_convexity(r, opt), check_rm_pos_hom(r, opt)});
}

CheckReport check_rho_correspondence(const IndicatorSpec& ind, RiskSide side, const CheckOptions& opt) {
  RiskMeasureSpec r = rho_from_indicator(ind, side);
  RiskCases cases(r, opt, "rho correspondence");
  const bool negate = side == RiskSide::IndicatorOfNegative;
  RandomVariable zero = RandomVariable::zero(ind.space);

  CaseRecorder inc("I increasing");
  CaseRecorder ti("I translation invariant");
  CaseRecorder p1("P1 normalization");
  CaseRecorder p2("P2 monotonicity");
  CaseRecorder p3("P3 cash invariance");
  if (r.in_domain(zero)) p1.equal(r(zero), zero, {}, "rho(0) = 0");
  for (std::size_t i = 0; i < opt.samples; ++i) {
    RandomVariable x = cases.x();
    RandomVariable y = x + cases.bump();
    RandomVariable alpha = cases.measurable(finite_grid());
    RandomVariable shifted = x + alpha;
    if (r.in_domain(y)) {
      p2.leq(r(y), r(x), {{"X", x}, {"Y", y}});
      RandomVariable lo = negate ? -y : x;
      RandomVariable hi = negate ? -x : y;
      inc.leq(ind(lo), ind(hi), {{"X", lo}, {"Y", hi}});
    }
    if (r.in_domain(shifted)) {
      p3.equal(r(shifted), r(x) - alpha, {{"X", x}, {"alpha", alpha}});
      RandomVariable base = negate ? -x : x;
      RandomVariable a = negate ? -alpha : alpha;
      ti.equal(ind(base + a), ind(base) + a, {{"X", base}, {"alpha", a}});
    }
  }
  CheckReport flags = CheckReport::composite("I increasing and translation invariant", {inc.report(), ti.report()});
  CheckReport axioms = CheckReport::composite("risk axioms", {p1.report(), p2.report(), p3.report()});
  bool flags_hold = !flags.has_counterexample();
  bool axioms_hold = !axioms.has_counterexample();
  CheckReport out = CheckReport::composite("rho correspondence " + to_string(side), {flags, axioms});
  if (flags_hold != axioms_hold) {
    out.alarm = true;
    out.notes.push_back("risk axioms and indicator flags disagree on the shared cases");
  }
  return out;
}

CheckReport check_dom_closure(const IndicatorSpec& ind, const CheckOptions& opt) {
  RiskMeasureSpec r = rho_measure(ind);
  auto member = [&](const RandomVariable& x) {
    if (!r.in_domain(x)) return false;
    RandomVariable v = r(x);
    for (const auto& e : v.values())
      if (!e.is_finite()) return false;
    return true;
  };
  RiskCases cases(r, opt, "dom closure");
  auto draw = [&]() {
    for (int i = 0; i < 16; ++i) {
      RandomVariable x = cases.x();
      if (member(x)) return x;
    }
    return RandomVariable::zero(ind.space);
  };
  auto closure = [](CaseRecorder& rec, bool ok, Inputs in, const RandomVariable& result, const char* note) {
    if (ok) rec.pass();
    else rec.fail(Witness{std::move(in), result, result, "in", note});
  };

  CaseRecorder scaling("Dom closed under a X, a >= 0 measurable");
  CaseRecorder sums("Dom closed under X1 + X2");
  CaseRecorder upward("Dom closed upward");
  CaseRecorder convex("Dom closed under measurable convex combinations");
  for (std::size_t i = 0; i < opt.samples; ++i) {
    RandomVariable x1 = draw();
    RandomVariable x2 = draw();
    RandomVariable a = cases.measurable(nonneg_scalar_grid());
    RandomVariable u = cases.measurable(unit_grid());
    RandomVariable scaled = a * x1;
    RandomVariable sum = x1 + x2;
    RandomVariable up = x2 + cases.bump();
    RandomVariable mix = u * x1 + (RandomVariable::constant(ind.space, ExtReal(1)) - u) * x2;
    if (!scaling.failed())
      closure(scaling, member(scaled), {{"X", x1}, {"alpha", a}}, scaled, "alpha X left Dom");
    if (!sums.failed()) closure(sums, member(sum), {{"X1", x1}, {"X2", x2}}, sum, "X1 + X2 left Dom");
    if (!upward.failed()) closure(upward, member(up), {{"X2", x2}, {"X1", up}}, up, "X1 >= X2 left Dom");
    if (!convex.failed())
      closure(convex, member(mix), {{"X1", x1}, {"X2", x2}, {"alpha", u}}, mix, "convex combination left Dom");
  }
  CheckReport out = CheckReport::composite(
      "dom closure", {scaling.report(), sums.report(), upward.report(), convex.report()});
  for (Flag f : {Flag::PosHomogeneous, Flag::Superadditive, Flag::Increasing, Flag::Convex})
    if (!ind.flags.has(f))
      out.notes.push_back("premise '" + std::string(to_string(f)) + "' not declared; conclusion checked anyway");
  return out;
}

CheckReport check_acceptance_convex(const IndicatorSpec& ind, const CheckOptions& opt) {
  Sampler s(ind.space, property_seed(opt.seed, "acceptance convexity"));
  auto accepted = [&](const RandomVariable& x) {
    return x.all_finite() && ind.in_domain(x) && atomwise_leq(RandomVariable::zero(x.space()), ind(x));
  };
  CaseRecorder rec("acceptance set convex");
  for (std::size_t i = 0; i < opt.samples && !rec.failed(); ++i) {
    RandomVariable x = s.variable_where(finite_grid(), accepted);
    RandomVariable y = s.variable_where(finite_grid(), accepted);
    RandomVariable a = s.measurable(ind.target, unit_grid());
    RandomVariable combo = a * x + (RandomVariable::constant(ind.space, ExtReal(1)) - a) * y;
    if (accepted(combo)) rec.pass();
    else rec.fail(Witness{{{"X", x}, {"Y", y}, {"alpha", a}}, ind(combo), RandomVariable::zero(ind.space), ">=",
                          "aX + (1-a)Y is not accepted"});
  }
  return rec.report();
}

CheckReport check_prop_rm(const IndicatorSpec& ind, const CheckOptions& opt) {
  RiskMeasureSpec r = rho_measure(ind);
  std::vector<CheckReport> parts{check_rm_axioms(r, opt)};
  auto conditional = [&](Flag f, const char* label, auto check) {
    if (ind.flags.has(f)) {
      CheckReport c = check(r, opt);
      c.property = label;
      parts.push_back(std::move(c));
    } else {
      parts.push_back(CheckReport::skipped(label, "flag absent: " + std::string(to_string(f))));
    }
  };
  {
    CheckReport premise = check_acceptance_convex(ind, opt);
    const char* label = "rho convex (acceptance set convex)";
    if (premise.verdict == Verdict::Verified) {
      CheckReport c = check_rm_convexity(r, opt);
      c.property = label;
      parts.push_back(CheckReport::composite(label, {premise, c}));
    } else {
      CheckReport c = CheckReport::skipped(label, "premise: acceptance set " + to_string(premise.verdict));
      if (ind.flags.has(Flag::Convex)) c.notes.push_back("I declares convex but its acceptance set is not convex");
      parts.push_back(std::move(c));
    }
  }
  conditional(Flag::PosHomogeneous, "rho positively homogeneous (I positively homogeneous)", check_rm_pos_hom);
  conditional(Flag::Superadditive, "rho subadditive (I superadditive)", check_rm_subadditive);
  return CheckReport::composite("rho_I " + ind.name, std::move(parts));
}

}  // namespace condind
