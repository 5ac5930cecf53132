#include "condind/density.hpp"

#include "condind/checks.hpp"
#include "condind/error.hpp"
#include "condind/expectation.hpp"

namespace condind {

CheckReport check_lemm_cond_exp(SpacePtr space, const Partition& h, const CheckOptions& opt) {
  std::vector<Event> events = enumerate_events(h, opt.cap);
  IndicatorSpec ind = make_condexp_ext(space, h);
  CaseSource src(ind, opt, "cond exp lemma");
  CaseRecorder rest("RestOper: 1_H I(X) = I(X 1_H)");
  CaseRecorder mult("LinMult: I(a X) = a I(X)");
  CaseRecorder lin("LinExp: I(X + a) = I(X) + a off the doubly infinite set");
  const std::size_t n = std::max(opt.samples, events.size());
  for (std::size_t i = 0; i < n; ++i) {
    RandomVariable x = src.x();
    RandomVariable ix = ind(x);
    const Event& ev = events[i % events.size()];
    rest.equal(restrict(ix, ev), ind(restrict(x, ev)), {{"X", x}, {"1_H", RandomVariable::indicator(space, ev)}});

    RandomVariable a = src.measurable(scalar_grid());
    mult.equal(ind(a * x), a * ix, {{"X", x}, {"alpha", a}});

    RandomVariable shift = src.measurable(finite_grid());
    CellParts parts = cond_exp_parts(x, h);
    Event where(space->size());
    for (std::size_t k = 0; k < h.cell_count(); ++k)
      if (!(parts.plus[k].is_plus_inf() && parts.minus[k].is_plus_inf()))
        for (auto atom : h.cell(k)) where.insert(atom);
    lin.equal_on(ind(x + shift), ix + shift, where, {{"X", x}, {"alpha", shift}});
  }
  return CheckReport::composite("conditional expectation lemma", {rest.report(), mult.report(), lin.report()});
}

CheckReport check_additivity_on_F(const RandomVariable& x, const RandomVariable& y, const Partition& h) {
  AdditivitySet f = additivity_set(x, y, h);
  RandomVariable lhs = cond_exp_extended(x + y, h);
  RandomVariable rhs = cond_exp_extended(x, h) + cond_exp_extended(y, h);
  std::vector<CheckReport> parts;
  if (!f.set.empty()) {
    CaseRecorder on_f("additivity on F");
    on_f.equal_on(lhs, rhs, f.set, {{"X", x}, {"Y", y}}, "E(X+Y|H) = E(X|H) + E(Y|H) on F");
    parts.push_back(on_f.report());
  }
  for (std::size_t k = 0; k < h.cell_count(); ++k) {
    if (!f.cell_tags[k].empty()) continue;
    std::size_t atom = h.cell(k).front();
    bool same = lhs[atom] == rhs[atom];
    parts.push_back(CheckReport::skipped("off-F cell " + std::to_string(k),
                                         "off-F: observed E(X+Y|H) = " + lhs[atom].to_string() +
                                             (same ? " == " : " != ") + rhs[atom].to_string() +
                                             " = E(X|H) + E(Y|H)"));
  }
  CheckReport r = CheckReport::composite("additivity on F", std::move(parts));
  if (f.set.empty()) r.reason = "off-F";
  for (std::size_t k = 0; k < h.cell_count(); ++k) {
    std::string tags;
    for (auto t : f.cell_tags[k]) tags += (tags.empty() ? "" : ",") + to_string(t);
    r.notes.push_back("cell " + std::to_string(k) + ": " + (tags.empty() ? "none" : tags));
  }
  return r;
}

namespace {

bool probability_like(const std::vector<ExtReal>& mu) {
  ExtReal total(0);
  for (const auto& m : mu) {
    if (!m.is_finite() || m < ExtReal(0) || ExtReal(1) < m) return false;
    total = total + m;
  }
  return total == ExtReal(1);
}

}  // namespace

DensityReport recover_density(const IndicatorSpec& ind, const CheckOptions& opt) {
  CheckOptions hyp = opt;
  hyp.grid = finite_grid();
  std::vector<std::string> failed;
  if (check_structural(ind, Flag::Additive, hyp).verdict == Verdict::Counterexample) failed.push_back("additivity");
  if (check_structural(ind, Flag::SelfDual, hyp).verdict == Verdict::Counterexample)
    failed.push_back("self-duality");
  if (!failed.empty()) throw HypothesisFailed(failed);

  const SpacePtr& space = ind.space;
  const std::size_t n = space->size();
  DensityReport rep;
  std::vector<ExtReal> density(n);
  for (std::size_t a = 0; a < n; ++a) {
    RandomVariable one = RandomVariable::indicator(space, Event::of(n, {a}));
    ExtReal mu = expectation(ind.apply(one));
    rep.mu.push_back(mu);
    density[a] = mu.is_finite() ? ExtReal(Rational(mu.value() / space->prob(a))) : mu;
  }
  rep.density = RandomVariable(space, density);

  rep.mu_is_probability = probability_like(rep.mu);
  if (rep.mu_is_probability) {
    auto additive_on = [&](const Event& e) {
      RandomVariable one = RandomVariable::indicator(space, e);
      if (!ind.in_domain(one)) return true;
      ExtReal sum(0);
      for (auto a : e.atoms()) sum = sum + rep.mu[a];
      return expectation(ind(one)) == sum;
    };
    Partition atoms = Partition::discrete(n);
    try {
      for (const auto& e : enumerate_events(atoms, opt.cap))
        if (!additive_on(e)) {
          rep.mu_is_probability = false;
          break;
        }
    } catch (const CapExceeded&) {
      Sampler s(space, property_seed(opt.seed, "mu additivity"));
      for (std::size_t i = 0; i < opt.samples && rep.mu_is_probability; ++i)
        rep.mu_is_probability = additive_on(s.event(atoms));
    }
  }

  rep.conditional_mean_one = !density_problem(rep.density, ind.target).has_value();
  if (!rep.conditional_mean_one) return rep;

  CaseRecorder rec("reconstruction");
  auto one = [&](const RandomVariable& x) {
    if (!ind.in_domain(x) || rec.failed()) return;
    rec.equal(ind(x), weighted_expectation(x, ind.target, rep.density), {{"X", x}}, "I(X) = E(rho X | H)");
  };
  if (grid_variable_count(n, finite_grid().size()) <= opt.exhaustive_budget) {
    for_each_grid_variable(space, finite_grid(), one);
  } else {
    CaseSource src(ind, hyp, "reconstruction");
    for (std::size_t i = 0; i < opt.samples; ++i) one(src.x());
  }
  rep.cases = rec.cases();
  CheckReport r = rec.report();
  rep.reconstruction_ok = r.verdict == Verdict::Verified;
  rep.mismatch_witness = r.witness;
  return rep;
}

ConditionalExpectationVerdict is_conditional_expectation(const IndicatorSpec& ind, const CheckOptions& opt) {
  ConditionalExpectationVerdict v;
  CheckOptions hyp = opt;
  hyp.grid = finite_grid();
  v.subadditive = check_structural(ind, Flag::Subadditive, hyp).verdict == Verdict::Verified;
  v.self_dual = check_structural(ind, Flag::SelfDual, hyp).verdict == Verdict::Verified;

  CaseSource src(ind, hyp, "contractivity");
  v.contractive = true;
  for (std::size_t i = 0; i < opt.samples && v.contractive; ++i) {
    RandomVariable x = src.x();
    if (!ind.in_domain(x)) continue;
    RandomVariable ix = ind(x);
    v.contractive = expectation(positive_part(ix) + negative_part(ix)) <=
                    expectation(positive_part(x) + negative_part(x));
  }

  try {
    DensityReport rep = recover_density(ind, opt);
    bool unit = true;
    for (const auto& d : rep.density.values()) unit = unit && d == ExtReal(1);
    v.is_conditional_expectation = rep.reconstruction_ok && unit;
    v.report = std::move(rep);
  } catch (const HypothesisFailed& e) {
    v.failed_hypotheses = e.failed();
  }
  return v;
}

}  // namespace condind
