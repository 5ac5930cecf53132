#include "condind/battery.hpp"

#include "condind/checks.hpp"
#include "condind/density.hpp"
#include "condind/error.hpp"
#include "condind/essential.hpp"
#include "condind/expectation.hpp"
#include "condind/risk.hpp"
#include "condind/stochastic.hpp"

namespace condind {

Partition default_sigma(const Scenario& s) {
  if (auto it = s.partitions.find("H"); it != s.partitions.end()) return it->second;
  for (const auto& [name, p] : s.partitions)
    if (p.cell_count() > 1) return p;
  return Partition::trivial(s.space->size());
}

namespace {

CheckReport flags_of(const IndicatorSpec& ind, const CheckOptions& opt) {
  std::vector<CheckReport> parts{check_axioms(ind, opt)};
  for (Flag f : ind.flags.list()) parts.push_back(check_structural(ind, f, opt));
  return CheckReport::composite("indicator " + ind.name, std::move(parts));
}

CheckReport density_check(const IndicatorSpec& ind, const RandomVariable& expected, const CheckOptions& opt) {
  const std::string property = "density recovery " + ind.name;
  try {
    DensityReport d = recover_density(ind, opt);
    if (!d.mu_is_probability || !d.conditional_mean_one)
      return CheckReport::counterexample(property, d.cases,
                                         Witness{{}, d.density, expected, "==", "recovered mu is not usable"});
    if (!d.reconstruction_ok)
      return CheckReport::counterexample(property, d.cases, *d.mismatch_witness);
    if (!(d.density == expected))
      return CheckReport::counterexample(property, d.cases,
                                         Witness{{}, d.density, expected, "==", "recovered density differs"});
    return CheckReport::verified(property, d.cases);
  } catch (const HypothesisFailed& e) {
    return CheckReport::counterexample(property, 0,
                                       Witness{{}, expected, expected, "==", std::string(e.what())});
  }
}

}  // namespace

CheckReport verify_all(const Scenario& s, const CheckOptions& opt) {
  const SpacePtr& space = s.space;
  const Partition h = default_sigma(s);
  IndicatorSpec esssup = make_esssup(space, h);
  IndicatorSpec essinf = make_essinf(space, h);
  IndicatorSpec condexp = make_condexp(space, h);
  IndicatorSpec condexp_ext = make_condexp_ext(space, h);
  IndicatorSpec mix = mix_self_dual(esssup);
  const std::vector<const IndicatorSpec*> builtins{&esssup, &essinf, &condexp, &condexp_ext, &mix};

  std::vector<CheckReport> sections;

  {
    std::vector<CheckReport> parts;
    for (const auto* ind : builtins) parts.push_back(flags_of(*ind, opt));
    sections.push_back(CheckReport::composite("indicators", std::move(parts)));
  }
  {
    std::vector<CheckReport> parts;
    for (const auto* ind : builtins) {
      parts.push_back(check_hplus_decomposition(*ind, opt));
      parts.back().property += " " + ind->name;
      parts.push_back(check_dual_involution(*ind, opt));
      parts.back().property += " " + ind->name;
    }
    for (const auto* ind : {&esssup, &essinf, &condexp}) {
      parts.push_back(check_extension_sandwich(*ind, opt));
      parts.back().property += " " + ind->name;
      parts.push_back(check_extension_duality(*ind, opt));
      parts.back().property += " " + ind->name;
    }
    for (const auto* ind : {&esssup, &condexp}) {
      parts.push_back(check_convex_implies_regular(*ind, opt));
      parts.back().property += " " + ind->name;
      parts.push_back(check_additive_implies_regular(*ind, opt));
      parts.back().property += " " + ind->name;
    }
    parts.push_back(check_linear_from_additive(condexp, opt));
    parts.push_back(check_fatou(esssup, {}));
    sections.push_back(CheckReport::composite("indicator lemmas", std::move(parts)));
  }
  {
    std::vector<CheckReport> parts;
    for (const auto* ind : {&condexp, &esssup, &essinf}) {
      parts.push_back(check_prop_rm(*ind, opt));
      for (RiskSide side : {RiskSide::IndicatorOfNegative, RiskSide::NegativeIndicator}) {
        parts.push_back(check_rho_correspondence(*ind, side, opt));
        parts.back().property += " " + ind->name;
      }
    }
    for (const auto* ind : {&condexp, &esssup}) {
      parts.push_back(check_dom_closure(*ind, opt));
      parts.back().property += " " + ind->name;
    }
    sections.push_back(CheckReport::composite("risk measures", std::move(parts)));
  }
  {
    std::vector<CheckReport> parts;
    try {
      parts.push_back(check_lemm_cond_exp(space, h, opt));
    } catch (const CapExceeded& e) {
      parts.push_back(CheckReport::skipped("conditional expectation lemma", e.what()));
    }
    for (const auto& [xn, x] : s.variables)
      for (const auto& [yn, y] : s.variables) {
        parts.push_back(check_additivity_on_F(x, y, h));
        parts.back().property += " " + xn + "," + yn;
      }
    parts.push_back(density_check(condexp, RandomVariable::constant(space, ExtReal(1)), opt));
    for (const auto& [name, d] : s.densities) {
      if (density_problem(d, h)) continue;
      parts.push_back(density_check(make_weighted(space, h, d, name), d, opt));
    }
    sections.push_back(CheckReport::composite("extended conditional expectation", std::move(parts)));
  }
  if (s.filtration) {
    const Filtration& f = *s.filtration;
    StochasticIndicator sup = esssup_family(space, f);
    StochasticIndicator mean = condexp_family(space, f);
    std::vector<CheckReport> parts{check_tower_all(sup, opt), check_tower_all(mean, opt)};
    for (const auto& [name, x] : s.variables) {
      for (std::size_t t = 0; t < f.size(); ++t) {
        parts.push_back(check_projection(sup.at[0], esssup_cond(x, f.at(t)), x, f.at(t), opt.cap, opt.samples,
                                         opt.seed));
        parts.back().property += " " + name + " at " + f.time(t);
      }
      std::vector<RandomVariable> m;
      for (const auto& p : f.partitions()) m.push_back(esssup_cond(x, p));
      parts.push_back(is_indicator_martingale(sup, AdaptedProcess{m}));
      parts.back().property += " esssup " + name;
      if (mean.at[0].in_domain(x)) {
        m.clear();
        for (const auto& p : f.partitions()) m.push_back(cond_exp_extended(x, p));
        parts.push_back(is_indicator_martingale(mean, AdaptedProcess{m}));
        parts.back().property += " condexp " + name;
      }
    }
    sections.push_back(CheckReport::composite("stochastic indicators", std::move(parts)));
  }
  return CheckReport::composite("verify-all", std::move(sections));
}

}  // namespace condind
