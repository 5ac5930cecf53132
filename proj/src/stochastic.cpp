#include "condind/stochastic.hpp"

#include <algorithm>

#include "condind/checks.hpp"
#include "condind/error.hpp"
#include "condind/essential.hpp"

namespace condind {

StochasticIndicator make_stochastic(std::string name, Filtration filtration, std::vector<IndicatorSpec> per_time) {
  if (per_time.size() != filtration.size())
    throw ValidationError("stochastic indicator needs one indicator per date: got " +
                          std::to_string(per_time.size()) + " for " + std::to_string(filtration.size()) + " dates");
  for (std::size_t t = 0; t < per_time.size(); ++t)
    if (!(per_time[t].target == filtration.at(t)))
      throw ValidationError("indicator '" + per_time[t].name + "' does not target the partition at date '" +
                            filtration.time(t) + "'");
  return StochasticIndicator{std::move(name), std::move(filtration), std::move(per_time)};
}

namespace {

template <class Make>
StochasticIndicator family(const std::string& name, const SpacePtr& space, const Filtration& f, Make make) {
  std::vector<IndicatorSpec> per_time;
  for (const auto& p : f.partitions()) per_time.push_back(make(space, p));
  return make_stochastic(name, f, std::move(per_time));
}

}  // namespace

StochasticIndicator esssup_family(SpacePtr space, const Filtration& f) {
  return family("esssup", space, f, make_esssup);
}
StochasticIndicator essinf_family(SpacePtr space, const Filtration& f) {
  return family("essinf", space, f, make_essinf);
}
StochasticIndicator condexp_family(SpacePtr space, const Filtration& f) {
  return family("condexp", space, f, make_condexp);
}

AdaptedProcess make_adapted(const Filtration& f, std::vector<RandomVariable> values) {
  if (values.size() != f.size())
    throw ValidationError("adapted process needs one variable per date");
  for (std::size_t t = 0; t < values.size(); ++t)
    if (!is_measurable(values[t], f.at(t)))
      throw ValidationError("process value at date '" + f.time(t) + "' is not measurable at that date");
  return AdaptedProcess{std::move(values)};
}

CheckReport check_tower(const StochasticIndicator& si, std::size_t s, std::size_t t, const CheckOptions& opt) {
  if (s > t || t >= si.size()) throw ValidationError("tower check needs date indices s <= t");
  const IndicatorSpec& is = si.at[s];
  const IndicatorSpec& it = si.at[t];
  const std::string label = "tower " + si.filtration.time(s) + "," + si.filtration.time(t);
  CaseRecorder tower(label);
  CaseRecorder nesting(label + " domain nesting");

  auto one = [&](const RandomVariable& x) {
    if (!it.in_domain(x) || !is.in_domain(x)) return;
    RandomVariable y = it(x);
    if (!is.in_domain(y)) {
      nesting.fail(Witness{{{"X", x}}, y, y, "in", "I_t(X) outside the domain of I_s"});
      return;
    }
    nesting.pass();
    tower.equal(is(y), is(x), {{"X", x}}, "I_s(I_t(X)) = I_s(X)");
  };

  bool exhaustive = grid_variable_count(it.space->size(), opt.grid.size()) <= opt.exhaustive_budget;
  if (exhaustive) {
    for_each_grid_variable(it.space, opt.grid, one);
  } else {
    CaseSource src(it, opt, label);
    for (std::size_t i = 0; i < opt.samples && !tower.failed(); ++i) one(src.x());
  }
  return CheckReport::composite(label, {tower.report(), nesting.report()});
}

CheckReport check_tower_all(const StochasticIndicator& si, const CheckOptions& opt) {
  std::vector<CheckReport> parts;
  for (std::size_t t = 1; t < si.size(); ++t)
    for (std::size_t s = 0; s < t; ++s) parts.push_back(check_tower(si, s, t, opt));
  return CheckReport::composite("tower " + si.name, std::move(parts));
}

namespace {

// Events with a single cell come first: they are the most likely to expose a
// wrong candidate.
std::vector<Event> ordered_events(const Partition& ft, std::size_t cap) {
  std::vector<Event> events = enumerate_events(ft, cap);
  std::stable_partition(events.begin(), events.end(), [&](const Event& e) {
    for (const auto& c : ft.cells())
      if (e.count() == c.size() && e.contains(c.front())) return true;
    return false;
  });
  return events;
}

}  // namespace

CheckReport check_projection(const IndicatorSpec& i0, const RandomVariable& z, const RandomVariable& x,
                             const Partition& ft, std::size_t cap, std::size_t samples, std::uint64_t seed) {
  require_same_space(z, x);
  if (!is_measurable(z, ft)) throw ValidationError("projection candidate Z is not measurable at the given date");
  CaseRecorder rec("projection");
  auto one = [&](const Event& f) {
    RandomVariable xf = restrict(x, f);
    RandomVariable zf = restrict(z, f);
    if (!i0.in_domain(xf) || !i0.in_domain(zf)) return;
    rec.equal(i0(xf), i0(zf), {{"X", x}, {"Z", z}, {"1_F", RandomVariable::indicator(x.space(), f)}},
              "I0(X 1_F) = I0(Z 1_F)");
  };
  try {
    for (const Event& f : ordered_events(ft, cap)) {
      one(f);
      if (rec.failed()) break;
    }
    return rec.report();
  } catch (const CapExceeded& e) {
    Sampler s(x.space(), property_seed(seed, "projection"));
    for (std::size_t i = 0; i < samples && !rec.failed(); ++i) one(s.event(ft));
    CheckReport r = rec.report();
    r.notes.push_back(std::string("Skipped-partial: ") + e.what() + "; events were sampled");
    return r;
  }
}

std::vector<RandomVariable> projection_solve(const IndicatorSpec& i0, const RandomVariable& x, const Partition& ft,
                                             const ValueGrid& grid, std::size_t budget, std::size_t cap) {
  ValueGrid values = grid;
  for (const auto& m : cell_max(x, ft)) values.push_back(m);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::size_t candidates = grid_variable_count(ft.cell_count(), values.size());
  if (candidates > budget)
    throw GridTooLarge("projection candidates " + std::to_string(values.size()) + "^" +
                       std::to_string(ft.cell_count()) + " exceed budget " + std::to_string(budget));

  const SpacePtr& space = x.space();
  std::vector<Event> events = ordered_events(ft, cap);
  std::vector<std::optional<RandomVariable>> lhs;
  lhs.reserve(events.size());
  for (const auto& f : events) {
    RandomVariable xf = restrict(x, f);
    lhs.push_back(i0.in_domain(xf) ? std::optional<RandomVariable>(i0(xf)) : std::nullopt);
  }

  std::vector<RandomVariable> solutions;
  auto cells_space = ProbabilitySpace::uniform(ft.cell_count());
  for_each_grid_variable(cells_space, values, [&](const RandomVariable& c) {
    RandomVariable z = RandomVariable::from_cells(space, ft, c.values());
    for (std::size_t k = 0; k < events.size(); ++k) {
      if (!lhs[k]) continue;
      RandomVariable zf = restrict(z, events[k]);
      if (!i0.in_domain(zf) || !(i0(zf) == *lhs[k])) return;
    }
    solutions.push_back(std::move(z));
  });
  return solutions;
}

CheckReport check_projection_uniqueness_premises(const IndicatorSpec& i0, const CheckOptions& opt) {
  CheckReport super = check_structural(i0, Flag::Superadditive, opt);

  CaseRecorder degenerate("Y >= 0: I0(Y) <= 0 iff Y = 0");
  const SpacePtr& space = i0.space;
  RandomVariable zero = RandomVariable::zero(space);
  auto one = [&](const RandomVariable& y) {
    if (!i0.in_domain(y)) return;
    RandomVariable iy = i0(y);
    bool nonpositive = atomwise_leq(iy, zero);
    bool is_zero = y == zero;
    if (nonpositive == is_zero) degenerate.pass();
    else degenerate.fail(Witness{{{"Y", y}}, iy, zero, "<=", is_zero ? "I0(0) > 0" : "I0(Y) <= 0 with Y != 0"});
  };
  const ValueGrid grid = nonneg_scalar_grid();
  if (grid_variable_count(space->size(), grid.size()) <= opt.exhaustive_budget) {
    for_each_grid_variable(space, grid, [&](const RandomVariable& y) {
      if (!degenerate.failed()) one(y);
    });
  } else {
    Sampler s(space, property_seed(opt.seed, "uniqueness premises"));
    one(zero);
    for (std::size_t a = 0; a < space->size(); ++a)
      one(RandomVariable::indicator(space, Event::of(space->size(), {a})));
    for (std::size_t i = 0; i < opt.samples && !degenerate.failed(); ++i) one(s.variable(grid));
  }
  return CheckReport::composite("projection uniqueness premises", {super, degenerate.report()});
}

CheckReport is_indicator_martingale(const StochasticIndicator& si, const AdaptedProcess& m) {
  if (m.values.size() != si.size()) throw ValidationError("process and stochastic indicator have different lengths");
  CaseRecorder rec("indicator martingale");
  for (std::size_t t = 0; t < si.size() && !rec.failed(); ++t) {
    for (std::size_t s = 0; s <= t && !rec.failed(); ++s) {
      const RandomVariable& mt = m.values[t];
      const std::string note = "I_" + si.filtration.time(s) + "(M_" + si.filtration.time(t) + ") = M_" +
                               si.filtration.time(s);
      if (!si.at[s].in_domain(mt)) {
        rec.fail(Witness{{{"M_t", mt}}, mt, m.values[s], "in", note + ": M_t outside the domain"});
        break;
      }
      rec.equal(si.at[s](mt), m.values[s], {{"M_t", mt}, {"M_s", m.values[s]}}, note);
    }
  }
  return rec.report();
}

AdaptedProcess backward_envelope(const StochasticIndicator& si, const RandomVariable& payoff,
                                 const std::optional<AdaptedProcess>& exercise) {
  const std::size_t n = si.size();
  if (n == 0) throw ValidationError("envelope needs at least one date");
  if (!is_measurable(payoff, si.filtration.at(n - 1)))
    throw ValidationError("payoff is not measurable at the terminal date");
  if (exercise && exercise->values.size() != n)
    throw ValidationError("exercise process needs one variable per date");
  std::vector<RandomVariable> v(n);
  v[n - 1] = payoff;
  for (std::size_t t = n - 1; t-- > 0;) {
    v[t] = si.at[t].apply(v[t + 1]);
    if (exercise) v[t] = atomwise_max(exercise->values[t], v[t]);
  }
  return AdaptedProcess{std::move(v)};
}

namespace {

CheckReport essup_proj_impl(const std::string& property, const RandomVariable& x, const Event& f,
                            const Partition& f0, const ValueGrid& eps_grid, bool shifted) {
  if (f.empty()) return CheckReport::skipped(property, "hypothesis: P(F) > 0 fails");
  const SpacePtr& space = x.space();
  RandomVariable base = shifted ? restrict(x, f) : x;
  if (!shifted && !(restrict(x, f) == x)) return CheckReport::skipped(property, "hypothesis: X = X 1_F fails");
  RandomVariable target = esssup_cond(base, f0);
  if (target == RandomVariable::zero(space))
    return CheckReport::skipped(property, "hypothesis: esssup is identically 0");

  CaseRecorder rec(property);
  RandomVariable one_f = RandomVariable::indicator(space, f);
  for (const auto& eps : eps_grid) {
    if (!(eps > ExtReal(0))) continue;
    RandomVariable moved = shifted ? restrict(x + (-eps), f) : x - eps * one_f;
    RandomVariable lhs = esssup_cond(moved, f0);
    if (lhs == target) {
      rec.fail(Witness{{{"X", x}, {"1_F", one_f}, {"eps", RandomVariable::constant(space, eps)}}, lhs, target,
                       "!=", "equality held for eps > 0"});
      break;
    }
    rec.pass();
  }
  return rec.report();
}

}  // namespace

CheckReport check_essup_proj(const RandomVariable& x, const Event& f, const Partition& f0, const ValueGrid& eps_grid) {
  return essup_proj_impl("essup projection", x, f, f0, eps_grid, false);
}

CheckReport check_essup_proj_shifted(const RandomVariable& x, const Event& f, const Partition& f0,
                                     const ValueGrid& eps_grid) {
  return essup_proj_impl("essup projection (shifted)", x, f, f0, eps_grid, true);
}

}  // namespace condind
