#include <gtest/gtest.h>

#include "condind/error.hpp"
#include "condind/essential.hpp"
#include "condind/expectation.hpp"
#include "condind/stochastic.hpp"
#include "helpers.hpp"

using namespace condind;
using condind::testing::describe;
using condind::testing::is_counterexample;
using condind::testing::is_verified;
using condind::testing::pairs4;
using condind::testing::rv;

namespace {

SpacePtr four() { return ProbabilitySpace::uniform(4); }

Filtration three_dates() {
  return Filtration({"t0", "t1", "t2"}, {Partition::trivial(4), pairs4(), Partition::discrete(4)});
}

StochasticIndicator mixed(const SpacePtr& s) {
  Filtration f = three_dates();
  return make_stochastic("mixed", f,
                         {make_esssup(s, f.at(0)), make_essinf(s, f.at(1)), make_esssup(s, f.at(2))});
}

ValueGrid ints(long lo, long hi) {
  ValueGrid g;
  for (long v = lo; v <= hi; ++v) g.emplace_back(v);
  return g;
}

CheckOptions quick() {
  CheckOptions opt;
  opt.samples = 200;
  return opt;
}

}  // namespace

TEST(Tower, Families) {
  auto s = four();
  auto sup = esssup_family(s, three_dates());
  auto mean = condexp_family(s, three_dates());
  auto a = check_tower_all(sup, quick());
  auto b = check_tower_all(mean, quick());
  EXPECT_TRUE(is_verified(a)) << describe(a);
  EXPECT_TRUE(is_verified(b)) << describe(b);
}

TEST(Tower, MixedFamilyFails) {
  auto s = four();
  auto si = mixed(s);
  RandomVariable x = rv(s, {1, 3, 2, 6});
  EXPECT_EQ(si.at[0](si.at[1](x)), rv(s, {2, 2, 2, 2}));
  EXPECT_EQ(si.at[0](x), rv(s, {6, 6, 6, 6}));
  auto r = check_tower(si, 0, 1, quick());
  EXPECT_TRUE(is_counterexample(r)) << describe(r);
}

TEST(Stochastic, TargetsValidated) {
  auto s = four();
  Filtration f = three_dates();
  EXPECT_THROW(make_stochastic("bad", f, {make_esssup(s, f.at(0)), make_esssup(s, f.at(0)), make_esssup(s, f.at(2))}),
               ValidationError);
  EXPECT_THROW(make_stochastic("short", f, {make_esssup(s, f.at(0))}), ValidationError);
  EXPECT_THROW(make_adapted(f, {rv(s, {1, 1, 1, 1}), rv(s, {1, 2, 3, 4}), rv(s, {1, 2, 3, 4})}), ValidationError);
}

TEST(Projection, EsssupProjects) {
  auto s = four();
  IndicatorSpec i0 = make_esssup(s, Partition::trivial(4));
  RandomVariable x = rv(s, {1, 3, 2, 6});
  RandomVariable z = esssup_cond(x, pairs4());
  EXPECT_EQ(z, rv(s, {3, 3, 6, 6}));
  auto r = check_projection(i0, z, x, pairs4());
  EXPECT_TRUE(is_verified(r)) << describe(r);
  EXPECT_EQ(r.cases, 4u);

  RandomVariable y = rv(s, {2, 2, 5, 5});
  EXPECT_TRUE(is_verified(check_projection(i0, y, y, pairs4())));
}

TEST(Projection, ShiftedCandidateFails) {
  auto s = four();
  IndicatorSpec i0 = make_esssup(s, Partition::trivial(4));
  RandomVariable x = rv(s, {1, 3, 2, 6});
  RandomVariable z = esssup_cond(x, pairs4()) + ExtReal(1);
  EXPECT_NE(i0(x), i0(z));
  auto r = check_projection(i0, z, x, pairs4());
  EXPECT_TRUE(is_counterexample(r)) << describe(r);
  EXPECT_THROW(check_projection(i0, x, x, pairs4()), ValidationError);
}

TEST(Projection, SolveIsUnique) {
  auto s = four();
  IndicatorSpec i0 = make_esssup(s, Partition::trivial(4));
  auto sols = projection_solve(i0, rv(s, {1, 3, 2, 6}), pairs4(), ints(0, 6));
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0], rv(s, {3, 3, 6, 6}));

  sols = projection_solve(i0, rv(s, {0, 0, 0, 0}), pairs4(), ints(0, 6));
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0], rv(s, {0, 0, 0, 0}));

  RandomVariable m = rv(s, {4, 4, 1, 1});
  sols = projection_solve(i0, m, pairs4(), ints(0, 6));
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0], m);

  EXPECT_THROW(projection_solve(i0, m, Partition::discrete(4), ints(0, 6), 100), GridTooLarge);
}

TEST(Projection, UniquenessPremises) {
  auto s = four();
  const Partition f0 = Partition::trivial(4);
  auto mean = check_projection_uniqueness_premises(make_condexp(s, f0), quick());
  EXPECT_TRUE(is_verified(mean)) << describe(mean);

  IndicatorSpec inf = make_essinf(s, f0);
  EXPECT_EQ(inf(rv(s, {0, 1, 0, 0})), rv(s, {0, 0, 0, 0}));
  auto r = check_projection_uniqueness_premises(inf, quick());
  ASSERT_TRUE(is_counterexample(r)) << describe(r);
  EXPECT_TRUE(is_counterexample(r.children.at(1)));

  // esssup passes the degeneracy test but is only subadditive
  auto sup = check_projection_uniqueness_premises(make_esssup(s, f0), quick());
  ASSERT_EQ(sup.children.size(), 2u);
  EXPECT_TRUE(is_counterexample(sup.children[0])) << describe(sup);
  EXPECT_TRUE(is_verified(sup.children[1])) << describe(sup);
}

TEST(Martingale, EsssupAndCondexp) {
  auto s = four();
  Filtration f = three_dates();
  RandomVariable x = rv(s, {1, 3, 2, 6});
  std::vector<RandomVariable> sup_path, mean_path;
  for (const auto& p : f.partitions()) {
    sup_path.push_back(esssup_cond(x, p));
    mean_path.push_back(cond_exp_extended(x, p));
  }
  EXPECT_TRUE(is_verified(is_indicator_martingale(esssup_family(s, f), make_adapted(f, sup_path))));
  EXPECT_TRUE(is_verified(is_indicator_martingale(condexp_family(s, f), make_adapted(f, mean_path))));
  auto r = is_indicator_martingale(mixed(s), make_adapted(f, sup_path));
  EXPECT_TRUE(is_counterexample(r)) << describe(r);
}

TEST(Envelope, European) {
  auto s = four();
  Filtration f = three_dates();
  RandomVariable payoff = rv(s, {1, 3, 2, 6});
  auto v = backward_envelope(esssup_family(s, f), payoff);
  ASSERT_EQ(v.values.size(), 3u);
  EXPECT_EQ(v.values[2], payoff);
  EXPECT_EQ(v.values[1], rv(s, {3, 3, 6, 6}));
  EXPECT_EQ(v.values[0], rv(s, {6, 6, 6, 6}));

  auto m = backward_envelope(condexp_family(s, f), payoff);
  EXPECT_EQ(m.values[1], rv(s, {2, 2, 4, 4}));
  EXPECT_EQ(m.values[0], rv(s, {3, 3, 3, 3}));
}

TEST(Envelope, American) {
  auto s = four();
  Filtration f = three_dates();
  RandomVariable payoff = rv(s, {1, 3, 2, 6});
  AdaptedProcess g{{RandomVariable::constant(s, ExtReal::minus_inf()), rv(s, {5, 5, 5, 5}), payoff}};
  auto v = backward_envelope(esssup_family(s, f), payoff, g);
  EXPECT_EQ(v.values[1], rv(s, {5, 5, 6, 6}));
  EXPECT_EQ(v.values[0], rv(s, {6, 6, 6, 6}));
}

TEST(Envelope, TowerCollapseAndMonotone) {
  auto s = four();
  Filtration f = three_dates();
  auto sup = esssup_family(s, f);
  const ValueGrid grid{ExtReal(-1), ExtReal(0), ExtReal(1, 2), ExtReal(2)};
  for_each_grid_variable(s, grid, [&](const RandomVariable& p) {
    auto v = backward_envelope(sup, p);
    for (std::size_t t = 0; t < f.size(); ++t) ASSERT_EQ(v.values[t], esssup_cond(p, f.at(t)));
    RandomVariable q = p + rv(s, {0, 1, 0, 0});
    auto w = backward_envelope(sup, q);
    for (std::size_t t = 0; t < f.size(); ++t) ASSERT_TRUE(atomwise_leq(v.values[t], w.values[t]));
  });
}

TEST(EssupProj, NoPositiveShiftKeepsTheSupremum) {
  auto s = four();
  const ValueGrid eps{ExtReal(0), ExtReal(1, 4), ExtReal(1, 2), ExtReal(1), ExtReal(2)};
  Event f = Event::of(4, {2, 3});
  auto r = check_essup_proj(rv(s, {0, 0, 2, 6}), f, Partition::trivial(4), eps);
  EXPECT_TRUE(is_verified(r)) << describe(r);
  auto shifted = check_essup_proj_shifted(rv(s, {1, 3, 2, 6}), f, Partition::trivial(4), eps);
  EXPECT_TRUE(is_verified(shifted)) << describe(shifted);
  EXPECT_EQ(check_essup_proj(rv(s, {0, 0, 0, 0}), f, Partition::trivial(4), eps).verdict, Verdict::Skipped);
}
