#include <gtest/gtest.h>

#include <algorithm>

#include "condind/checks.hpp"
#include "condind/error.hpp"
#include "condind/essential.hpp"
#include "condind/expectation.hpp"
#include "condind/indicator.hpp"
#include "helpers.hpp"

using namespace condind;
using condind::testing::describe;
using condind::testing::is_counterexample;
using condind::testing::is_verified;
using condind::testing::pairs4;
using condind::testing::rv;

namespace {

SpacePtr four() { return ProbabilitySpace::uniform(4); }

// Per-cell extremum computed by scanning cell membership atom by atom.
RandomVariable cell_extreme(const RandomVariable& x, const Partition& h, bool take_max) {
  std::vector<ExtReal> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    ExtReal best = x[i];
    for (std::size_t j = 0; j < x.size(); ++j)
      if (h.cell_of(j) == h.cell_of(i)) best = take_max ? std::max(best, x[j]) : std::min(best, x[j]);
    out[i] = best;
  }
  return RandomVariable(x.space(), out);
}

IndicatorSpec shifted_esssup(const SpacePtr& s, const Partition& h) {
  IndicatorSpec base = make_esssup(s, h);
  return IndicatorSpec{"esssup+1", s, h, {},
                       [base](const RandomVariable& x) { return base(x) + ExtReal(1); }, base.flags};
}

IndicatorSpec global_mean(const SpacePtr& s, const Partition& h) {
  return IndicatorSpec{"global mean", s, h, [](const RandomVariable& x) { return x.all_finite(); },
                       [s](const RandomVariable& x) { return RandomVariable::constant(s, expectation(x)); },
                       FlagSet{Flag::Regular}};
}

CheckOptions quick(std::uint64_t seed = 0) {
  CheckOptions opt;
  opt.samples = 200;
  opt.seed = seed;
  return opt;
}

}  // namespace

TEST(Essential, DocumentedValues) {
  auto s = four();
  EXPECT_EQ(esssup_cond(rv(s, {1, 3, 2, 6}), pairs4()), rv(s, {3, 3, 6, 6}));
  EXPECT_EQ(esssup_cond(rv(s, {"-inf", "5", "inf", "0"}), pairs4()), rv(s, {"5", "5", "inf", "inf"}));
  EXPECT_EQ(essinf_cond(rv(s, {1, 3, 2, 6}), pairs4()), rv(s, {1, 1, 2, 2}));
  EXPECT_EQ(essinf_cond(rv(s, {"inf", "inf", "0", "1"}), pairs4()), rv(s, {"inf", "inf", "0", "0"}));
  EXPECT_EQ(esssup_cond(rv(s, {3, 3, 6, 6}), pairs4()), rv(s, {3, 3, 6, 6}));
}

TEST(Essential, MatchesScanOracleOnAllPartitions) {
  auto s = four();
  const ValueGrid grid = default_grid();
  for (const auto& h : enumerate_partitions(4))
    for_each_grid_variable(s, grid, [&](const RandomVariable& x) {
      ASSERT_EQ(esssup_cond(x, h), cell_extreme(x, h, true));
      ASSERT_EQ(essinf_cond(x, h), cell_extreme(x, h, false));
      ASSERT_EQ(essinf_cond(x, h), -esssup_cond(-x, h));
    });
}

TEST(Essential, LeastMeasurableDominator) {
  auto s = four();
  const ValueGrid grid = default_grid();
  const Partition h = pairs4();
  Sampler sampler(s, 3);
  for (int k = 0; k < 100; ++k) {
    RandomVariable x = sampler.variable(grid);
    RandomVariable sup = esssup_cond(x, h);
    for (const auto& u : grid)
      for (const auto& v : grid) {
        RandomVariable z = RandomVariable::from_cells(s, h, {u, v});
        if (atomwise_leq(x, z)) ASSERT_TRUE(atomwise_leq(sup, z));
      }
  }
}

TEST(Indicators, SandwichForBuiltinsExhaustive) {
  auto s = four();
  for (const auto& h : enumerate_partitions(4)) {
    std::vector<IndicatorSpec> builtins{make_esssup(s, h), make_essinf(s, h), make_condexp(s, h),
                                        make_condexp_ext(s, h), mix_self_dual(make_esssup(s, h))};
    for_each_grid_variable(s, default_grid(), [&](const RandomVariable& x) {
      for (const auto& ind : builtins) {
        if (!ind.in_domain(x)) continue;
        RandomVariable y = ind(x);
        ASSERT_TRUE(atomwise_leq(essinf_cond(x, h), y)) << ind.name << x.to_string();
        ASSERT_TRUE(atomwise_leq(y, esssup_cond(x, h))) << ind.name << x.to_string();
      }
    });
  }
}

TEST(Indicators, DualOfEsssupIsEssinf) {
  auto s = four();
  IndicatorSpec d = dual(make_esssup(s, pairs4()));
  for_each_grid_variable(s, default_grid(),
                         [&](const RandomVariable& x) { ASSERT_EQ(d(x), essinf_cond(x, pairs4())); });
  EXPECT_TRUE(d.flags.has(Flag::Superadditive));
  EXPECT_FALSE(d.flags.has(Flag::Subadditive));
}

TEST(Indicators, DualInvolutionAndSelfDualCondexp) {
  auto s = four();
  IndicatorSpec mean = make_condexp(s, pairs4());
  IndicatorSpec dd = dual(dual(make_essinf(s, pairs4())));
  IndicatorSpec md = dual(mean);
  for_each_grid_variable(s, finite_grid(), [&](const RandomVariable& x) {
    ASSERT_EQ(dd(x), essinf_cond(x, pairs4()));
    ASSERT_EQ(md(x), mean(x));
  });
  EXPECT_TRUE(is_verified(check_dual_involution(make_esssup(s, pairs4()), quick())));
}

TEST(Indicators, MixSelfDual) {
  auto s = four();
  IndicatorSpec mix = mix_self_dual(make_esssup(s, pairs4()));
  EXPECT_EQ(mix(rv(s, {1, 3, 2, 6})), rv(s, {2, 2, 4, 4}));
  EXPECT_EQ(mix(rv(s, {5, 5, -1, -1})), rv(s, {5, 5, -1, -1}));
  IndicatorSpec mix_dual = dual(mix);
  Sampler sampler(s, 11);
  for (int k = 0; k < 200; ++k) {
    RandomVariable x = sampler.variable(finite_grid());
    ASSERT_EQ(mix(x), mix_dual(x));
  }
}

TEST(Indicators, Families) {
  auto s = four();
  const Partition h = pairs4();
  IndicatorSpec sup = make_esssup(s, h);
  IndicatorSpec single = family_sup({sup});
  IndicatorSpec both = family_sup({make_essinf(s, h), sup});
  IndicatorSpec lower = family_inf({make_condexp(s, h), sup});
  for_each_grid_variable(s, finite_grid(), [&](const RandomVariable& x) {
    ASSERT_EQ(single(x), sup(x));
    ASSERT_EQ(both(x), sup(x));
  });
  EXPECT_EQ(lower(rv(s, {1, 3, 2, 6})), rv(s, {2, 2, 4, 4}));
  EXPECT_THROW(family_sup({sup, make_esssup(s, Partition::trivial(4))}), MixedTargets);
}

TEST(Extensions, EmptyListGivesEssinf) {
  auto s = four();
  IndicatorSpec mean = make_condexp(s, pairs4());
  for_each_grid_variable(s, finite_grid(), [&](const RandomVariable& x) {
    ASSERT_EQ(lower_extension(mean, {}, x), essinf_cond(x, pairs4()));
    ASSERT_EQ(upper_extension(mean, {}, x), esssup_cond(x, pairs4()));
  });
}

TEST(Extensions, CoincideOnList) {
  auto s = four();
  IndicatorSpec sup = make_esssup(s, pairs4());
  std::vector<RandomVariable> e{rv(s, {1, 3, 2, 6}), rv(s, {0, -2, 5, 1})};
  for (const auto& x : e) {
    EXPECT_EQ(lower_extension(sup, e, x), sup(x));
    EXPECT_EQ(upper_extension(sup, e, x), sup(x));
  }
  IndicatorSpec plain{"unflagged", s, pairs4(), {}, sup.eval, FlagSet{}};
  EXPECT_THROW(lower_extension(plain, e, e[0]), NotMonotone);
}

TEST(Extensions, CondexpCollapsesWhenListIsWholeGrid) {
  auto s = four();
  const Partition h = pairs4();
  IndicatorSpec mean = make_condexp(s, h);
  const ValueGrid grid{ExtReal(0), ExtReal(1), ExtReal(2)};
  std::vector<RandomVariable> e;
  for_each_grid_variable(s, grid, [&](const RandomVariable& y) { e.push_back(y); });
  Sampler sampler(s, 5);
  for (int k = 0; k < 50; ++k) {
    RandomVariable x = sampler.variable(grid);
    // brute force over the list, cell by cell
    std::vector<ExtReal> lo(4), hi(4);
    for (std::size_t c = 0; c < h.cell_count(); ++c) {
      ExtReal best_lo = ExtReal::minus_inf(), best_hi = ExtReal::plus_inf();
      for (const auto& y : e) {
        bool below = true, above = true;
        for (auto a : h.cell(c)) {
          below = below && y[a] <= x[a];
          above = above && x[a] <= y[a];
        }
        RandomVariable iy = mean(y);
        if (below) best_lo = std::max(best_lo, iy[h.cell(c)[0]]);
        if (above) best_hi = std::min(best_hi, iy[h.cell(c)[0]]);
      }
      for (auto a : h.cell(c)) {
        lo[a] = best_lo;
        hi[a] = best_hi;
      }
    }
    ASSERT_EQ(lower_extension(mean, e, x), RandomVariable(s, lo));
    ASSERT_EQ(upper_extension(mean, e, x), RandomVariable(s, hi));
    ASSERT_EQ(lower_extension(mean, e, x), mean(x));
    ASSERT_EQ(upper_extension(mean, e, x), mean(x));
  }
}

TEST(Extensions, SandwichAndDualityReports) {
  auto s = four();
  for (const auto& ind : {make_esssup(s, pairs4()), make_essinf(s, pairs4()), make_condexp(s, pairs4())}) {
    auto a = check_extension_sandwich(ind, quick());
    auto b = check_extension_duality(ind, quick());
    EXPECT_TRUE(is_verified(a)) << describe(a);
    EXPECT_TRUE(is_verified(b)) << describe(b);
  }
}

TEST(Extensions, ClosedFormCondexp) {
  auto s = four();
  EXPECT_EQ(ext_cond_expectation_closed_form(rv(s, {"inf", "-inf", "1", "1"}), pairs4()), rv(s, {0, 0, 1, 1}));
  EXPECT_EQ(ext_cond_expectation_closed_form(rv(s, {"inf", "2", "1", "1"}), pairs4()),
            rv(s, {"inf", "inf", "1", "1"}));
  EXPECT_EQ(ext_cond_expectation_closed_form(rv(s, {1, 3, 2, 6}), pairs4()), rv(s, {2, 2, 4, 4}));
}

TEST(Checks, AxiomsOfBuiltins) {
  auto s = four();
  for (const auto& ind : {make_esssup(s, pairs4()), make_condexp(s, pairs4()), make_essinf(s, pairs4()),
                          make_condexp_ext(s, pairs4())}) {
    auto r = check_axioms(ind, quick());
    EXPECT_TRUE(r.ok() && is_verified(r)) << describe(r);
  }
}

TEST(Checks, ShiftedEsssupFailsAxioms) {
  auto s = four();
  auto r = check_axioms(shifted_esssup(s, pairs4()), quick());
  ASSERT_TRUE(is_counterexample(r)) << describe(r);
}

TEST(Checks, Regularity) {
  auto s = four();
  EXPECT_TRUE(is_verified(check_regular(make_esssup(s, pairs4()), quick())));
  EXPECT_TRUE(is_verified(check_regular(make_condexp(s, pairs4()), quick())));
  auto r = check_regular(global_mean(s, pairs4()), quick());
  EXPECT_TRUE(is_counterexample(r)) << describe(r);
}

TEST(Checks, StructuralFlags) {
  auto s = four();
  IndicatorSpec sup = make_esssup(s, pairs4());
  EXPECT_TRUE(is_verified(check_structural(sup, Flag::TranslationInvariant, quick())));
  EXPECT_TRUE(is_verified(check_structural(sup, Flag::Subadditive, quick())));
  auto lin = check_structural(sup, Flag::Linear, quick());
  ASSERT_TRUE(is_counterexample(lin)) << describe(lin);
  ASSERT_TRUE(lin.witness.has_value());
  EXPECT_FALSE(lin.witness->lhs == lin.witness->rhs);
  EXPECT_TRUE(is_verified(check_structural(make_condexp(s, pairs4()), Flag::Linear, quick())));
  EXPECT_TRUE(is_verified(check_structural(make_essinf(s, pairs4()), Flag::Superadditive, quick())));
}

TEST(Checks, HplusDecomposition) {
  auto s = four();
  IndicatorSpec sup = make_esssup(s, pairs4());
  RandomVariable h = rv(s, {-1, -1, 2, 2});
  RandomVariable x = rv(s, {1, 3, 2, 6});
  RandomVariable lhs = sup(h * x);
  RandomVariable rhs = positive_part(h) * sup(x) + negative_part(h) * sup(-x);
  EXPECT_EQ(lhs, rv(s, {-1, -1, 12, 12}));
  EXPECT_EQ(lhs, rhs);
  EXPECT_TRUE(is_verified(check_hplus_decomposition(sup, quick())));
  EXPECT_TRUE(is_verified(check_hplus_decomposition(make_condexp(s, pairs4()), quick())));
}

TEST(Checks, ImplicationsNeverAlarm) {
  auto s = four();
  IndicatorSpec mean = make_condexp(s, pairs4());
  IndicatorSpec sup = make_esssup(s, pairs4());
  auto a = check_convex_implies_regular(mean, quick());
  EXPECT_TRUE(is_verified(a) && !a.has_alarm()) << describe(a);
  auto b = check_additive_implies_regular(sup, quick());
  EXPECT_TRUE(is_verified(b) && !b.has_alarm()) << describe(b);
  CheckOptions opt;
  opt.samples = 10;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    opt.seed = seed;
    for (const auto* ind : {&mean, &sup}) {
      ASSERT_FALSE(check_convex_implies_regular(*ind, opt).has_alarm()) << seed;
      ASSERT_FALSE(check_additive_implies_regular(*ind, opt).has_alarm()) << seed;
    }
  }
}

TEST(Checks, LinearFromAdditiveAndFatou) {
  auto s = four();
  EXPECT_TRUE(is_verified(check_linear_from_additive(make_condexp(s, pairs4()), quick())));
  auto f = check_fatou(make_esssup(s, pairs4()), {{rv(s, {1, 2, 3, 4}), rv(s, {1, 2, 3, 4})}});
  EXPECT_EQ(f.verdict, Verdict::Skipped);
  EXPECT_NE(f.reason.find("partial"), std::string::npos);
}

TEST(Checks, SameSeedSameReport) {
  auto s = four();
  IndicatorSpec sup = make_esssup(s, pairs4());
  EXPECT_EQ(describe(check_regular(sup, quick(9))), describe(check_regular(sup, quick(9))));
}
