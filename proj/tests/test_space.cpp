#include <gtest/gtest.h>

#include <set>

#include "condind/error.hpp"
#include "condind/filtration.hpp"
#include "condind/random_variable.hpp"
#include "condind/space.hpp"
#include "helpers.hpp"

using namespace condind;
using condind::testing::pairs4;
using condind::testing::rv;

TEST(Space, RejectsBadSpaces) {
  EXPECT_THROW(ProbabilitySpace::create({"a", "b"}, {Rational(1), Rational(0)}), ValidationError);
  EXPECT_THROW(ProbabilitySpace::create({"a", "b"}, {Rational(1, 2), Rational(1, 3)}), ValidationError);
  EXPECT_THROW(ProbabilitySpace::create({"a", "a"}, {Rational(1, 2), Rational(1, 2)}), ValidationError);
  EXPECT_THROW(ProbabilitySpace::create({"a", "b"}, {Rational(3, 2), Rational(-1, 2)}), ValidationError);
  auto s = ProbabilitySpace::create({"x", "y"}, {Rational(1, 3), Rational(2, 3)});
  EXPECT_EQ(s->size(), 2u);
  EXPECT_EQ(s->index_of("y"), 1u);
  EXPECT_FALSE(s->index_of("z").has_value());
}

TEST(Partition, CanonicalAndValidated) {
  Partition p(4, {{3, 2}, {1, 0}});
  EXPECT_EQ(p, pairs4());
  EXPECT_EQ(p.cell(0), (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(Partition(4, {{0, 1}, {1, 2, 3}}), ValidationError);
  EXPECT_THROW(Partition(4, {{0, 1}, {2}}), ValidationError);
  EXPECT_THROW(Partition(4, {{0, 1}, {}, {2, 3}}), ValidationError);
}

TEST(Partition, Refinement) {
  Partition fine(4, {{0}, {1}, {2, 3}});
  EXPECT_TRUE(is_refinement(fine, pairs4()));
  EXPECT_TRUE(is_refinement(pairs4(), pairs4()));
  EXPECT_FALSE(is_refinement(Partition(4, {{0, 2}, {1, 3}}), pairs4()));
  EXPECT_THROW(is_refinement(Partition::trivial(3), pairs4()), SpaceMismatch);
}

namespace {
std::size_t bell(std::size_t n) {
  // Bell triangle
  std::vector<std::size_t> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (std::size_t v : row) next.push_back(next.back() + v);
    row = next;
  }
  return row.front();
}
}  // namespace

TEST(Partition, RefinementIsPartialOrder) {
  auto all = enumerate_partitions(4);
  EXPECT_EQ(all.size(), bell(4));
  for (const auto& a : all) {
    EXPECT_TRUE(is_refinement(a, a));
    for (const auto& b : all) {
      if (is_refinement(a, b) && is_refinement(b, a)) EXPECT_EQ(a, b);
      for (const auto& c : all)
        if (is_refinement(a, b) && is_refinement(b, c)) EXPECT_TRUE(is_refinement(a, c));
    }
  }
}

TEST(Partition, BellNumbers) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto all = enumerate_partitions(n);
    EXPECT_EQ(all.size(), bell(n)) << n;
    std::set<std::vector<std::vector<std::size_t>>> distinct;
    for (const auto& p : all) distinct.insert(p.cells());
    EXPECT_EQ(distinct.size(), all.size());
  }
}

TEST(Events, EnumerationCountsAndClosure) {
  EXPECT_EQ(enumerate_events(pairs4()).size(), 4u);
  auto trivial = enumerate_events(Partition::trivial(4));
  ASSERT_EQ(trivial.size(), 2u);
  EXPECT_TRUE(trivial[0].empty());
  EXPECT_EQ(trivial[1], Event::full(4));

  Partition three(5, {{0, 3}, {1}, {2, 4}});
  auto events = enumerate_events(three);
  EXPECT_EQ(events.size(), 8u);
  std::set<std::vector<std::size_t>> seen;
  for (const auto& e : events) seen.insert(e.atoms());
  for (const auto& e : events) {
    for (const auto& cell : three.cells()) {
      std::size_t inside = 0;
      for (auto a : cell) inside += e.contains(a);
      EXPECT_TRUE(inside == 0 || inside == cell.size());
    }
    EXPECT_TRUE(seen.count(e.complement().atoms()));
    for (const auto& f : events) EXPECT_TRUE(seen.count((e | f).atoms()));
  }
}

TEST(Events, CapExceeded) {
  try {
    enumerate_events(Partition::discrete(6), 5);
    FAIL();
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cells(), 6u);
  }
}

TEST(RandomVariable, Measurability) {
  auto s = ProbabilitySpace::uniform(4);
  EXPECT_TRUE(is_measurable(rv(s, {3, 3, 6, 6}), pairs4()));
  EXPECT_FALSE(is_measurable(rv(s, {1, 3, 2, 6}), pairs4()));
  EXPECT_TRUE(is_measurable(rv(s, {1, 3, 2, 6}), Partition::discrete(4)));
}

TEST(RandomVariable, Restrict) {
  auto s = ProbabilitySpace::uniform(4);
  EXPECT_EQ(restrict(rv(s, {1, 3, 2, 6}), Event::of(4, {0, 1})), rv(s, {1, 3, 0, 0}));
  EXPECT_EQ(restrict(rv(s, {"inf", "1", "2", "3"}), Event(4)), rv(s, {0, 0, 0, 0}));
  EXPECT_EQ(restrict(rv(s, {"-inf", "1", "2", "inf"}), Event::full(4)), rv(s, {"-inf", "1", "2", "inf"}));
}

TEST(RandomVariable, ArithmeticAndExpectation) {
  auto s = ProbabilitySpace::uniform(4);
  auto x = rv(s, {1, 3, 2, 6});
  EXPECT_EQ(x + rv(s, {1, 1, 1, 1}), rv(s, {2, 4, 3, 7}));
  EXPECT_EQ(ExtReal(-2) * x, rv(s, {-2, -6, -4, -12}));
  EXPECT_EQ(expectation(x), ExtReal(3));
  EXPECT_EQ(x.to_string(), "(1, 3, 2, 6)");
  EXPECT_EQ(patch(x, Event::of(4, {0}), rv(s, {0, 0, 0, 0})), rv(s, {1, 0, 0, 0}));
  EXPECT_THROW(x + rv(ProbabilitySpace::uniform(3), {1, 1, 1}), SpaceMismatch);
}

TEST(Filtration, RequiresRefinement) {
  Filtration f({"t0", "t1", "t2"}, {Partition::trivial(4), pairs4(), Partition::discrete(4)});
  EXPECT_EQ(f.index_of("t1"), 1u);
  EXPECT_THROW(Filtration({"t0", "t1"}, {pairs4(), Partition::trivial(4)}), ValidationError);
  EXPECT_THROW(Filtration({"t0", "t0"}, {Partition::trivial(4), pairs4()}), ValidationError);
  EXPECT_THROW(Filtration({"t0"}, {Partition::trivial(4), pairs4()}), ValidationError);
}
