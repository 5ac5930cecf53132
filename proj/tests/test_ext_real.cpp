#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "condind/ext_real.hpp"

using condind::ExtReal;
using condind::Rational;

namespace {

enum Tag { M, F, P };

ExtReal of(Tag t, long finite) {
  if (t == M) return ExtReal::minus_inf();
  if (t == P) return ExtReal::plus_inf();
  return ExtReal(finite);
}

// Hand-written convention table; finite entries are computed with plain longs.
ExtReal expected_add(Tag a, long x, Tag b, long y) {
  if (a == F && b == F) return ExtReal(x + y);
  if (a == F) return of(b, 0);
  if (b == F) return of(a, 0);
  if (a == b) return of(a, 0);
  return ExtReal(0);
}

ExtReal expected_sub(Tag a, long x, Tag b, long y) {
  Tag nb = b == M ? P : (b == P ? M : F);
  if (a != F && a == b) return ExtReal(0);
  return expected_add(a, x, nb, -y);
}

ExtReal expected_mul(Tag a, long x, Tag b, long y) {
  if (a == F && b == F) return ExtReal(x * y);
  int sa = a == M ? -1 : (a == P ? 1 : (x > 0) - (x < 0));
  int sb = b == M ? -1 : (b == P ? 1 : (y > 0) - (y < 0));
  if (sa * sb == 0) return ExtReal(0);
  return sa * sb > 0 ? ExtReal::plus_inf() : ExtReal::minus_inf();
}

}  // namespace

TEST(ExtReal, NineCellConventionTable) {
  for (long x : {-3L, 0L, 2L})
    for (long y : {-1L, 0L, 5L})
      for (Tag a : {M, F, P})
        for (Tag b : {M, F, P}) {
          ExtReal u = of(a, x), v = of(b, y);
          EXPECT_EQ(u + v, expected_add(a, x, b, y)) << u << " + " << v;
          EXPECT_EQ(u - v, expected_sub(a, x, b, y)) << u << " - " << v;
          EXPECT_EQ(u * v, expected_mul(a, x, b, y)) << u << " * " << v;
        }
}

TEST(ExtReal, DocumentedExamples) {
  EXPECT_EQ(ExtReal::plus_inf() - ExtReal::plus_inf(), ExtReal(0));
  EXPECT_EQ(ExtReal::minus_inf() - ExtReal::minus_inf(), ExtReal(0));
  EXPECT_EQ(ExtReal(3, 2) + ExtReal(1, 2), ExtReal(2));
  EXPECT_EQ(ExtReal(0) * ExtReal::minus_inf(), ExtReal(0));
  EXPECT_EQ(ExtReal::plus_inf() + ExtReal::plus_inf(), ExtReal::plus_inf());
  EXPECT_EQ(ExtReal(7) - ExtReal::plus_inf(), ExtReal::minus_inf());
}

TEST(ExtReal, CommutativeWithIdentities) {
  std::vector<ExtReal> vals{ExtReal::minus_inf(), ExtReal(-2), ExtReal(-1, 3), ExtReal(0),
                            ExtReal(5, 7),        ExtReal(4),  ExtReal::plus_inf()};
  for (const auto& a : vals) {
    EXPECT_EQ(a + ExtReal(0), a);
    EXPECT_EQ(a * ExtReal(1), a);
    for (const auto& b : vals) {
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
    }
  }
}

TEST(ExtReal, DistributesOverDifferenceForFiniteScalars) {
  std::vector<ExtReal> vals{ExtReal::minus_inf(), ExtReal(-2), ExtReal(-1, 3), ExtReal(0),
                            ExtReal(5, 7),        ExtReal(4),  ExtReal::plus_inf()};
  for (const auto& alpha : {ExtReal(-3), ExtReal(-1, 2), ExtReal(0), ExtReal(2, 3), ExtReal(5)})
    for (const auto& a : vals)
      for (const auto& b : vals) EXPECT_EQ(alpha * (a - b), alpha * a - alpha * b) << alpha << a << b;
}

TEST(ExtReal, ParseAndPrint) {
  EXPECT_EQ(ExtReal::parse("inf"), ExtReal::plus_inf());
  EXPECT_EQ(ExtReal::parse("+inf"), ExtReal::plus_inf());
  EXPECT_EQ(ExtReal::parse("-inf"), ExtReal::minus_inf());
  EXPECT_EQ(ExtReal::parse("6/4"), ExtReal(3, 2));
  EXPECT_EQ(ExtReal::parse("0.125"), ExtReal(1, 8));
  EXPECT_EQ(ExtReal::parse("-1.5e-3"), ExtReal(-3, 2000));
  EXPECT_EQ(ExtReal(3, 2).to_string(), "3/2");
  EXPECT_EQ(ExtReal(-4).to_string(), "-4");
  EXPECT_EQ(ExtReal::minus_inf().to_string(), "-inf");
  EXPECT_THROW(ExtReal::parse("abc"), std::invalid_argument);
  EXPECT_THROW(ExtReal::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(ExtReal::plus_inf().value(), std::domain_error);
  EXPECT_THROW(condind::parse_rational("inf"), std::invalid_argument);
}

TEST(ExtReal, ReducedWithPositiveDenominator) {
  ExtReal x = ExtReal::parse("-4/6");
  EXPECT_EQ(x.value().get_num(), -2);
  EXPECT_EQ(x.value().get_den(), 3);
}

TEST(ExtReal, OrderAndParts) {
  EXPECT_LT(ExtReal::minus_inf(), ExtReal(-1000000));
  EXPECT_LT(ExtReal(1000000), ExtReal::plus_inf());
  EXPECT_EQ(condind::positive_part(ExtReal(-3)), ExtReal(0));
  EXPECT_EQ(condind::negative_part(ExtReal(-3)), ExtReal(3));
  EXPECT_EQ(condind::negative_part(ExtReal::minus_inf()), ExtReal::plus_inf());
  std::ostringstream os;
  os << ExtReal(-1, 2);
  EXPECT_EQ(os.str(), "-1/2");
}
