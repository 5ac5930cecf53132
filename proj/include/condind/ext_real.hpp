#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace condind {

using Rational = mpq_class;

/// An exact rational or one of the two infinities.
///
/// Arithmetic follows the extended-real conventions used throughout the
/// library: r + (+inf) = +inf, inf - inf = 0, 0 * (+-inf) = 0. These are
/// conventions, not limits, so e.g. (+inf) + (-inf) is 0 and the sum is not
/// associative on mixed infinities.
class ExtReal {
 public:
  enum class Kind : std::uint8_t { MinusInf, Finite, PlusInf };

  ExtReal() = default;
  ExtReal(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ExtReal(Rational v) : value_(std::move(v)) { value_.canonicalize(); }  // NOLINT
  ExtReal(long num, long den) : value_(num, den) { value_.canonicalize(); }

  static ExtReal plus_inf() { return ExtReal(Kind::PlusInf); }
  static ExtReal minus_inf() { return ExtReal(Kind::MinusInf); }

  /// Parses "inf", "+inf", "-inf", integers, "p/q" and decimals ("0.125",
  /// "-1.5e-3") into exact values. Throws std::invalid_argument.
  static ExtReal parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_plus_inf() const { return kind_ == Kind::PlusInf; }
  bool is_minus_inf() const { return kind_ == Kind::MinusInf; }
  bool is_zero() const { return is_finite() && sgn(value_) == 0; }
  int sign() const;

  /// The rational value; throws std::domain_error on an infinity.
  const Rational& value() const;

  /// "p/q" (or "p" when q == 1), "inf", "-inf".
  std::string to_string() const;
  double to_double() const;

  ExtReal operator-() const;

  friend bool operator==(const ExtReal& a, const ExtReal& b);
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

 private:
  explicit ExtReal(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Rational value_;  // 0 for infinities
};

ExtReal ext_add(const ExtReal& a, const ExtReal& b);
/// a + (-b); in particular inf - inf = 0 and (-inf) - (-inf) = 0.
ExtReal ext_sub(const ExtReal& a, const ExtReal& b);
ExtReal ext_mul(const ExtReal& a, const ExtReal& b);

inline ExtReal operator+(const ExtReal& a, const ExtReal& b) { return ext_add(a, b); }
inline ExtReal operator-(const ExtReal& a, const ExtReal& b) { return ext_sub(a, b); }
inline ExtReal operator*(const ExtReal& a, const ExtReal& b) { return ext_mul(a, b); }

inline const ExtReal& ext_max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }
inline const ExtReal& ext_min(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }

/// max(x, 0) and max(-x, 0).
ExtReal positive_part(const ExtReal& x);
ExtReal negative_part(const ExtReal& x);

std::ostream& operator<<(std::ostream& os, const ExtReal& x);

/// Parses a plain rational ("p/q" or decimal); rejects infinities.
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

}  // namespace condind
