#include "condind/ext_real.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace condind {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

Rational parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
      exp_negative = exp[0] == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) throw std::invalid_argument("bad exponent");
    exponent = std::stol(std::string(exp));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      throw std::invalid_argument("bad decimal");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("bad number");
    digits = std::string(s);
  }
  Rational q(mpz_class(digits, 10));
  q *= pow10(exponent);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
      negative = num[0] == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("bad fraction: " + std::string(text));
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational q(mpz_class(std::string(num), 10), d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  try {
    return parse_decimal(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: " + std::string(text));
  }
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

ExtReal ExtReal::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "inf" || text == "+inf") return plus_inf();
  if (text == "-inf") return minus_inf();
  return ExtReal(parse_rational(text));
}

int ExtReal::sign() const {
  switch (kind_) {
    case Kind::PlusInf: return 1;
    case Kind::MinusInf: return -1;
    case Kind::Finite: break;
  }
  return sgn(value_);
}

const Rational& ExtReal::value() const {
  if (!is_finite()) throw std::domain_error("value() of an infinite ExtReal");
  return value_;
}

std::string ExtReal::to_string() const {
  switch (kind_) {
    case Kind::PlusInf: return "inf";
    case Kind::MinusInf: return "-inf";
    case Kind::Finite: break;
  }
  return rational_to_string(value_);
}

double ExtReal::to_double() const {
  switch (kind_) {
    case Kind::PlusInf: return std::numeric_limits<double>::infinity();
    case Kind::MinusInf: return -std::numeric_limits<double>::infinity();
    case Kind::Finite: break;
  }
  return value_.get_d();
}

ExtReal ExtReal::operator-() const {
  switch (kind_) {
    case Kind::PlusInf: return minus_inf();
    case Kind::MinusInf: return plus_inf();
    case Kind::Finite: break;
  }
  return ExtReal(Rational(-value_));
}

bool operator==(const ExtReal& a, const ExtReal& b) {
  return a.kind_ == b.kind_ && (a.kind_ != ExtReal::Kind::Finite || a.value_ == b.value_);
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != ExtReal::Kind::Finite) return std::strong_ordering::equal;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// Convention table (rows a, columns b):
//            -inf    finite   +inf
//   -inf     -inf    -inf     0
//   finite   -inf    a+b      +inf
//   +inf     0       +inf     +inf
ExtReal ext_add(const ExtReal& a, const ExtReal& b) {
  if (a.is_finite() && b.is_finite()) return ExtReal(Rational(a.value() + b.value()));
  if (a.is_finite()) return b;
  if (b.is_finite()) return a;
  if (a.kind() == b.kind()) return a;
  return ExtReal(0);
}

ExtReal ext_sub(const ExtReal& a, const ExtReal& b) { return ext_add(a, -b); }

ExtReal ext_mul(const ExtReal& a, const ExtReal& b) {
  if (a.is_finite() && b.is_finite()) return ExtReal(Rational(a.value() * b.value()));
  int s = a.sign() * b.sign();
  if (s == 0) return ExtReal(0);
  return s > 0 ? ExtReal::plus_inf() : ExtReal::minus_inf();
}

ExtReal positive_part(const ExtReal& x) { return x.sign() > 0 ? x : ExtReal(0); }
ExtReal negative_part(const ExtReal& x) { return x.sign() < 0 ? -x : ExtReal(0); }

std::ostream& operator<<(std::ostream& os, const ExtReal& x) { return os << x.to_string(); }

}  // namespace condind
