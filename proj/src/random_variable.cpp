#include "condind/random_variable.hpp"

#include <algorithm>
#include <sstream>

#include "condind/error.hpp"

namespace condind {

RandomVariable::RandomVariable(SpacePtr space, std::vector<ExtReal> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw SpaceMismatch("random variable without a space");
  if (values_.size() != space_->size())
    throw SpaceMismatch("random variable has " + std::to_string(values_.size()) + " values for " +
                        std::to_string(space_->size()) + " atoms");
}

RandomVariable RandomVariable::constant(SpacePtr space, const ExtReal& v) {
  std::size_t n = space->size();
  return RandomVariable(std::move(space), std::vector<ExtReal>(n, v));
}

RandomVariable RandomVariable::indicator(SpacePtr space, const Event& event) {
  std::vector<ExtReal> v(space->size(), ExtReal(0));
  if (event.atom_count() != v.size()) throw SpaceMismatch("indicator event on a different space");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (event.contains(i)) v[i] = ExtReal(1);
  return RandomVariable(std::move(space), std::move(v));
}

RandomVariable RandomVariable::from_cells(SpacePtr space, const Partition& h,
                                          const std::vector<ExtReal>& cell_values) {
  if (h.atom_count() != space->size()) throw SpaceMismatch("partition on a different space");
  if (cell_values.size() != h.cell_count()) throw SpaceMismatch("one value per cell required");
  std::vector<ExtReal> v(space->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = cell_values[h.cell_of(i)];
  return RandomVariable(std::move(space), std::move(v));
}

bool RandomVariable::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](const ExtReal& v) { return v.is_finite(); });
}

bool RandomVariable::is_nonneg() const {
  return std::all_of(values_.begin(), values_.end(), [](const ExtReal& v) { return v.sign() >= 0; });
}

std::vector<std::string> RandomVariable::to_strings() const {
  std::vector<std::string> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v.to_string());
  return out;
}

std::string RandomVariable::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? ", " : "") << values_[i];
  os << ')';
  return os.str();
}

RandomVariable RandomVariable::operator-() const {
  std::vector<ExtReal> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(-x);
  return RandomVariable(space_, std::move(v));
}

RandomVariable RandomVariable::map(ExtReal (*f)(const ExtReal&)) const {
  std::vector<ExtReal> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(f(x));
  return RandomVariable(space_, std::move(v));
}

bool operator==(const RandomVariable& a, const RandomVariable& b) {
  if (a.values_ != b.values_) return false;
  if (a.space_ == b.space_) return true;
  return a.space_ && b.space_ && *a.space_ == *b.space_;
}

void require_same_space(const RandomVariable& a, const RandomVariable& b) {
  if (a.space() == b.space()) return;
  if (!a.space() || !b.space() || !(*a.space() == *b.space()))
    throw SpaceMismatch("random variables live on different spaces");
}

namespace {

template <class Op>
RandomVariable zip(const RandomVariable& a, const RandomVariable& b, Op op) {
  require_same_space(a, b);
  std::vector<ExtReal> v;
  v.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v.push_back(op(a[i], b[i]));
  return RandomVariable(a.space(), std::move(v));
}

}  // namespace

RandomVariable operator+(const RandomVariable& a, const RandomVariable& b) {
  return zip(a, b, [](const ExtReal& x, const ExtReal& y) { return ext_add(x, y); });
}

RandomVariable operator-(const RandomVariable& a, const RandomVariable& b) {
  return zip(a, b, [](const ExtReal& x, const ExtReal& y) { return ext_sub(x, y); });
}

RandomVariable operator*(const RandomVariable& a, const RandomVariable& b) {
  return zip(a, b, [](const ExtReal& x, const ExtReal& y) { return ext_mul(x, y); });
}

RandomVariable operator*(const ExtReal& s, const RandomVariable& x) {
  std::vector<ExtReal> v;
  v.reserve(x.size());
  for (const auto& e : x.values()) v.push_back(ext_mul(s, e));
  return RandomVariable(x.space(), std::move(v));
}

RandomVariable operator+(const RandomVariable& x, const ExtReal& s) {
  std::vector<ExtReal> v;
  v.reserve(x.size());
  for (const auto& e : x.values()) v.push_back(ext_add(e, s));
  return RandomVariable(x.space(), std::move(v));
}

RandomVariable atomwise_max(const RandomVariable& a, const RandomVariable& b) {
  return zip(a, b, [](const ExtReal& x, const ExtReal& y) { return ext_max(x, y); });
}

RandomVariable atomwise_min(const RandomVariable& a, const RandomVariable& b) {
  return zip(a, b, [](const ExtReal& x, const ExtReal& y) { return ext_min(x, y); });
}

bool atomwise_leq(const RandomVariable& a, const RandomVariable& b) {
  require_same_space(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

bool atomwise_leq_on(const RandomVariable& a, const RandomVariable& b, const Event& where) {
  require_same_space(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (where.contains(i) && b[i] < a[i]) return false;
  return true;
}

bool equal_on(const RandomVariable& a, const RandomVariable& b, const Event& where) {
  require_same_space(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (where.contains(i) && a[i] != b[i]) return false;
  return true;
}

RandomVariable positive_part(const RandomVariable& x) {
  return x.map([](const ExtReal& v) { return positive_part(v); });
}

RandomVariable negative_part(const RandomVariable& x) {
  return x.map([](const ExtReal& v) { return negative_part(v); });
}

bool is_measurable(const RandomVariable& x, const Partition& h) {
  if (h.atom_count() != x.size()) throw SpaceMismatch("is_measurable: partition on a different space");
  for (const auto& cell : h.cells())
    for (auto a : cell)
      if (x[a] != x[cell.front()]) return false;
  return true;
}

RandomVariable restrict(const RandomVariable& x, const Event& h) {
  if (h.atom_count() != x.size()) throw SpaceMismatch("restrict: event on a different space");
  std::vector<ExtReal> v(x.size(), ExtReal(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (h.contains(i)) v[i] = x[i];
  return RandomVariable(x.space(), std::move(v));
}

RandomVariable patch(const RandomVariable& x, const Event& where, const RandomVariable& y) {
  require_same_space(x, y);
  std::vector<ExtReal> v(y.values());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (where.contains(i)) v[i] = x[i];
  return RandomVariable(x.space(), std::move(v));
}

ExtReal expectation(const RandomVariable& x) {
  bool plus_inf = false;
  bool minus_inf = false;
  Rational pos = 0;
  Rational neg = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const ExtReal& v = x[i];
    if (v.is_plus_inf()) plus_inf = true;
    else if (v.is_minus_inf()) minus_inf = true;
    else if (v.sign() > 0) pos += x.space()->prob(i) * v.value();
    else neg -= x.space()->prob(i) * v.value();
  }
  ExtReal p = plus_inf ? ExtReal::plus_inf() : ExtReal(pos);
  ExtReal n = minus_inf ? ExtReal::plus_inf() : ExtReal(neg);
  return ext_sub(p, n);
}

}  // namespace condind
