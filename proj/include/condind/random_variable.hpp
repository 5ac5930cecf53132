#pragma once

#include <string>
#include <vector>

#include "condind/ext_real.hpp"
#include "condind/space.hpp"

namespace condind {

/// An extended-real random variable: one value per atom of its space.
/// With no null atoms, almost-sure equality is plain equality.
class RandomVariable {
 public:
  RandomVariable() = default;
  RandomVariable(SpacePtr space, std::vector<ExtReal> values);

  static RandomVariable constant(SpacePtr space, const ExtReal& v);
  static RandomVariable zero(SpacePtr space) { return constant(std::move(space), ExtReal(0)); }
  /// 1_A.
  static RandomVariable indicator(SpacePtr space, const Event& event);
  /// Cell-constant variable taking cell_values[k] on cell k of `h`.
  static RandomVariable from_cells(SpacePtr space, const Partition& h, const std::vector<ExtReal>& cell_values);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return values_.size(); }
  const ExtReal& operator[](std::size_t atom) const { return values_[atom]; }
  const std::vector<ExtReal>& values() const { return values_; }

  bool all_finite() const;
  bool is_nonneg() const;
  std::vector<std::string> to_strings() const;
  /// "(1, 3, 2, 6)"
  std::string to_string() const;

  RandomVariable operator-() const;
  RandomVariable map(ExtReal (*f)(const ExtReal&)) const;

  friend bool operator==(const RandomVariable& a, const RandomVariable& b);

 private:
  SpacePtr space_;
  std::vector<ExtReal> values_;
};

/// Throws SpaceMismatch unless both variables live on the same space.
void require_same_space(const RandomVariable& a, const RandomVariable& b);

RandomVariable operator+(const RandomVariable& a, const RandomVariable& b);
RandomVariable operator-(const RandomVariable& a, const RandomVariable& b);
RandomVariable operator*(const RandomVariable& a, const RandomVariable& b);
RandomVariable operator*(const ExtReal& s, const RandomVariable& x);
RandomVariable operator+(const RandomVariable& x, const ExtReal& s);

RandomVariable atomwise_max(const RandomVariable& a, const RandomVariable& b);
RandomVariable atomwise_min(const RandomVariable& a, const RandomVariable& b);

/// a <= b on every atom.
bool atomwise_leq(const RandomVariable& a, const RandomVariable& b);
bool atomwise_leq_on(const RandomVariable& a, const RandomVariable& b, const Event& where);
bool equal_on(const RandomVariable& a, const RandomVariable& b, const Event& where);

RandomVariable positive_part(const RandomVariable& x);
RandomVariable negative_part(const RandomVariable& x);

/// True iff X is constant on every cell of h.
bool is_measurable(const RandomVariable& x, const Partition& h);

/// X * 1_H: X on H and 0 elsewhere (0 * inf = 0 applies off H).
RandomVariable restrict(const RandomVariable& x, const Event& h);

/// X on `where`, Y elsewhere.
RandomVariable patch(const RandomVariable& x, const Event& where, const RandomVariable& y);

/// E(X) for finite-valued X; infinities follow the extended conventions
/// (E(X+) - E(X-)).
ExtReal expectation(const RandomVariable& x);

}  // namespace condind
