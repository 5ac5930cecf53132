#pragma once

#include <array>
#include <bitset>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "condind/random_variable.hpp"

namespace condind {

/// Structural properties an indicator may declare. Declarations are not
/// verified on construction; the check_* functions test them.
enum class Flag : unsigned {
  Increasing,
  TranslationInvariant,
  PosHomogeneous,
  Linear,
  Additive,
  Subadditive,
  Superadditive,
  Convex,
  Regular,
  SelfDual,
};
inline constexpr std::size_t kFlagCount = 10;

std::string_view to_string(Flag f);
/// Accepts the snake_case names ("translation_invariant", ...).
std::optional<Flag> parse_flag(std::string_view name);
std::array<Flag, kFlagCount> all_flags();

class FlagSet {
 public:
  FlagSet() = default;
  FlagSet(std::initializer_list<Flag> flags) {
    for (Flag f : flags) set(f);
  }
  bool has(Flag f) const { return bits_.test(static_cast<unsigned>(f)); }
  FlagSet& set(Flag f, bool on = true) {
    bits_.set(static_cast<unsigned>(f), on);
    return *this;
  }
  std::vector<Flag> list() const;
  FlagSet operator&(const FlagSet& o) const {
    FlagSet r;
    r.bits_ = bits_ & o.bits_;
    return r;
  }
  bool operator==(const FlagSet&) const = default;

 private:
  std::bitset<kFlagCount> bits_;
};

using DomainPredicate = std::function<bool(const RandomVariable&)>;
using EvalMap = std::function<RandomVariable(const RandomVariable&)>;

/// A conditional indicator: a map from a domain of random variables into
/// target-measurable variables, with declared structural flags.
///
/// Evaluation must be pure. An empty domain predicate means "every random
/// variable".
struct IndicatorSpec {
  std::string name;
  SpacePtr space;
  Partition target;
  DomainPredicate domain;
  EvalMap eval;
  FlagSet flags;

  bool in_domain(const RandomVariable& x) const { return !domain || domain(x); }
  RandomVariable operator()(const RandomVariable& x) const { return eval(x); }
  /// Evaluation with a domain check; throws DomainViolation.
  RandomVariable apply(const RandomVariable& x) const;
};

/// X -> esssup_H(X), on every random variable.
IndicatorSpec make_esssup(SpacePtr space, const Partition& h);
/// X -> essinf_H(X), on every random variable.
IndicatorSpec make_essinf(SpacePtr space, const Partition& h);
/// Classical conditional expectation on integrable (finite-valued) or
/// H-measurable variables.
IndicatorSpec make_condexp(SpacePtr space, const Partition& h);
/// E(X+|H) - E(X-|H) on every random variable.
IndicatorSpec make_condexp_ext(SpacePtr space, const Partition& h);
/// X -> E(density X | H). Throws BadDensity.
IndicatorSpec make_weighted(SpacePtr space, const Partition& h, const RandomVariable& density,
                            std::string density_name = "density");

/// I*(X) = -I(-X) on -D_I. Sub/superadditivity swap; convexity is kept only
/// for linear indicators.
IndicatorSpec dual(const IndicatorSpec& ind);

/// X -> (I(X) + I*(X)) / 2 on D_I and -D_I. Self-dual. Throws EmptyDomain when
/// 0 is outside the intersection.
IndicatorSpec mix_self_dual(const IndicatorSpec& ind);

/// Atomwise supremum (resp. infimum) of a family sharing one target, on the
/// intersection of the domains. Throws MixedTargets / EmptyDomain.
IndicatorSpec family_sup(const std::vector<IndicatorSpec>& family);
IndicatorSpec family_inf(const std::vector<IndicatorSpec>& family);

/// Lower extension of a monotone indicator over E = e_list plus all
/// H-measurable variables:
///   I^L(X) = esssup_H { I(Y) : Y in E, Y <= X }.
/// The H-measurable part contributes essinf_H(X). For indicators flagged
/// regular the comparison Y <= X is made cell by cell; otherwise Y <= X must
/// hold on every atom. Throws NotMonotone, DomainViolation (element of e_list
/// outside D_I).
RandomVariable lower_extension(const IndicatorSpec& ind, const std::vector<RandomVariable>& e_list,
                               const RandomVariable& x);
/// I^U(X) = essinf_H { I(Y) : Y in E, Y >= X }.
RandomVariable upper_extension(const IndicatorSpec& ind, const std::vector<RandomVariable>& e_list,
                               const RandomVariable& x);

/// The extensions packaged as indicators defined on every random variable.
IndicatorSpec make_lower_extension(const IndicatorSpec& ind, std::vector<RandomVariable> e_list,
                                   std::string e_name = "E");
IndicatorSpec make_upper_extension(const IndicatorSpec& ind, std::vector<RandomVariable> e_list,
                                   std::string e_name = "E");

/// Closed form of the regular extensions of E(.|H) to all of L0:
/// E(X+|H) - E(X-|H).
RandomVariable ext_cond_expectation_closed_form(const RandomVariable& x, const Partition& h);

}  // namespace condind
