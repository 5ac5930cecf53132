#include "condind/indicator.hpp"

#include "condind/error.hpp"
#include "condind/essential.hpp"
#include "condind/expectation.hpp"

namespace condind {
namespace {

constexpr std::array<std::string_view, kFlagCount> kFlagNames = {
    "increasing", "translation_invariant", "pos_homogeneous", "linear", "additive",
    "subadditive", "superadditive", "convex", "regular", "self_dual"};

bool finite_or_measurable(const RandomVariable& x, const Partition& h) {
  return x.all_finite() || is_measurable(x, h);
}

void require_partition_on(const SpacePtr& space, const Partition& h) {
  if (!space) throw SpaceMismatch("indicator without a space");
  if (space->size() != h.atom_count()) throw SpaceMismatch("indicator target lives on a different space");
}

}  // namespace

std::string_view to_string(Flag f) { return kFlagNames[static_cast<unsigned>(f)]; }

std::optional<Flag> parse_flag(std::string_view name) {
  for (unsigned i = 0; i < kFlagCount; ++i)
    if (kFlagNames[i] == name) return static_cast<Flag>(i);
  return std::nullopt;
}

std::array<Flag, kFlagCount> all_flags() {
  std::array<Flag, kFlagCount> out{};
  for (unsigned i = 0; i < kFlagCount; ++i) out[i] = static_cast<Flag>(i);
  return out;
}

std::vector<Flag> FlagSet::list() const {
  std::vector<Flag> out;
  for (Flag f : all_flags())
    if (has(f)) out.push_back(f);
  return out;
}

RandomVariable IndicatorSpec::apply(const RandomVariable& x) const {
  if (!in_domain(x)) throw DomainViolation(name + ": " + x.to_string() + " is outside the domain");
  return eval(x);
}

IndicatorSpec make_esssup(SpacePtr space, const Partition& h) {
  require_partition_on(space, h);
  return IndicatorSpec{
      "esssup", space, h, nullptr, [h](const RandomVariable& x) { return esssup_cond(x, h); },
      FlagSet{Flag::Increasing, Flag::TranslationInvariant, Flag::PosHomogeneous, Flag::Subadditive,
              Flag::Convex, Flag::Regular}};
}

IndicatorSpec make_essinf(SpacePtr space, const Partition& h) {
  require_partition_on(space, h);
  return IndicatorSpec{
      "essinf", space, h, nullptr, [h](const RandomVariable& x) { return essinf_cond(x, h); },
      FlagSet{Flag::Increasing, Flag::TranslationInvariant, Flag::PosHomogeneous, Flag::Superadditive,
              Flag::Regular}};
}

IndicatorSpec make_condexp(SpacePtr space, const Partition& h) {
  require_partition_on(space, h);
  return IndicatorSpec{
      "condexp", space, h, [h](const RandomVariable& x) { return finite_or_measurable(x, h); },
      [h](const RandomVariable& x) { return cond_exp_extended(x, h); },
      FlagSet{Flag::Increasing, Flag::TranslationInvariant, Flag::PosHomogeneous, Flag::Linear, Flag::Additive,
              Flag::Subadditive, Flag::Superadditive, Flag::Convex, Flag::Regular, Flag::SelfDual}};
}

IndicatorSpec make_condexp_ext(SpacePtr space, const Partition& h) {
  require_partition_on(space, h);
  return IndicatorSpec{"condexp-ext", space, h, nullptr,
                       [h](const RandomVariable& x) { return cond_exp_extended(x, h); },
                       FlagSet{Flag::Increasing, Flag::PosHomogeneous, Flag::Regular, Flag::SelfDual}};
}

IndicatorSpec make_weighted(SpacePtr space, const Partition& h, const RandomVariable& density,
                            std::string density_name) {
  require_partition_on(space, h);
  if (auto problem = density_problem(density, h)) throw BadDensity(*problem);
  return IndicatorSpec{
      "weighted:" + density_name, space, h, [h](const RandomVariable& x) { return finite_or_measurable(x, h); },
      [h, density](const RandomVariable& x) { return cond_exp_extended(density * x, h); },
      FlagSet{Flag::Increasing, Flag::TranslationInvariant, Flag::PosHomogeneous, Flag::Linear, Flag::Additive,
              Flag::Subadditive, Flag::Superadditive, Flag::Convex, Flag::Regular, Flag::SelfDual}};
}

IndicatorSpec dual(const IndicatorSpec& ind) {
  FlagSet flags;
  for (Flag f : {Flag::Increasing, Flag::TranslationInvariant, Flag::PosHomogeneous, Flag::Linear, Flag::Additive,
                 Flag::Regular, Flag::SelfDual})
    flags.set(f, ind.flags.has(f));
  flags.set(Flag::Subadditive, ind.flags.has(Flag::Superadditive));
  flags.set(Flag::Superadditive, ind.flags.has(Flag::Subadditive));
  flags.set(Flag::Convex, ind.flags.has(Flag::Convex) && ind.flags.has(Flag::Linear));
  DomainPredicate domain;
  if (ind.domain) domain = [inner = ind.domain](const RandomVariable& x) { return inner(-x); };
  return IndicatorSpec{"dual:" + ind.name, ind.space, ind.target, std::move(domain),
                       [inner = ind.eval](const RandomVariable& x) { return -inner(-x); }, flags};
}

IndicatorSpec mix_self_dual(const IndicatorSpec& ind) {
  IndicatorSpec star = dual(ind);
  RandomVariable zero = RandomVariable::zero(ind.space);
  if (!ind.in_domain(zero) || !star.in_domain(zero))
    throw EmptyDomain("mix:" + ind.name + ": domain and its negation do not share 0");
  FlagSet flags{Flag::SelfDual};
  for (Flag f : {Flag::Increasing, Flag::PosHomogeneous, Flag::Regular}) flags.set(f, ind.flags.has(f));
  if (ind.flags.has(Flag::Linear))
    for (Flag f : {Flag::TranslationInvariant, Flag::Linear, Flag::Additive, Flag::Subadditive, Flag::Superadditive,
                   Flag::Convex})
      flags.set(f, ind.flags.has(f));
  DomainPredicate domain;
  if (ind.domain || star.domain)
    domain = [a = ind, b = star](const RandomVariable& x) { return a.in_domain(x) && b.in_domain(x); };
  const ExtReal half(1, 2);
  return IndicatorSpec{"mix:" + ind.name, ind.space, ind.target, std::move(domain),
                       [a = ind.eval, b = star.eval, half](const RandomVariable& x) {
                         return half * a(x) + half * b(x);
                       },
                       flags};
}

namespace {

IndicatorSpec family_extremum(const std::vector<IndicatorSpec>& family, bool take_sup) {
  const char* kind = take_sup ? "famsup" : "faminf";
  if (family.empty()) throw EmptyDomain(std::string(kind) + ": empty family");
  const auto& first = family.front();
  std::string name = std::string(kind) + ":";
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (!(family[k].target == first.target) || family[k].space->size() != first.space->size())
      throw MixedTargets(std::string(kind) + ": indicators '" + first.name + "' and '" + family[k].name +
                         "' target different sigma-algebras");
    name += (k ? "," : "") + family[k].name;
  }
  RandomVariable zero = RandomVariable::zero(first.space);
  for (const auto& ind : family)
    if (!ind.in_domain(zero)) throw EmptyDomain(name + ": 0 outside the domain of " + ind.name);
  FlagSet flags{Flag::Increasing, Flag::TranslationInvariant, Flag::PosHomogeneous, Flag::Regular,
                take_sup ? Flag::Subadditive : Flag::Superadditive};
  if (take_sup) flags.set(Flag::Convex);
  for (const auto& ind : family) flags = flags & ind.flags;
  DomainPredicate domain = [family](const RandomVariable& x) {
    for (const auto& ind : family)
      if (!ind.in_domain(x)) return false;
    return true;
  };
  EvalMap eval = [family, take_sup](const RandomVariable& x) {
    RandomVariable acc = family.front()(x);
    for (std::size_t k = 1; k < family.size(); ++k)
      acc = take_sup ? atomwise_max(acc, family[k](x)) : atomwise_min(acc, family[k](x));
    return acc;
  };
  return IndicatorSpec{name, first.space, first.target, std::move(domain), std::move(eval), flags};
}

void check_extension_inputs(const IndicatorSpec& ind, const std::vector<RandomVariable>& e_list) {
  if (!ind.flags.has(Flag::Increasing))
    throw NotMonotone(ind.name + ": extensions require an indicator flagged increasing");
  for (const auto& y : e_list)
    if (!ind.in_domain(y)) throw DomainViolation(ind.name + ": extension set element " + y.to_string() +
                                                 " lies outside the domain");
}

// take_lower: I^L with Y <= X; otherwise I^U with Y >= X.
RandomVariable extension(const IndicatorSpec& ind, const std::vector<RandomVariable>& e_list,
                         const RandomVariable& x, bool take_lower) {
  check_extension_inputs(ind, e_list);
  const Partition& h = ind.target;
  std::vector<ExtReal> best = take_lower ? cell_min(x, h) : cell_max(x, h);
  const bool cellwise = ind.flags.has(Flag::Regular);
  for (const auto& y : e_list) {
    require_same_space(x, y);
    if (!cellwise && !(take_lower ? atomwise_leq(y, x) : atomwise_leq(x, y))) continue;
    std::optional<RandomVariable> iy;
    for (std::size_t k = 0; k < h.cell_count(); ++k) {
      if (cellwise) {
        bool ok = true;
        for (auto a : h.cell(k))
          if (take_lower ? x[a] < y[a] : y[a] < x[a]) {
            ok = false;
            break;
          }
        if (!ok) continue;
      }
      if (!iy) iy = ind(y);
      const ExtReal& v = (*iy)[h.cell(k).front()];
      best[k] = take_lower ? ext_max(best[k], v) : ext_min(best[k], v);
    }
  }
  return RandomVariable::from_cells(x.space(), h, best);
}

}  // namespace

IndicatorSpec family_sup(const std::vector<IndicatorSpec>& family) { return family_extremum(family, true); }
IndicatorSpec family_inf(const std::vector<IndicatorSpec>& family) { return family_extremum(family, false); }

RandomVariable lower_extension(const IndicatorSpec& ind, const std::vector<RandomVariable>& e_list,
                               const RandomVariable& x) {
  return extension(ind, e_list, x, true);
}

RandomVariable upper_extension(const IndicatorSpec& ind, const std::vector<RandomVariable>& e_list,
                               const RandomVariable& x) {
  return extension(ind, e_list, x, false);
}

IndicatorSpec make_lower_extension(const IndicatorSpec& ind, std::vector<RandomVariable> e_list, std::string e_name) {
  check_extension_inputs(ind, e_list);
  FlagSet flags{Flag::Increasing};
  flags.set(Flag::Regular, ind.flags.has(Flag::Regular));
  return IndicatorSpec{"lowext:" + ind.name + ":" + e_name, ind.space, ind.target, nullptr,
                       [ind, e = std::move(e_list)](const RandomVariable& x) { return lower_extension(ind, e, x); },
                       flags};
}

IndicatorSpec make_upper_extension(const IndicatorSpec& ind, std::vector<RandomVariable> e_list, std::string e_name) {
  check_extension_inputs(ind, e_list);
  FlagSet flags{Flag::Increasing};
  flags.set(Flag::Regular, ind.flags.has(Flag::Regular));
  return IndicatorSpec{"upext:" + ind.name + ":" + e_name, ind.space, ind.target, nullptr,
                       [ind, e = std::move(e_list)](const RandomVariable& x) { return upper_extension(ind, e, x); },
                       flags};
}

RandomVariable ext_cond_expectation_closed_form(const RandomVariable& x, const Partition& h) {
  CellParts parts = cond_exp_parts(x, h);
  std::vector<ExtReal> cells;
  cells.reserve(h.cell_count());
  for (std::size_t k = 0; k < h.cell_count(); ++k) cells.push_back(parts.plus[k] - parts.minus[k]);
  return RandomVariable::from_cells(x.space(), h, cells);
}

}  // namespace condind
