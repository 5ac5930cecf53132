#include "condind/resolve.hpp"

#include "condind/error.hpp"

namespace condind {

namespace {

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

IndicatorSpec resolve_indicator(const Scenario& s, const std::string& name, const Partition& h) {
  if (name == "esssup") return make_esssup(s.space, h);
  if (name == "essinf") return make_essinf(s.space, h);
  if (name == "condexp") return make_condexp(s.space, h);
  if (name == "condexp-ext") return make_condexp_ext(s.space, h);
  if (starts_with(name, "weighted:")) {
    std::string var = name.substr(9);
    return make_weighted(s.space, h, s.variable(var), var);
  }
  if (starts_with(name, "dual:")) return dual(resolve_indicator(s, name.substr(5), h));
  if (starts_with(name, "mix:")) return mix_self_dual(resolve_indicator(s, name.substr(4), h));
  if (starts_with(name, "famsup:") || starts_with(name, "faminf:")) {
    std::vector<IndicatorSpec> members;
    for (const auto& part : split(name.substr(7), ',')) {
      if (part.empty()) throw UnknownName("empty member in '" + name + "'");
      members.push_back(resolve_indicator(s, part, h));
    }
    return starts_with(name, "famsup:") ? family_sup(members) : family_inf(members);
  }
  if (starts_with(name, "lowext:") || starts_with(name, "upext:")) {
    const bool lower = starts_with(name, "lowext:");
    std::string rest = name.substr(lower ? 7 : 6);
    std::string inner = rest;
    std::string e_names;
    if (auto pos = rest.rfind(':'); pos != std::string::npos) {
      inner = rest.substr(0, pos);
      e_names = rest.substr(pos + 1);
    }
    std::vector<RandomVariable> e_list;
    if (!e_names.empty())
      for (const auto& v : split(e_names, ',')) e_list.push_back(s.variable(v));
    IndicatorSpec base = resolve_indicator(s, inner, h);
    return lower ? make_lower_extension(base, std::move(e_list), e_names)
                 : make_upper_extension(base, std::move(e_list), e_names);
  }
  throw UnknownName("unknown indicator '" + name + "'");
}

StochasticIndicator resolve_family(const Scenario& s, const std::string& spec) {
  const Filtration& f = s.require_filtration();
  std::vector<std::string> names = split(spec, ';');
  if (names.size() == 1) names.assign(f.size(), spec);
  if (names.size() != f.size())
    throw ValidationError("family '" + spec + "' names " + std::to_string(names.size()) + " indicators for " +
                          std::to_string(f.size()) + " dates");
  std::vector<IndicatorSpec> per_time;
  for (std::size_t t = 0; t < f.size(); ++t) per_time.push_back(resolve_indicator(s, names[t], f.at(t)));
  return make_stochastic(spec, f, std::move(per_time));
}

}  // namespace condind
