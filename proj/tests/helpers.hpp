#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "condind/check_report.hpp"
#include "condind/random_variable.hpp"
#include "condind/report.hpp"
#include "condind/space.hpp"

namespace condind::testing {

inline ExtReal q(const char* text) { return ExtReal::parse(text); }

inline RandomVariable rv(const SpacePtr& space, std::initializer_list<std::string_view> values) {
  std::vector<ExtReal> v;
  for (std::string_view s : values) v.push_back(ExtReal::parse(s));
  return RandomVariable(space, std::move(v));
}

inline RandomVariable rv(const SpacePtr& space, std::initializer_list<long> values) {
  std::vector<ExtReal> v(values.begin(), values.end());
  return RandomVariable(space, std::move(v));
}

// {{a,b},{c,d}} on four atoms
inline Partition pairs4() { return Partition(4, {{0, 1}, {2, 3}}); }

inline std::string describe(const CheckReport& r) { return render_text(r); }

inline bool is_verified(const CheckReport& r) { return r.verdict == Verdict::Verified; }
inline bool is_counterexample(const CheckReport& r) { return r.verdict == Verdict::Counterexample; }

}  // namespace condind::testing
