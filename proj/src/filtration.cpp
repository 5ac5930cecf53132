#include "condind/filtration.hpp"

#include <algorithm>
#include <set>

#include "condind/error.hpp"

namespace condind {

Filtration::Filtration(std::vector<std::string> times, std::vector<Partition> partitions)
    : times_(std::move(times)), partitions_(std::move(partitions)) {
  if (times_.size() != partitions_.size()) throw ValidationError("filtration: one partition per time required");
  if (times_.empty()) throw ValidationError("filtration: no dates");
  std::set<std::string> seen;
  for (const auto& t : times_)
    if (!seen.insert(t).second) throw ValidationError("filtration: duplicate time '" + t + "'");
  for (std::size_t t = 1; t < partitions_.size(); ++t) {
    if (partitions_[t].atom_count() != partitions_[0].atom_count())
      throw ValidationError("filtration: partitions on different spaces");
    if (!is_refinement(partitions_[t], partitions_[t - 1]))
      throw ValidationError("filtration refinement violated: '" + times_[t] + "' does not refine '" +
                            times_[t - 1] + "'");
  }
}

std::size_t Filtration::index_of(const std::string& time) const {
  auto it = std::find(times_.begin(), times_.end(), time);
  if (it == times_.end()) throw ValidationError("unknown filtration time '" + time + "'");
  return static_cast<std::size_t>(it - times_.begin());
}

}  // namespace condind
