#pragma once

#include <string>
#include <vector>

#include "condind/space.hpp"

namespace condind {

/// Finitely many dates, each carrying a partition; later partitions refine
/// earlier ones.
class Filtration {
 public:
  Filtration() = default;
  /// Throws ValidationError on length mismatch, duplicate times, or when a
  /// later partition does not refine an earlier one.
  Filtration(std::vector<std::string> times, std::vector<Partition> partitions);

  std::size_t size() const { return times_.size(); }
  const std::vector<std::string>& times() const { return times_; }
  const std::string& time(std::size_t t) const { return times_.at(t); }
  const Partition& at(std::size_t t) const { return partitions_.at(t); }
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::size_t index_of(const std::string& time) const;
  std::size_t atom_count() const { return partitions_.empty() ? 0 : partitions_.front().atom_count(); }

 private:
  std::vector<std::string> times_;
  std::vector<Partition> partitions_;
};

}  // namespace condind
