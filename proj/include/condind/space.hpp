#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "condind/ext_real.hpp"

namespace condind {

/// A finite probability space: labelled atoms with strictly positive exact
/// probabilities summing to one. Without null atoms "almost surely" is the
/// same as "everywhere".
class ProbabilitySpace {
 public:
  /// Validates and builds a space. Throws ValidationError on a null or
  /// negative atom, probabilities not summing to 1, or duplicate labels.
  static std::shared_ptr<const ProbabilitySpace> create(std::vector<std::string> labels,
                                                        std::vector<Rational> probs);
  /// n equally likely atoms labelled a, b, c, ... (w<i> past 26).
  static std::shared_ptr<const ProbabilitySpace> uniform(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t atom) const { return labels_.at(atom); }
  const Rational& prob(std::size_t atom) const { return probs_.at(atom); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Rational>& probs() const { return probs_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool operator==(const ProbabilitySpace& other) const {
    return labels_ == other.labels_ && probs_ == other.probs_;
  }

 private:
  ProbabilitySpace(std::vector<std::string> labels, std::vector<Rational> probs)
      : labels_(std::move(labels)), probs_(std::move(probs)) {}

  std::vector<std::string> labels_;
  std::vector<Rational> probs_;
};

using SpacePtr = std::shared_ptr<const ProbabilitySpace>;

/// A set of atoms.
class Event {
 public:
  explicit Event(std::size_t atom_count = 0) : members_(atom_count, false) {}
  static Event full(std::size_t atom_count);
  static Event of(std::size_t atom_count, const std::vector<std::size_t>& atoms);

  std::size_t atom_count() const { return members_.size(); }
  bool contains(std::size_t atom) const { return members_.at(atom); }
  void insert(std::size_t atom) { members_.at(atom) = true; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> atoms() const;

  Event complement() const;
  Event operator|(const Event& other) const;
  Event operator&(const Event& other) const;
  bool operator==(const Event& other) const = default;
  bool subset_of(const Event& other) const;

 private:
  std::vector<bool> members_;
};

/// A sigma-algebra on a finite space, stored as the partition generating it.
/// Cells are kept in canonical form (each cell sorted, cells ordered by their
/// smallest atom) so that equal sigma-algebras compare equal.
class Partition {
 public:
  Partition() = default;
  /// Throws ValidationError unless the cells are nonempty, disjoint and cover
  /// all atom_count atoms.
  Partition(std::size_t atom_count, std::vector<std::vector<std::size_t>> cells);

  static Partition trivial(std::size_t atom_count);
  static Partition discrete(std::size_t atom_count);

  std::size_t atom_count() const { return cell_of_.size(); }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<std::vector<std::size_t>>& cells() const { return cells_; }
  const std::vector<std::size_t>& cell(std::size_t k) const { return cells_.at(k); }
  std::size_t cell_of(std::size_t atom) const { return cell_of_.at(atom); }
  Event cell_event(std::size_t k) const;

  bool operator==(const Partition& other) const { return cells_ == other.cells_; }

 private:
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<std::size_t> cell_of_;
};

/// True iff every cell of `fine` lies inside a cell of `coarse`.
/// Throws SpaceMismatch when the atom counts differ.
bool is_refinement(const Partition& fine, const Partition& coarse);

/// Default cap for exhaustive event enumeration.
inline constexpr std::size_t kDefaultEventCap = 20;

/// All 2^k unions of the k cells of `h`, from the empty set to the whole
/// space (binary counting order over cells). Throws CapExceeded when k > cap.
std::vector<Event> enumerate_events(const Partition& h, std::size_t cap = kDefaultEventCap);

/// Every partition of an n-atom space (Bell(n) of them), canonical form.
std::vector<Partition> enumerate_partitions(std::size_t atom_count);

}  // namespace condind
