#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "condind/random_variable.hpp"
#include "condind/sampling.hpp"
#include "condind/space.hpp"

namespace condind {

enum class Verdict { Verified, Counterexample, Skipped };
std::string to_string(Verdict v);

/// Inputs and both sides of a violated relation. Events are stored as their
/// indicator variables so every witness can be re-evaluated.
struct Witness {
  std::vector<std::pair<std::string, RandomVariable>> inputs;
  RandomVariable lhs;
  RandomVariable rhs;
  std::string relation;  // "==" or "<=" : the relation lhs REL rhs that failed
  std::string note;
};

struct CheckReport {
  std::string property;
  Verdict verdict = Verdict::Skipped;
  std::size_t cases = 0;
  std::optional<Witness> witness;
  std::string reason;
  /// Set when an implication proved in theory is observed to fail.
  bool alarm = false;
  std::vector<std::string> notes;
  std::vector<CheckReport> children;

  static CheckReport verified(std::string property, std::size_t cases);
  static CheckReport counterexample(std::string property, std::size_t cases, Witness w);
  static CheckReport skipped(std::string property, std::string reason, std::size_t cases = 0);
  /// Combines children: Counterexample if any child has one, else Verified
  /// if any child verified, else Skipped.
  static CheckReport composite(std::string property, std::vector<CheckReport> children);

  bool has_counterexample() const;
  bool has_alarm() const;
  /// No counterexample and no alarm anywhere in the tree.
  bool ok() const { return !has_counterexample() && !has_alarm(); }
};

/// Knobs shared by the property checkers.
struct CheckOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultEventCap;
  /// Single-variable properties sweep the whole grid when grid^atoms is at
  /// most this many variables; otherwise they sample.
  std::size_t exhaustive_budget = 300000;
  ValueGrid grid = default_grid();
};

/// Accumulates cases for one property and records the first violation.
class CaseRecorder {
 public:
  explicit CaseRecorder(std::string property) : property_(std::move(property)) {}

  /// Records a case; returns false once a counterexample is held.
  bool equal(const RandomVariable& lhs, const RandomVariable& rhs,
             std::vector<std::pair<std::string, RandomVariable>> inputs, std::string note = {});
  bool leq(const RandomVariable& lhs, const RandomVariable& rhs,
           std::vector<std::pair<std::string, RandomVariable>> inputs, std::string note = {});
  bool equal_on(const RandomVariable& lhs, const RandomVariable& rhs, const Event& where,
                std::vector<std::pair<std::string, RandomVariable>> inputs, std::string note = {});
  /// Counts a case that holds without comparison.
  void pass() { ++cases_; }
  void fail(Witness w);
  bool failed() const { return witness_.has_value(); }
  std::size_t cases() const { return cases_; }

  CheckReport report() const;

 private:
  std::string property_;
  std::size_t cases_ = 0;
  std::optional<Witness> witness_;
};

}  // namespace condind
