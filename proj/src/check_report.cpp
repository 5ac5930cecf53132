#include "condind/check_report.hpp"

#include <algorithm>

namespace condind {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::Counterexample: return "Counterexample";
    case Verdict::Skipped: return "Skipped";
  }
  return "?";
}

CheckReport CheckReport::verified(std::string property, std::size_t cases) {
  CheckReport r;
  r.property = std::move(property);
  r.verdict = Verdict::Verified;
  r.cases = cases;
  return r;
}

CheckReport CheckReport::counterexample(std::string property, std::size_t cases, Witness w) {
  CheckReport r;
  r.property = std::move(property);
  r.verdict = Verdict::Counterexample;
  r.cases = cases;
  r.witness = std::move(w);
  return r;
}

CheckReport CheckReport::skipped(std::string property, std::string reason, std::size_t cases) {
  CheckReport r;
  r.property = std::move(property);
  r.verdict = Verdict::Skipped;
  r.reason = std::move(reason);
  r.cases = cases;
  return r;
}

CheckReport CheckReport::composite(std::string property, std::vector<CheckReport> children) {
  CheckReport r;
  r.property = std::move(property);
  bool any_cx = false;
  bool any_verified = false;
  for (const auto& c : children) {
    r.cases += c.cases;
    any_cx = any_cx || c.verdict == Verdict::Counterexample;
    any_verified = any_verified || c.verdict == Verdict::Verified;
  }
  r.verdict = any_cx ? Verdict::Counterexample : (any_verified ? Verdict::Verified : Verdict::Skipped);
  if (r.verdict == Verdict::Skipped) r.reason = "all parts skipped";
  r.children = std::move(children);
  return r;
}

bool CheckReport::has_counterexample() const {
  if (verdict == Verdict::Counterexample) return true;
  return std::any_of(children.begin(), children.end(), [](const CheckReport& c) { return c.has_counterexample(); });
}

bool CheckReport::has_alarm() const {
  if (alarm) return true;
  return std::any_of(children.begin(), children.end(), [](const CheckReport& c) { return c.has_alarm(); });
}

bool CaseRecorder::equal(const RandomVariable& lhs, const RandomVariable& rhs,
                         std::vector<std::pair<std::string, RandomVariable>> inputs, std::string note) {
  if (failed()) return false;
  ++cases_;
  if (lhs == rhs) return true;
  witness_ = Witness{std::move(inputs), lhs, rhs, "==", std::move(note)};
  return false;
}

bool CaseRecorder::leq(const RandomVariable& lhs, const RandomVariable& rhs,
                       std::vector<std::pair<std::string, RandomVariable>> inputs, std::string note) {
  if (failed()) return false;
  ++cases_;
  if (atomwise_leq(lhs, rhs)) return true;
  witness_ = Witness{std::move(inputs), lhs, rhs, "<=", std::move(note)};
  return false;
}

bool CaseRecorder::equal_on(const RandomVariable& lhs, const RandomVariable& rhs, const Event& where,
                            std::vector<std::pair<std::string, RandomVariable>> inputs, std::string note) {
  if (failed()) return false;
  ++cases_;
  if (condind::equal_on(lhs, rhs, where)) return true;
  inputs.emplace_back("where", RandomVariable::indicator(lhs.space(), where));
  witness_ = Witness{std::move(inputs), lhs, rhs, "== on where", std::move(note)};
  return false;
}

void CaseRecorder::fail(Witness w) {
  if (failed()) return;
  ++cases_;
  witness_ = std::move(w);
}

CheckReport CaseRecorder::report() const {
  if (witness_) return CheckReport::counterexample(property_, cases_, *witness_);
  if (cases_ == 0) return CheckReport::skipped(property_, "no applicable cases");
  return CheckReport::verified(property_, cases_);
}

}  // namespace condind
