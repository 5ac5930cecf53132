#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace condind {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

/// Too many partition cells for exhaustive event enumeration.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t cells, std::size_t cap)
      : Error("event enumeration cap exceeded: " + std::to_string(cells) +
              " cells > cap " + std::to_string(cap)),
        cells_(cells),
        cap_(cap) {}
  std::size_t cells() const { return cells_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cells_;
  std::size_t cap_;
};

class EmptyDomain : public Error {
 public:
  using Error::Error;
};

class MixedTargets : public Error {
 public:
  using Error::Error;
};

class NotMonotone : public Error {
 public:
  using Error::Error;
};

class NotIncreasing : public Error {
 public:
  using Error::Error;
};

class NotRegular : public Error {
 public:
  using Error::Error;
};

class GridTooLarge : public Error {
 public:
  using Error::Error;
};

class BadDensity : public Error {
 public:
  using Error::Error;
};

class DomainViolation : public Error {
 public:
  using Error::Error;
};

/// Raised by density recovery when the additive/self-dual hypotheses are falsified.
class HypothesisFailed : public Error {
 public:
  explicit HypothesisFailed(std::vector<std::string> failed)
      : Error(describe(failed)), failed_(std::move(failed)) {}
  const std::vector<std::string>& failed() const { return failed_; }

 private:
  static std::string describe(const std::vector<std::string>& failed) {
    std::string msg = "hypothesis failed:";
    for (const auto& f : failed) msg += " " + f;
    return msg;
  }
  std::vector<std::string> failed_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("parse error at line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownCommand : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

}  // namespace condind
