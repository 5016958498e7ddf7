#pragma once

#include <stdexcept>
#include <string>

namespace regsep {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownLetter : Error {
  explicit UnknownLetter(const std::string& msg) : Error(msg) {}
};

struct EmptyPeriod : Error {
  EmptyPeriod() : Error("ultimately periodic word with empty period") {}
};

struct CounterUnderflow : Error {
  int index;
  explicit CounterUnderflow(int idx)
      : Error("counter " + std::to_string(idx) + " would become negative"), index(idx) {}
};

struct BrokenChain : Error {
  explicit BrokenChain(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct NegativeEntry : Error {
  explicit NegativeEntry(const std::string& msg) : Error(msg) {}
};

struct ZeroDimension : Error {
  ZeroDimension() : Error("expected a VASS of dimension >= 1") {}
};

struct NotDyckAlphabet : Error {
  NotDyckAlphabet() : Error("operation requires a Dyck alphabet") {}
};

struct AlphabetMismatch : Error {
  explicit AlphabetMismatch(const std::string& msg) : Error(msg) {}
};

struct BudgetExceeded : Error {
  long long count;
  explicit BudgetExceeded(const std::string& what, long long n)
      : Error(what + " budget exceeded at " + std::to_string(n)), count(n) {}
};

struct CapExceeded : Error {
  long long count;
  explicit CapExceeded(long long n)
      : Error("profile candidate cap exceeded at " + std::to_string(n)), count(n) {}
};

struct InternalInvariantViolation : Error {
  explicit InternalInvariantViolation(const std::string& msg) : Error(msg) {}
};

struct InvalidDual : Error {
  explicit InvalidDual(const std::string& msg) : Error(msg) {}
};

struct NotCyclesAtAnchor : Error {
  explicit NotCyclesAtAnchor(const std::string& msg) : Error(msg) {}
};

struct NotAnAcceptingRun : Error {
  explicit NotAnAcceptingRun(const std::string& msg) : Error(msg) {}
};

struct UnliftablePath : Error {
  explicit UnliftablePath(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace regsep
