#pragma once

#include <stdexcept>
#include <string>

namespace loopshift {

// Stable error identifiers. The CLI maps each variant to a distinct exit
// code (exit code = numeric value below), so renumbering is a breaking
// change.
enum class ErrorCode : int {
  Generic = 1,
  ParseError = 2,
  InvalidArgument = 3,
  NegativeCoefficient = 10,
  ZeroSeries = 11,
  EntropyAtOrBelowZero = 12,
  InconclusiveEntropy = 13,
  PeriodMismatch = 14,
  NotRealizable = 15,
  LoopNotFound = 16,
  NotIrreducible = 17,
  SplitMismatch = 18,
  Degenerate = 19,
  NoValidN = 20,
  PositivityViolated = 21,
  MagicWordUnavailable = 22,
  BudgetExceeded = 23,
  EntropyMismatch = 24,
  NotSPR = 25,
  NoValidBeta = 26,
  CommonSeriesMismatch = 27,
  NoMagicWord = 28,
  AmbiguousParse = 29,
  NotInImage = 30,
  UnknownSymbol = 31,
  NotRecurrent = 32,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }
  int exit_code() const { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

// A coefficient that must stay nonnegative went negative at index n.
class NegativeCoefficientError : public Error {
 public:
  explicit NegativeCoefficientError(int n)
      : Error(ErrorCode::NegativeCoefficient,
              "coefficient at index " + std::to_string(n) +
                  " would become negative"),
        index_(n) {}
  int index() const { return index_; }

 private:
  int index_;
};

class PeriodMismatchError : public Error {
 public:
  explicit PeriodMismatchError(int n)
      : Error(ErrorCode::PeriodMismatch,
              "nonzero coefficient off the period grid at index " +
                  std::to_string(n)),
        index_(n) {}
  PeriodMismatchError(int pa, int pb)
      : Error(ErrorCode::PeriodMismatch,
              "periods differ: " + std::to_string(pa) + " vs " +
                  std::to_string(pb)),
        index_(0) {}
  int index() const { return index_; }

 private:
  int index_;
};

class NotRealizableError : public Error {
 public:
  explicit NotRealizableError(int n)
      : Error(ErrorCode::NotRealizable,
              "fixed-point sequence is not realizable at n = " +
                  std::to_string(n)),
        index_(n) {}
  int index() const { return index_; }

 private:
  int index_;
};

class PositivityViolatedError : public Error {
 public:
  explicit PositivityViolatedError(int step)
      : Error(ErrorCode::PositivityViolated,
              "positivity condition fails at deletion step " +
                  std::to_string(step)),
        step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

class CommonSeriesMismatchError : public Error {
 public:
  explicit CommonSeriesMismatchError(int n)
      : Error(ErrorCode::CommonSeriesMismatch,
              "left/right limit series disagree at degree " +
                  std::to_string(n) + " (internal defect)"),
        index_(n) {}
  int index() const { return index_; }

 private:
  int index_;
};

}  // namespace loopshift
