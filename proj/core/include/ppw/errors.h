#ifndef PPW_ERRORS_H_
#define PPW_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ppw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class DuplicateElement : public Error {
 public:
  using Error::Error;
};

class NotAPartition : public Error {
 public:
  using Error::Error;
};

class BlockUndefined : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t count)
      : Error(what + " (" + std::to_string(count) + " attempted)"),
        count_(count) {}
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_;
};

class RivalDominates : public Error {
 public:
  using Error::Error;
};

class CapacityNegative : public Error {
 public:
  using Error::Error;
};

class SamePair : public Error {
 public:
  using Error::Error;
};

class ParityMismatch : public Error {
 public:
  using Error::Error;
};

class ConditionUnsatisfied : public Error {
 public:
  using Error::Error;
};

class TooFewClauses : public Error {
 public:
  using Error::Error;
};

class TreeNotWellSpread : public Error {
 public:
  using Error::Error;
};

class MaterializationTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

}  // namespace ppw

#endif  // PPW_ERRORS_H_
