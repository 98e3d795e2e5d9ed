#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tanglecalc {

/// Base class for all library errors. `kind()` is a stable machine-readable tag.
class TangleError : public std::runtime_error {
public:
  TangleError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

struct ZeroZeroError : TangleError {
  ZeroZeroError() : TangleError("ZeroZero", "fraction 0/0 is undefined") {}
};

struct InfiniteInputError : TangleError {
  explicit InfiniteInputError(const std::string& op)
      : TangleError("InfiniteInput", op + " is undefined for the infinite fraction") {}
};

class SyntaxError : public TangleError {
public:
  SyntaxError(std::size_t position, const std::string& message)
      : TangleError("SyntaxError",
                    "syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

struct MontesinosDenominatorError : TangleError {
  explicit MontesinosDenominatorError(const std::string& entry)
      : TangleError("MontesinosDenominator",
                    "Montesinos entry " + entry + " must have denominator >= 2") {}
};

struct ValidationFailedError : TangleError {
  explicit ValidationFailedError(const std::string& detail)
      : TangleError("ValidationFailed", "expression failed validation: " + detail) {}
};

struct NotNormalizedError : TangleError {
  NotNormalizedError() : TangleError("NotNormalized", "expression is not in normal form") {}
};

struct NotLargeLinkError : TangleError {
  explicit NotLargeLinkError(const std::string& detail)
      : TangleError("NotLargeLink", "glued tangles must both be non-rational: " + detail) {}
};

struct UnsupportedClosureError : TangleError {
  explicit UnsupportedClosureError(const std::string& detail)
      : TangleError("UnsupportedClosure", detail) {}
};

struct OpenStrandsError : TangleError {
  explicit OpenStrandsError(const std::string& detail)
      : TangleError("OpenStrands", "diagram does not close every strand: " + detail) {}
};

struct CorruptCorpusError : TangleError {
  explicit CorruptCorpusError(const std::string& detail)
      : TangleError("CorruptCorpus", "corpus record unreadable: " + detail) {}
};

}  // namespace tanglecalc
