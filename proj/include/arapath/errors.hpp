#ifndef ARAPATH_ERRORS_HPP
#define ARAPATH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arapath {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid mathematical input: non-prime characteristic, t > n, inversion
/// of zero, exponent overflow, non-square-free ideal where one is required.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Operands were constructed over different rings.
class RingMismatchError : public Error {
public:
  using Error::Error;
};

/// Text input rejected. `position` is the 0-based offset of the offending
/// character in the input string.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A resource cap was hit. The computation aborts loudly instead of
/// returning a truncated result. `kind` names the cap ("pairs", "degree",
/// "variable-cap", ...).
class BudgetExceeded : public Error {
public:
  BudgetExceeded(std::string kind, const std::string& msg)
      : Error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

/// No verified block pair could be obtained for the requested t.
class PairUnavailable : public Error {
public:
  explicit PairUnavailable(int t)
      : Error("no verified block pair available for t=" + std::to_string(t)),
        t_(t) {}
  int t() const { return t_; }

private:
  int t_;
};

/// A requested certification check did not pass.
class VerificationFailure : public Error {
public:
  using Error::Error;
};

/// An internal postcondition failed: indicates a bug, not bad input.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

}  // namespace arapath

#endif
