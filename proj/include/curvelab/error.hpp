#ifndef CURVELAB_ERROR_HPP
#define CURVELAB_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace curvelab {

enum class ErrorKind {
  InvalidArgument,
  RingMismatch,
  Overflow,
  StepBound,
  SearchBound,
  Refused,
  Inconsistent,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A mathematical refusal: the input is well formed but outside the regime
/// where the requested construction is defined. `reason()` is a stable short
/// tag such as "gcd>1", "max-coordinate fails" or "not Bresinsky form".
class Refusal : public Error {
 public:
  Refusal(std::string reason, const std::string& detail)
      : Error(ErrorKind::Refused, detail.empty() ? reason : reason + ": " + detail),
        reason_(std::move(reason)) {}
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace checked
}  // namespace curvelab

#endif  // CURVELAB_ERROR_HPP
