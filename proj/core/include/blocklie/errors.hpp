#pragma once

#include <stdexcept>
#include <string>

namespace blocklie {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BLOCKLIE_DEFINE_ERROR(Name)             \
  class Name : public Error {                   \
   public:                                      \
    using Error::Error;                         \
  }

// exact field
BLOCKLIE_DEFINE_ERROR(DivisionByZero);
// lattice
BLOCKLIE_DEFINE_ERROR(DeltaZero);
BLOCKLIE_DEFINE_ERROR(InvalidSpec);
// algebra
BLOCKLIE_DEFINE_ERROR(PreconditionViolated);
// simplicity
BLOCKLIE_DEFINE_ERROR(ZeroInput);
BLOCKLIE_DEFINE_ERROR(NotInDerived);
BLOCKLIE_DEFINE_ERROR(ReductionStuck);
BLOCKLIE_DEFINE_ERROR(DegreeExceeded);
BLOCKLIE_DEFINE_ERROR(ReplayError);
// isomorphism
BLOCKLIE_DEFINE_ERROR(SpecMismatch);
BLOCKLIE_DEFINE_ERROR(GammaNotMapped);
BLOCKLIE_DEFINE_ERROR(InvalidParams);
// realizations
BLOCKLIE_DEFINE_ERROR(SignatureMismatch);
BLOCKLIE_DEFINE_ERROR(NotRepresentable);
// parsing
BLOCKLIE_DEFINE_ERROR(JViolation);
BLOCKLIE_DEFINE_ERROR(ArityError);
BLOCKLIE_DEFINE_ERROR(ConfigError);

#undef BLOCKLIE_DEFINE_ERROR

/// Thrown by the scalar and element parsers.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& expected)
      : Error("syntax error at position " + std::to_string(position) +
              ": expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Raised when a multiplicative character cannot be built over the
/// implemented (non algebraically closed) field.
class ChiUnsolvable : public Error {
 public:
  ChiUnsolvable(long divisor, std::string target)
      : Error("no exact " + std::to_string(divisor) + "-th root of " + target +
              " in the coefficient field; choose parameters whose ratio a2/a4 "
              "is an exact " + std::to_string(divisor) +
              "-th power (e.g. a2 = a4*w^" + std::to_string(divisor) + ")"),
        divisor_(divisor),
        target_(std::move(target)) {}

  long divisor() const noexcept { return divisor_; }
  const std::string& target() const noexcept { return target_; }

 private:
  long divisor_;
  std::string target_;
};

}  // namespace blocklie
