#pragma once

#include <stdexcept>
#include <string>

namespace quiverthick {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad shape, index, mismatch).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An endomorphism algebra could not be split over the working field.
/// Carries the minimal polynomial that failed to factor.
class NeedsFieldExtension : public Error {
 public:
  NeedsFieldExtension(std::string minimal_polynomial, std::size_t member)
      : Error("endomorphism algebra of family member " + std::to_string(member) +
              " needs a field extension; minimal polynomial " + minimal_polynomial),
        minimal_polynomial_(std::move(minimal_polynomial)),
        member_(member) {}

  const std::string& minimal_polynomial() const { return minimal_polynomial_; }
  std::size_t member() const { return member_; }

 private:
  std::string minimal_polynomial_;
  std::size_t member_;
};

}  // namespace quiverthick
