#ifndef CAYLEYPAIR_ERROR_HPP_
#define CAYLEYPAIR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cayleypair {

// Bad arguments: malformed text, unsupported (a, b), mismatched degrees.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size limit (elements, vertices, cycle classes) was exceeded.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical identity that must hold did not. Always a bug or a
// counterexample, never a numerical artifact.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cayleypair

#endif  // CAYLEYPAIR_ERROR_HPP_
