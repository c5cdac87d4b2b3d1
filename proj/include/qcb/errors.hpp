#pragma once

#include <stdexcept>
#include <string>

namespace qcb {

// Malformed or out-of-contract input (non-Hermitian matrix, bad trace, dim
// mismatch, unparsable file). The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is well-formed but the requested quantity is undefined or singular at
// that point (pure state where mixedness is required, zero-eigenvalue pair
// with nonzero weight, ...). The CLI maps this to exit code 3.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A rate exponent that is +infinity (error probability exactly zero).
class InfiniteExponentError : public DomainError {
 public:
  explicit InfiniteExponentError(const std::string& what) : DomainError(what) {}
};

}  // namespace qcb
