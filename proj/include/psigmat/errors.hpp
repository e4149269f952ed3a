#ifndef PSIGMAT_ERRORS_HPP_
#define PSIGMAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace psigmat {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Group construction would exceed the configured order cap.  CLI exit code 3.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

// Malformed input text (group files, sigma specs, CLI values).  CLI exit code 2.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Violated precondition or mathematically invalid request
// (non-normal quotient, subgroup not contained in ambient, prime not
// covered by a partition without rest block, invalid semidirect action).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

}  // namespace psigmat

#endif
