#pragma once

#include <stdexcept>
#include <string>

namespace uniqmax {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A payoff model or model document that violates the M_k constraints.
class ModelError : public Error {
   public:
    using Error::Error;
};

/// Inputs outside the mathematical domain of an operation (e.g. the threshold
/// radicand is negative, or n is too small for log log(n-1)).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A computation would exceed a configured size limit.
class ResourceError : public Error {
   public:
    using Error::Error;
};

/// Full enumeration would visit more outcomes than the configured cap.
class FeasibilityError : public ResourceError {
   public:
    using ResourceError::ResourceError;
};

}  // namespace uniqmax
