#pragma once

#include <stdexcept>
#include <string>

namespace b2dunkl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal invariant (e.g. a difference quotient that does not divide).
struct InternalError : Error { using Error::Error; };

struct NotEigenvector : Error { using Error::Error; };
struct NotHomogeneous : Error { using Error::Error; };
struct ZeroNorm : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct PoleError : DomainError { using DomainError::DomainError; };
struct NonConvergence : Error { using Error::Error; };
struct BranchError : Error { using Error::Error; };
struct OnMirror : DomainError { using DomainError::DomainError; };
struct UsageError : Error { using Error::Error; };

} // namespace b2dunkl
