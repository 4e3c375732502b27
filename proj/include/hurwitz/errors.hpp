#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation at a pole (Gamma at a non-positive integer).
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Requested accuracy not reached within the configured budget. Subclasses
/// carry the best available estimate.
class AccuracyError : public Error {
public:
    using Error::Error;
};

}  // namespace hurwitz
