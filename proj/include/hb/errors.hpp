#ifndef HB_ERRORS_HPP
#define HB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument: out-of-domain input (n = 0, x <= 0, malformed string, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested precision_bits cannot honor the requested target width.
/// Raised instead of silently returning a wider interval.
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// Division by an interval whose hull contains zero.
class IntervalDivisionByZero : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace hb

#endif
