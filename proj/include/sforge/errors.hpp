#pragma once

#include <stdexcept>

namespace sforge {

/// An input exceeds a guard that protects against combinatorial blowup.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A formal-series operation received a series with an unusable constant term.
class ConstantTermError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A computed identity failed to hold.  Indicates a bug, never bad input.
class IdentityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sforge
