#pragma once

#include <stdexcept>
#include <string>

namespace turankit {

/// Malformed input: bad parameters, inconsistent uniformity, parse failures.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A search or enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace turankit
