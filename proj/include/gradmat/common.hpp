#pragma once

#include <stdexcept>
#include <string>

namespace gradmat {

/// Caller passed arguments violating an operation's precondition.
struct invalid_argument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A structure-constant table failed commutativity/associativity/unit checks.
struct invalid_algebra : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A mathematically guaranteed condition failed; never swallowed.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// An enumeration exceeded its configured budget.
struct resource_limit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gradmat
