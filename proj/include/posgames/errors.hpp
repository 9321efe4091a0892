#pragma once

#include <stdexcept>
#include <string>

namespace posgames {

/// Malformed input or a violated parameter contract.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource guard (memo cap, enumeration cap, size cap) was hit.
/// Never swallowed: callers either propagate it or report it as an abort.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IllegalMove : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace posgames
