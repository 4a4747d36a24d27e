#pragma once

#include <stdexcept>

namespace dqp {

// Malformed or non-validating serialized input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A desk-scale enumeration guard was exceeded.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dqp
