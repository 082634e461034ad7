#pragma once

#include <stdexcept>
#include <string>

namespace gnb {

/// Caller passed something outside an operation's domain.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured cap (assignments, strategies, cliques) would be exceeded.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A built-in construction failed its own verification. Always a bug.
class ConstructionFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gnb
