#pragma once

#include <stdexcept>
#include <string>

namespace pqblocks {

/// Raised when an argument violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a constructed witness fails its own post-check.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const char* what) {
    if (!cond) throw InvalidArgument(what);
}

inline void require(bool cond, const std::string& what) {
    if (!cond) throw InvalidArgument(what);
}

}  // namespace pqblocks
