#pragma once

#include <stdexcept>
#include <string>

namespace seplat {

/// Malformed input: bad JSON, unknown vertex labels, violated preconditions.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// A size guard refused an exponential computation. Guards are configurable
/// per call; the refusal is deliberate, not a crash.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// An internal cross-check failed. This signals a bug in the library (or a
/// falsified postcondition), never bad user input.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

} // namespace seplat
