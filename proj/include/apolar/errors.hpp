#pragma once

#include <stdexcept>
#include <string>

namespace apolar {

// Input text could not be parsed; `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Bad run configuration (field too small, action incompatible with characteristic, ...).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two forms required to be linearly independent are not.
class DependentFormsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Vectors or sequences of incompatible shape were combined.
class DimensionMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal consistency check failed (two routes to the same quantity disagree).
class SelfCheckError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace apolar
