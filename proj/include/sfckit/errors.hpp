#pragma once

#include <stdexcept>
#include <string>

namespace sfckit {

/// Bad user input: malformed expression text or invalid construction parameters.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in a group expression, with a 0-based offset into the text.
class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : InputError(msg + " (offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A computation would enumerate more group elements than the configured cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(long long order_bound, long long cap)
        : std::runtime_error(order_bound > 0
              ? "group order " + std::to_string(order_bound) +
                " exceeds cap " + std::to_string(cap)
              : "group order exceeds cap " + std::to_string(cap)),
          order_bound_(order_bound),
          cap_(cap) {}

    long long order_bound() const noexcept { return order_bound_; }
    long long cap() const noexcept { return cap_; }

private:
    long long order_bound_;
    long long cap_;
};

/// A subgroup passed where a normal subgroup is required.
class NotNormal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated internal invariant (orthogonality failure, rule conflict, ...).
/// Indicates an implementation bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sfckit
