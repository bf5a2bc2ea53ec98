#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpos {

/// Bad arguments: out-of-range vertices, loops, infeasible family parameters.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A solver or parser refused an instance larger than its configured limit.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph text. `position()` is a byte offset (graph6) or a
/// 1-based line number (edge list); `kind()` says which.
class ParseError : public std::runtime_error {
public:
    enum class Where { byte, line };

    ParseError(const std::string& what, Where kind, std::size_t position)
        : std::runtime_error(what + (kind == Where::byte ? " (byte " : " (line ") +
                             std::to_string(position) + ")"),
          kind_(kind),
          position_(position) {}

    Where kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

private:
    Where kind_;
    std::size_t position_;
};

}  // namespace gpos
