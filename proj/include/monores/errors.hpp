#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monores {

/// Operands live in ambient rings of different dimension.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (generator count, gradient paths) was exceeded.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Stored data does not have the shape of a complex (mismatched matrix sizes,
/// malformed first differential, ...).
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// A polynomial could not be written as a combination of the ideal generators.
struct membership_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Input text could not be parsed. Line and column are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace monores
