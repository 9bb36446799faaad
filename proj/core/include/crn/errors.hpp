#pragma once

#include <stdexcept>
#include <string>

namespace crn {

// Syntax or semantic error in an input file, with 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// A configured enumeration or term-count budget was exceeded.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& message)
        : std::runtime_error(message) {}
};

}  // namespace crn
