#pragma once

#include <stdexcept>
#include <string>

namespace dq {

/// Ill-formed algebra: chart mismatch, unknown variable, incompatible weight factors.
class AlgebraError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Invalid combination of chart, product and representation settings.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace dq
