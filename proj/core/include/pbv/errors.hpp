#pragma once

#include <stdexcept>
#include <string>

namespace pbv {

// Malformed input text. Carries the source position of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(size_t line, size_t column, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ":" + std::to_string(column)
                             + ": " + reason)
        , line_(line)
        , column_(column)
        , reason_(reason)
    {}

    size_t line() const { return line_; }
    size_t column() const { return column_; }
    const std::string& reason() const { return reason_; }

private:
    size_t line_;
    size_t column_;
    std::string reason_;
};

// A well-formed proof step whose side conditions do not hold.
class ProofRejected : public std::runtime_error {
public:
    ProofRejected(size_t line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason)
        , line_(line)
        , reason_(reason)
    {}

    size_t line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    size_t line_;
    std::string reason_;
};

} // namespace pbv
