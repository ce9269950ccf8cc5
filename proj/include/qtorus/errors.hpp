#pragma once

#include <stdexcept>
#include <string>

namespace qtorus {

// Arithmetic on an element outside an operation's domain (zero inverse, zero denominator).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Ill-sorted combination, e.g. pairing two points of the same sort.
struct SortError : std::runtime_error {
    explicit SortError(const std::string& msg) : std::runtime_error(msg) {}
};

// Pairing requested across unrelated base pairs; the pairing is not defined there.
struct UndefinedPairingError : std::runtime_error {
    explicit UndefinedPairingError(const std::string& msg) : std::runtime_error(msg) {}
};

// Missing session configuration (no representative base pair, unknown symbol, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Surface-syntax error with a 1-based source position.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

} // namespace qtorus
