#pragma once

#include <stdexcept>
#include <string>

namespace vecopt {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated operation precondition or structural invariant.
class ContractError : public Error {
public:
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

// File access / decode problems.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Malformed config file; carries the offending line.
class ConfigError : public Error {
public:
    ConfigError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};

// SVG parse failure; carries the byte offset of the problem and the line.
class SvgParseError : public Error {
public:
    SvgParseError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};

// Non-finite values encountered during optimization.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

}  // namespace vecopt
