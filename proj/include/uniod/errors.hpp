#pragma once

#include <stdexcept>
#include <string>

namespace uniod {

// Bad inputs: malformed files, shape mismatches, contract violations.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical breakdown: non-finite values, non-converging iterations.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// I/O failures carrying the offending path in the message.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace uniod
