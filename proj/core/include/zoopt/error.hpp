#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "zoopt/types.hpp"

namespace zoopt {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  explicit InvalidDimension(std::size_t d)
      : Error("invalid dimension " + std::to_string(d) + " (need d >= 1)") {}
};

/// A configuration value is out of its domain. `key()` names the offending field.
class InvalidConfig : public Error {
 public:
  InvalidConfig(std::string key, const std::string& what)
      : Error(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// The objective returned a non-finite value at `point()`.
class EvaluationError : public Error {
 public:
  EvaluationError(Vector x, double value);
  const Vector& point() const noexcept { return x_; }

 private:
  Vector x_;
};

class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Malformed input text; `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace zoopt
