#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polarnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file or stream could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the operation's domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A structured input (edge list, partition file) violates its format.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list record; `line()` is 1-based.
class ParseError : public FormatError {
 public:
  ParseError(std::size_t line, const std::string& detail, const std::string& source = {});
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// Modularity requested on a graph without edges.
class UndefinedModularityError : public Error {
 public:
  using Error::Error;
};

/// d-modularity requested while |Q| is at or below the division tolerance.
class DegenerateModularityError : public Error {
 public:
  DegenerateModularityError(double modularity, const std::string& what);
  double modularity() const noexcept { return modularity_; }

 private:
  double modularity_;
};

/// The requested coverage target exceeds what the candidate set can reach.
class InfeasibleError : public Error {
 public:
  InfeasibleError(std::size_t max_achievable, std::size_t target, std::size_t n_target);

  std::size_t max_achievable() const noexcept { return max_achievable_; }
  std::size_t target() const noexcept { return target_; }
  std::size_t n_target() const noexcept { return n_target_; }
  double max_achievable_fraction() const noexcept;

 private:
  std::size_t max_achievable_;
  std::size_t target_;
  std::size_t n_target_;
};

}  // namespace polarnet
