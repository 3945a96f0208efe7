#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgi {

/// Malformed edge-list or label document. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A shortest-path based operation met a pair of nodes with no connecting path.
class DisconnectedGraphError : public std::runtime_error {
 public:
  DisconnectedGraphError(std::size_t from, std::size_t to)
      : std::runtime_error("graph is disconnected: no path between nodes " + std::to_string(from) +
                           " and " + std::to_string(to)),
        from_(from),
        to_(to) {}

  std::size_t from() const noexcept { return from_; }
  std::size_t to() const noexcept { return to_; }

 private:
  std::size_t from_;
  std::size_t to_;
};

/// An iterative algorithm produced no usable result (e.g. zero exemplars).
class DegenerateResultError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data is unusable for the requested operation (e.g. no labels).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lgi
