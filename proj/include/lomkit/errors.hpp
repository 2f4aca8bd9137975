#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lomkit {

/// Precondition or argument-range violation on a public operation.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input (matrix, board, point or coloring files).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A point configuration violates general position. Carries the 1-based
/// indices of the offending subset.
class DegenerateConfiguration : public std::runtime_error {
public:
  DegenerateConfiguration(const std::string &what, std::vector<std::size_t> subset)
      : std::runtime_error(what), subset_(std::move(subset)) {}

  [[nodiscard]] const std::vector<std::size_t> &subset() const noexcept { return subset_; }

private:
  std::vector<std::size_t> subset_;
};

/// The unbalanced lift found no point of the signed projection that a
/// hyperplane through the origin separates from the rest.
class NoSeparablePoint : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace lomkit
