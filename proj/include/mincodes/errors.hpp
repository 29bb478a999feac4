#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mincodes {

/// Malformed matrix text. Row and column are 1-based positions in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t row, std::size_t column)
      : std::runtime_error("line " + std::to_string(row) + ", column " + std::to_string(column) +
                           ": " + what),
        row_(row),
        column_(column) {}

  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

/// An enumeration or search would exceed a configured limit. Never thrown after partial work
/// has been reported as complete.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& parameter, std::uint64_t requested, std::uint64_t limit,
                 const std::string& hint = {})
      : std::runtime_error(parameter + " = " + std::to_string(requested) + " exceeds the limit " +
                           std::to_string(limit) + (hint.empty() ? "" : " (" + hint + ")")),
        parameter_(parameter),
        requested_(requested),
        limit_(limit) {}

  const std::string& parameter() const { return parameter_; }
  std::uint64_t requested() const { return requested_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::string parameter_;
  std::uint64_t requested_;
  std::uint64_t limit_;
};

}  // namespace mincodes
