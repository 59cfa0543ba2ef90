#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqdist {

// Distances (and everything built on them) are undefined for disconnected input.
class DisconnectedGraph : public std::runtime_error {
 public:
  DisconnectedGraph() : std::runtime_error("graph is disconnected; distance matrix undefined") {}
};

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error("graph6 parse error at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Thrown by the exact solvers instead of ever returning an unproven answer.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(unsigned long long budget)
      : std::runtime_error("branch-and-bound node budget exceeded (" + std::to_string(budget) +
                           " nodes)"),
        budget_(budget) {}

  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long budget_;
};

}  // namespace eqdist
