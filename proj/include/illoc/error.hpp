#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace illoc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax errors carry a 1-based line/column and the tokens that would have
// been accepted at that point.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message,
             std::vector<std::string> expected = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

enum class SemanticKind {
  AlgebraMismatch,
  InvalidAlgebra,
  UnknownAtom,
  CyclicAct,
  UnknownActRef,
  NotCyclic,
  MissingAtom,
  MissingAssignment,
  StandardAssignment,
  StandardInput,
  InvalidArgument,
};

const char* to_string(SemanticKind kind);

class SemanticError : public Error {
 public:
  SemanticError(SemanticKind kind, const std::string& message);
  SemanticKind kind() const { return kind_; }

 private:
  SemanticKind kind_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(unsigned long long required, unsigned long long budget);
  unsigned long long required() const { return required_; }
  unsigned long long budget() const { return budget_; }

 private:
  unsigned long long required_;
  unsigned long long budget_;
};

}  // namespace illoc
