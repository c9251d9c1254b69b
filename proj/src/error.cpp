#include "illoc/error.hpp"

namespace illoc {

namespace {

std::string formatParse(std::size_t line, std::size_t column, const std::string& message,
                        const std::vector<std::string>& expected) {
  std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ")";
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string message,
                       std::vector<std::string> expected)
    : Error(formatParse(line, column, message, expected)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

const char* to_string(SemanticKind kind) {
  switch (kind) {
    case SemanticKind::AlgebraMismatch: return "AlgebraMismatch";
    case SemanticKind::InvalidAlgebra: return "InvalidAlgebra";
    case SemanticKind::UnknownAtom: return "UnknownAtom";
    case SemanticKind::CyclicAct: return "CyclicAct";
    case SemanticKind::UnknownActRef: return "UnknownActRef";
    case SemanticKind::NotCyclic: return "NotCyclic";
    case SemanticKind::MissingAtom: return "MissingAtom";
    case SemanticKind::MissingAssignment: return "MissingAssignment";
    case SemanticKind::StandardAssignment: return "StandardAssignment";
    case SemanticKind::StandardInput: return "StandardInput";
    case SemanticKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

SemanticError::SemanticError(SemanticKind kind, const std::string& message)
    : Error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

BudgetExceeded::BudgetExceeded(unsigned long long required, unsigned long long budget)
    : Error("BudgetExceeded: enumeration needs " + std::to_string(required) +
            " evaluations, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

}  // namespace illoc
