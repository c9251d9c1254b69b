#include "illoc/matrix_m.hpp"

#include <set>

#include "illoc/error.hpp"

namespace illoc {

std::string to_string(TruthValue4 x) {
  switch (x) {
    case TruthValue4::One: return "1";
    case TruthValue4::Half: return "1/2";
    case TruthValue4::Zero: return "0";
    case TruthValue4::NegHalf: return "-1/2";
  }
  return "?";
}

std::optional<TruthValue4> parseTruthValue4(std::string_view text) {
  for (auto v : kTruthValues4) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

TruthValue4 sup4(TruthValue4 x, TruthValue4 y) { return x < y ? y : x; }
TruthValue4 inf4(TruthValue4 x, TruthValue4 y) { return x < y ? x : y; }

TruthValue4 neg4(TruthValue4 x) {
  switch (x) {
    case TruthValue4::One: return TruthValue4::Zero;
    case TruthValue4::Zero: return TruthValue4::One;
    case TruthValue4::Half: return TruthValue4::NegHalf;
    case TruthValue4::NegHalf: return TruthValue4::Half;
  }
  return x;
}

TruthValue4 force4(TruthValue4 x) {
  switch (x) {
    case TruthValue4::One: return TruthValue4::Half;
    case TruthValue4::Zero: return TruthValue4::NegHalf;
    default: return x;
  }
}

TruthValue4 imp4(TruthValue4 x, TruthValue4 y) {
  if (x <= y) return TruthValue4::One;
  if (x == TruthValue4::One) return y;
  if (x == TruthValue4::Zero || y == TruthValue4::Zero) return TruthValue4::Half;
  return TruthValue4::Zero;
}

// Performance values combine in the dual order.
TruthValue4 or4(TruthValue4 x, TruthValue4 y) {
  return isPerformanceValue(x) && isPerformanceValue(y) ? inf4(x, y) : sup4(x, y);
}

TruthValue4 and4(TruthValue4 x, TruthValue4 y) {
  return isPerformanceValue(x) && isPerformanceValue(y) ? sup4(x, y) : inf4(x, y);
}

Classification classify(TruthValue4 v) {
  switch (v) {
    case TruthValue4::One: return Classification::TrueSentence;
    case TruthValue4::Zero: return Classification::FalseSentence;
    case TruthValue4::Half: return Classification::SuccessfulPerformance;
    case TruthValue4::NegHalf: return Classification::UnsuccessfulPerformance;
  }
  return Classification::FalseSentence;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::TrueSentence: return "true-sentence";
    case Classification::FalseSentence: return "false-sentence";
    case Classification::SuccessfulPerformance: return "successful-performance";
    case Classification::UnsuccessfulPerformance: return "unsuccessful-performance";
  }
  return "?";
}

namespace {

TruthValue4 eval(const Formula& f, const AtomValuation2& e, const ActDefinitions& defs) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = e.find(f.name());
      if (it == e.end()) throw SemanticError(SemanticKind::MissingAtom, "no value for atom '" + f.name() + "'");
      return it->second ? TruthValue4::One : TruthValue4::Zero;
    }
    case Formula::Kind::ActRef:
      if (hasInfiniteUnfolding(defs, f.name())) {
        throw SemanticError(SemanticKind::CyclicAct, "act '" + f.name() + "' has an infinite unfolding");
      }
      return eval(defs.body(f.name()), e, defs);
    case Formula::Kind::Not: return neg4(eval(f.operand(), e, defs));
    case Formula::Kind::Force: return force4(eval(f.operand(), e, defs));
    case Formula::Kind::And: return and4(eval(f.left(), e, defs), eval(f.right(), e, defs));
    case Formula::Kind::Or: return or4(eval(f.left(), e, defs), eval(f.right(), e, defs));
    case Formula::Kind::Implies: return imp4(eval(f.left(), e, defs), eval(f.right(), e, defs));
  }
  return TruthValue4::Zero;
}

template <typename Pred>
PropertyCheck unaryProperty(int number, std::string statement, Pred pred) {
  PropertyCheck check;
  check.number = number;
  check.statement = std::move(statement);
  for (auto a : kTruthValues4) {
    ++check.tuplesChecked;
    if (pred(a)) ++check.tuplesHolding;
    else check.violations.push_back({a});
  }
  return check;
}

template <typename Pred>
PropertyCheck binaryProperty(int number, std::string statement, Pred pred) {
  PropertyCheck check;
  check.number = number;
  check.statement = std::move(statement);
  for (auto a : kTruthValues4) {
    for (auto b : kTruthValues4) {
      ++check.tuplesChecked;
      if (pred(a, b)) ++check.tuplesHolding;
      else check.violations.push_back({a, b});
    }
  }
  return check;
}

}  // namespace

TruthValue4 evalM(const Formula& f, const AtomValuation2& e, const ActDefinitions& defs) {
  return eval(f, e, defs);
}

std::vector<PropertyCheck> checkMatrixProperties() {
  using T = TruthValue4;
  return {
      unaryProperty(1, "a >= F(a)", [](T a) { return a >= force4(a); }),
      unaryProperty(2, "~a >= ~F(a)", [](T a) { return neg4(a) >= neg4(force4(a)); }),
      binaryProperty(3, "F(a) & F(b) >= F(a & b)",
                     [](T a, T b) { return and4(force4(a), force4(b)) >= force4(and4(a, b)); }),
      binaryProperty(4, "F(a) | F(b) <= F(a | b)",
                     [](T a, T b) { return or4(force4(a), force4(b)) <= force4(or4(a, b)); }),
      binaryProperty(5, "F(a) -> F(b) >= F(a -> b)",
                     [](T a, T b) { return imp4(force4(a), force4(b)) >= force4(imp4(a, b)); }),
      unaryProperty(6, "F(F(a)) = F(a)", [](T a) { return force4(force4(a)) == force4(a); }),
      unaryProperty(7, "~F(a) = F(~a)", [](T a) { return neg4(force4(a)) == force4(neg4(a)); }),
  };
}

std::vector<ContradictionOrdering> contradictionOrderings() {
  std::vector<ContradictionOrdering> out;
  for (auto a : kTruthValues4) {
    out.push_back({a, and4(a, neg4(a)), force4(and4(a, neg4(a))), and4(force4(a), neg4(force4(a)))});
  }
  return out;
}

std::vector<std::string> sortedAtoms(const std::vector<Formula>& formulas) {
  std::set<std::string> atoms;
  for (const auto& f : formulas) {
    auto a = atomsOf(f);
    atoms.insert(a.begin(), a.end());
  }
  return {atoms.begin(), atoms.end()};
}

AtomValuation2 valuationAt(const std::vector<std::string>& atoms, std::uint64_t index) {
  AtomValuation2 e;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    e[atoms[i]] = (index >> (atoms.size() - 1 - i)) & 1U;
  }
  return e;
}

MTautologyResult isTautologyM(const Formula& input, const ActDefinitions& defs, const SearchOptions& options) {
  Formula f = inlineActs(input, defs);
  auto atoms = sortedAtoms({f});
  std::uint64_t total = checkedSpaceSize(std::vector<std::uint64_t>(atoms.size(), 2), 1, options.budget);
  auto hit = findFirst(total, options.jobs,
                       [&](std::uint64_t i) { return !isDesignated(evalM(f, valuationAt(atoms, i))); });
  MTautologyResult result;
  result.tautology = !hit;
  if (hit) {
    result.witness = valuationAt(atoms, *hit);
    result.witnessValue = evalM(f, *result.witness);
  }
  return result;
}

std::vector<MTableRow> tableM(const Formula& input, const ActDefinitions& defs, const SearchOptions& options) {
  Formula f = inlineActs(input, defs);
  auto atoms = sortedAtoms({f});
  std::uint64_t total = checkedSpaceSize(std::vector<std::uint64_t>(atoms.size(), 2), 1, options.budget);
  std::vector<MTableRow> rows;
  for (std::uint64_t i = 0; i < total; ++i) {
    auto e = valuationAt(atoms, i);
    rows.push_back({e, evalM(f, e)});
  }
  return rows;
}

}  // namespace illoc
