#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "illoc/search.hpp"
#include "illoc/syntax.hpp"

namespace illoc {

/// Truth values of the four-valued matrix M. The enumerator value is the
/// number of halves, so the declaration order is the numeric order
/// -1/2 < 0 < 1/2 < 1.
enum class TruthValue4 : int { NegHalf = -1, Zero = 0, Half = 1, One = 2 };

inline constexpr std::array<TruthValue4, 4> kTruthValues4 = {
    TruthValue4::One, TruthValue4::Half, TruthValue4::Zero, TruthValue4::NegHalf};

inline int halves(TruthValue4 x) { return static_cast<int>(x); }
inline bool operator<(TruthValue4 x, TruthValue4 y) { return halves(x) < halves(y); }
inline bool operator<=(TruthValue4 x, TruthValue4 y) { return halves(x) <= halves(y); }
inline bool operator>(TruthValue4 x, TruthValue4 y) { return halves(x) > halves(y); }
inline bool operator>=(TruthValue4 x, TruthValue4 y) { return halves(x) >= halves(y); }

inline bool isPerformanceValue(TruthValue4 x) { return x == TruthValue4::Half || x == TruthValue4::NegHalf; }
inline bool isDesignated(TruthValue4 x) { return x == TruthValue4::One; }

// "1", "1/2", "0", "-1/2"
std::string to_string(TruthValue4 x);
std::optional<TruthValue4> parseTruthValue4(std::string_view text);

TruthValue4 sup4(TruthValue4 x, TruthValue4 y);
TruthValue4 inf4(TruthValue4 x, TruthValue4 y);

TruthValue4 neg4(TruthValue4 x);
TruthValue4 force4(TruthValue4 x);
TruthValue4 imp4(TruthValue4 x, TruthValue4 y);
TruthValue4 or4(TruthValue4 x, TruthValue4 y);
TruthValue4 and4(TruthValue4 x, TruthValue4 y);

enum class Classification { TrueSentence, FalseSentence, SuccessfulPerformance, UnsuccessfulPerformance };

Classification classify(TruthValue4 v);
const char* to_string(Classification c);

// Atom name -> classical value; atoms range over {0, 1} only.
using AtomValuation2 = std::map<std::string, bool>;

// Every force name is read as the single operator of the matrix.
TruthValue4 evalM(const Formula& f, const AtomValuation2& e, const ActDefinitions& defs = {});

struct PropertyCheck {
  int number = 0;            // 1..7
  std::string statement;
  std::size_t tuplesChecked = 0;
  std::size_t tuplesHolding = 0;
  // Violating argument tuples (one or two values each).
  std::vector<std::vector<TruthValue4>> violations;

  bool holds() const { return violations.empty(); }
};

std::vector<PropertyCheck> checkMatrixProperties();

// Ordering of a & ~a, F(a & ~a) and F(a) & ~F(a) for one carrier value.
struct ContradictionOrdering {
  TruthValue4 a;
  TruthValue4 plain;        // a & ~a
  TruthValue4 forced;       // F(a & ~a)
  TruthValue4 forcedParts;  // F(a) & ~F(a)
};
std::vector<ContradictionOrdering> contradictionOrderings();

// Sorted atom list and all 2^n valuations in counting order (first atom most
// significant, 0 before 1).
std::vector<std::string> sortedAtoms(const std::vector<Formula>& formulas);
AtomValuation2 valuationAt(const std::vector<std::string>& atoms, std::uint64_t index);

struct MTautologyResult {
  bool tautology = false;
  std::optional<AtomValuation2> witness;
  std::optional<TruthValue4> witnessValue;
};

MTautologyResult isTautologyM(const Formula& f, const ActDefinitions& defs = {}, const SearchOptions& options = {});

struct MTableRow {
  AtomValuation2 valuation;
  TruthValue4 value;
};
std::vector<MTableRow> tableM(const Formula& f, const ActDefinitions& defs = {}, const SearchOptions& options = {});

}  // namespace illoc
