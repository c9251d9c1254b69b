#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "illoc/matrix_m.hpp"
#include "illoc/matrix_mb.hpp"

namespace illoc {

enum class MatrixKind { M, MB };

const char* to_string(MatrixKind m);

// The valuation space a quantified check ranges over. For matrix M only
// `mb.search` is used.
struct CheckSpace {
  MatrixKind matrix = MatrixKind::M;
  MBSpace mb;
};

using Witness = std::variant<AtomValuation2, MBValuation>;
using AnyValue = std::variant<TruthValue4, HyperValue>;

std::string to_string(const AnyValue& v);

struct EntailmentResult {
  bool holds = false;
  std::optional<Witness> witness;
  std::optional<AnyValue> leftValue;
  std::optional<AnyValue> rightValue;
};

// f1 entails f2 iff value(f1) <= value(f2) under every (admissible)
// valuation of the space.
EntailmentResult entails(const Formula& f1, const Formula& f2, const CheckSpace& space,
                         const ActDefinitions& defs = {});

struct Relation {
  bool holds = true;
  std::optional<Witness> witness;  // first valuation where it fails
};

struct LawReport {
  std::string formula;
  std::vector<std::string> values;  // distinct values, in order of first appearance
  bool designatedEverywhere = true;
  std::optional<Witness> witness;   // first non-designated valuation
};

struct LawsReport {
  LawReport tertiumNonDatur;  // ~F(~p) | ~F(p)
  LawReport lawOfContrary;    // ~(F(~p) & F(p))
  bool coincide = true;       // equal values at every valuation
};

struct OppositionReport {
  bool squareHolds = false;  // the criterion F(~p) <= ~F(p)
  Relation criterion;
  Relation contrary;         // F(p), F(~p)
  Relation contradictory;    // F(p) / ~F(p) and F(~p) / ~F(~p)
  Relation subcontrary;      // ~F(~p), ~F(p)
  Relation subalternLeft;    // F(p) -> ~F(~p)
  Relation subalternRight;   // F(~p) -> ~F(p)
  LawsReport laws;
  std::optional<SquareReport> hyperReport;  // M_B at a single valuation

  bool allRelations() const {
    return contrary.holds && contradictory.holds && subcontrary.holds && subalternLeft.holds &&
           subalternRight.holds;
  }
};

/// When `at` is given (M_B only) the report is computed at that single
/// valuation; otherwise relations are quantified over the whole space.
OppositionReport squareForForce(const std::string& force, const std::string& atom, const CheckSpace& space,
                                const std::optional<MBValuation>& at = std::nullopt);

Relation criterionHolds(const std::string& force, const std::string& atom, const CheckSpace& space,
                        const std::optional<MBValuation>& at = std::nullopt);

LawsReport lawsReport(const std::string& force, const std::string& atom, const CheckSpace& space,
                      const std::optional<MBValuation>& at = std::nullopt);

// A valuation for the single act F(p) in Pointwise/Connective mode.
MBValuation generatorValuation(const std::string& force, const std::string& atom, const HyperValue& generator,
                               MBMode mode = MBMode::Pointwise);

}  // namespace illoc
