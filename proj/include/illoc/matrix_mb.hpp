#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "illoc/hyper.hpp"
#include "illoc/search.hpp"
#include "illoc/syntax.hpp"

namespace illoc {

// How an act over force-free content gets its value.
//   Free:       every distinct act (by canonical text) has its own value.
//   Pointwise:  per-(force, atom) generators extended over the content with
//               ~ -> [f~], & -> pinf, | -> psup, a -> b -> psup([a~], b).
//   Connective: the same generators and [f~] for ~, but &, |, -> go through
//               the matrix connectives.
enum class MBMode { Free, Pointwise, Connective };

const char* to_string(MBMode mode);
std::optional<MBMode> parseMode(std::string_view text);

struct MBValuation {
  const AlgebraSpec* algebra = nullptr;
  MBMode mode = MBMode::Pointwise;
  std::map<std::string, Element> atomValues;
  std::map<std::string, HyperValue> actValues;                          // Free
  std::map<std::string, std::map<std::string, HyperValue>> generators;  // force -> atom -> value
  std::map<std::string, HyperValue> signatures;                         // nested forces
};

struct EvalOutcome {
  HyperValue value;
  bool admissible = true;
  // Canonical act text -> value, for every Force-rooted subformula.
  std::map<std::string, HyperValue> subvalues;
};

HyperValue mbNeg(const HyperValue& x);
HyperValue mbAnd(const HyperValue& x, const HyperValue& y);
HyperValue mbOr(const HyperValue& x, const HyperValue& y);
HyperValue mbImp(const HyperValue& x, const HyperValue& y);

EvalOutcome evalMB(const Formula& f, const MBValuation& val, const ActDefinitions& defs = {});

/// Enumeration bounds for the exhaustive M_B checks.
struct MBSpace {
  const AlgebraSpec* algebra = nullptr;
  MBMode mode = MBMode::Pointwise;
  bool admissibleOnly = true;
  // Optional restriction on the nonstandard values tried for acts,
  // generators and signatures.
  std::function<bool(const HyperValue&)> candidateFilter;
  SearchOptions search;
};

/// The product of all assignments a set of formulas depends on: atom values
/// first, then act values (Free) or generators, then signatures, each group
/// in sorted order. Point i decodes with the first slot most significant.
class ValuationSpace {
 public:
  ValuationSpace(const std::vector<Formula>& formulas, const MBSpace& space, const ActDefinitions& defs = {});

  std::uint64_t size() const { return size_; }
  MBValuation at(std::uint64_t index) const;

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<std::string>& actKeys() const { return actKeys_; }
  const std::vector<std::pair<std::string, std::string>>& generatorSlots() const { return generatorSlots_; }
  const std::vector<std::string>& signatureForces() const { return signatureForces_; }
  const std::vector<HyperValue>& candidates() const { return candidates_; }

 private:
  const AlgebraSpec* algebra_;
  MBMode mode_;
  std::vector<std::string> atoms_;
  std::vector<std::string> actKeys_;
  std::vector<std::pair<std::string, std::string>> generatorSlots_;
  std::vector<std::string> signatureForces_;
  std::vector<Element> elements_;
  std::vector<HyperValue> candidates_;
  std::vector<std::uint64_t> radices_;
  std::uint64_t size_ = 0;
};

struct MBTautologyResult {
  bool tautology = false;
  std::optional<MBValuation> witness;
  std::optional<HyperValue> value;
  std::uint64_t spaceSize = 0;
};

MBTautologyResult isTautologyMB(const Formula& f, const MBSpace& space, const ActDefinitions& defs = {});

struct MBTableRow {
  MBValuation valuation;
  EvalOutcome outcome;
};
std::vector<MBTableRow> tableMB(const Formula& f, const MBSpace& space, const ActDefinitions& defs = {});

struct DistinguishingWitness {
  MBValuation valuation;
  HyperValue first;
  HyperValue second;
};

// First valuation on which the two formulas get inequivalent values.
std::optional<DistinguishingWitness> findDistinguishing(const Formula& f1, const Formula& f2, const MBSpace& space,
                                                        const ActDefinitions& defs = {});

// [f]([f](p)) against [f](p).
std::optional<DistinguishingWitness> findIdempotenceCounterexample(const MBSpace& space);
// ~[f](p) against [f](~p).
std::optional<DistinguishingWitness> findNegSwapCounterexample(const MBSpace& space);

/// Unfolds a cyclic act `steps` times, gives every remaining act reference
/// the value `seed`, and evaluates. steps = 0 yields the seed.
HyperValue unfoldCyclic(const ActDefinitions& defs, const std::string& actName, unsigned steps, const HyperValue& seed,
                        const MBValuation& val);

// The formula after `steps` rounds of replacing act references by bodies.
Formula unfoldFormula(const ActDefinitions& defs, const std::string& actName, unsigned steps);

}  // namespace illoc
