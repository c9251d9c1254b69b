#include "illoc/matrix_mb.hpp"

#include <set>

#include "illoc/error.hpp"

namespace illoc {

const char* to_string(MBMode mode) {
  switch (mode) {
    case MBMode::Free: return "free";
    case MBMode::Pointwise: return "pointwise";
    case MBMode::Connective: return "connective";
  }
  return "?";
}

std::optional<MBMode> parseMode(std::string_view text) {
  if (text == "free") return MBMode::Free;
  if (text == "pointwise") return MBMode::Pointwise;
  if (text == "connective") return MBMode::Connective;
  return std::nullopt;
}

HyperValue mbNeg(const HyperValue& x) { return hneg(normalize(x)); }

HyperValue mbAnd(const HyperValue& x0, const HyperValue& y0) {
  HyperValue x = normalize(x0), y = normalize(y0);
  bool sx = x.isStandard(), sy = y.isStandard();
  if (sx && sy) return standard(meet(x.onTrue(), y.onTrue()));
  if (!sx && !sy) return psup(x, y);
  return oinf(x, y);
}

HyperValue mbOr(const HyperValue& x0, const HyperValue& y0) {
  HyperValue x = normalize(x0), y = normalize(y0);
  bool sx = x.isStandard(), sy = y.isStandard();
  if (sx && sy) return standard(join(x.onTrue(), y.onTrue()));
  if (!sx && !sy) return pinf(x, y);
  return osup(x, y);
}

// *1 - sup(x, y) + y, with "*1 - z" as complement, "+" as pointwise join
// and sup taken in the stipulated order.
HyperValue mbImp(const HyperValue& x, const HyperValue& y) {
  return psup(hneg(osup(x, y)), normalize(y));
}

namespace {

bool contentIsForceFree(const Formula& content, const ActDefinitions& defs) {
  return isForceFree(content, defs);
}

class Evaluator {
 public:
  Evaluator(const MBValuation& val, const ActDefinitions& defs, bool record, const HyperValue* seed = nullptr)
      : val_(val), defs_(defs), record_(record), seed_(seed) {}

  bool admissible() const { return admissible_; }
  std::map<std::string, HyperValue>& subvalues() { return subvalues_; }

  HyperValue eval(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Atom: return standard(atomValue(f.name()));
      case Formula::Kind::ActRef:
        if (seed_) return *seed_;
        throw SemanticError(SemanticKind::CyclicAct, "act '" + f.name() + "' has no value");
      case Formula::Kind::Not: return mbNeg(eval(f.operand()));
      case Formula::Kind::And: return mbAnd(eval(f.left()), eval(f.right()));
      case Formula::Kind::Or: return mbOr(eval(f.left()), eval(f.right()));
      case Formula::Kind::Implies: return mbImp(eval(f.left()), eval(f.right()));
      case Formula::Kind::Force: {
        HyperValue v = contentIsForceFree(f.operand(), defs_) ? simpleAct(f)
                                                              : mbImp(signature(f.name()), eval(f.operand()));
        if (v.isStandard()) admissible_ = false;
        if (record_) subvalues_.insert_or_assign(print(f), v);
        return v;
      }
    }
    throw SemanticError(SemanticKind::InvalidArgument, "unknown formula kind");
  }

 private:
  Element atomValue(const std::string& name) const {
    auto it = val_.atomValues.find(name);
    if (it == val_.atomValues.end()) {
      throw SemanticError(SemanticKind::MissingAtom, "no value for atom '" + name + "'");
    }
    if (&it->second.algebra() != val_.algebra) {
      throw SemanticError(SemanticKind::AlgebraMismatch, "atom '" + name + "' is valued in another algebra");
    }
    return it->second;
  }

  static const HyperValue& provided(const HyperValue& h, const std::string& what) {
    if (h.isStandard()) throw SemanticError(SemanticKind::StandardAssignment, what + " is standard: " + h.str());
    return h;
  }

  HyperValue signature(const std::string& force) const {
    auto it = val_.signatures.find(force);
    if (it == val_.signatures.end()) {
      throw SemanticError(SemanticKind::MissingAssignment, "no signature for force '" + force + "'");
    }
    return normalize(provided(it->second, "signature of '" + force + "'"));
  }

  HyperValue generator(const std::string& force, const std::string& atom) const {
    auto fit = val_.generators.find(force);
    if (fit != val_.generators.end()) {
      auto ait = fit->second.find(atom);
      if (ait != fit->second.end()) {
        return normalize(provided(ait->second, "generator (" + force + ", " + atom + ")"));
      }
    }
    throw SemanticError(SemanticKind::MissingAssignment,
                        "no generator for force '" + force + "' on atom '" + atom + "'");
  }

  HyperValue simpleAct(const Formula& act) const {
    if (val_.mode == MBMode::Free) {
      std::string key = print(act);
      auto it = val_.actValues.find(key);
      if (it == val_.actValues.end()) throw SemanticError(SemanticKind::MissingAssignment, "no value for act " + key);
      return normalize(provided(it->second, "act value of " + key));
    }
    return extend(act.name(), act.operand());
  }

  HyperValue extend(const std::string& force, const Formula& content) const {
    bool pointwise = val_.mode == MBMode::Pointwise;
    switch (content.kind()) {
      case Formula::Kind::Atom: return generator(force, content.name());
      case Formula::Kind::Not: return contentNeg(extend(force, content.operand()));
      case Formula::Kind::And: {
        auto a = extend(force, content.left()), b = extend(force, content.right());
        return pointwise ? pinf(a, b) : mbAnd(a, b);
      }
      case Formula::Kind::Or: {
        auto a = extend(force, content.left()), b = extend(force, content.right());
        return pointwise ? psup(a, b) : mbOr(a, b);
      }
      case Formula::Kind::Implies: {
        auto a = extend(force, content.left()), b = extend(force, content.right());
        return pointwise ? psup(contentNeg(a), b) : mbImp(a, b);
      }
      default:
        throw SemanticError(SemanticKind::InvalidArgument, "act content must be force-free");
    }
  }

  const MBValuation& val_;
  const ActDefinitions& defs_;
  bool record_;
  const HyperValue* seed_;
  bool admissible_ = true;
  std::map<std::string, HyperValue> subvalues_;
};

void requireAlgebra(const MBValuation& val) {
  if (!val.algebra) throw SemanticError(SemanticKind::InvalidAlgebra, "valuation has no algebra");
}

struct Slots {
  std::set<std::string> atoms;
  std::set<std::string> actKeys;
  std::set<std::pair<std::string, std::string>> generators;
  std::set<std::string> signatures;
};

void collectSlots(const Formula& f, MBMode mode, const ActDefinitions& defs, Slots& slots) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      slots.atoms.insert(f.name());
      return;
    case Formula::Kind::Force:
      if (isForceFree(f.operand(), defs)) {
        auto contentAtoms = atomsOf(f.operand());
        if (mode == MBMode::Free) {
          slots.actKeys.insert(print(f));
        } else {
          for (const auto& a : contentAtoms) slots.generators.emplace(f.name(), a);
        }
        // Atoms inside act contents get no valuation of their own.
        return;
      }
      slots.signatures.insert(f.name());
      collectSlots(f.operand(), mode, defs, slots);
      return;
    default:
      for (const auto& c : f.children()) collectSlots(c, mode, defs, slots);
  }
}

}  // namespace

EvalOutcome evalMB(const Formula& input, const MBValuation& val, const ActDefinitions& defs) {
  requireAlgebra(val);
  Formula f = inlineActs(input, defs);
  Evaluator ev(val, defs, true);
  HyperValue value = ev.eval(f);
  return EvalOutcome{value, ev.admissible(), std::move(ev.subvalues())};
}

ValuationSpace::ValuationSpace(const std::vector<Formula>& formulas, const MBSpace& space, const ActDefinitions& defs)
    : algebra_(space.algebra), mode_(space.mode) {
  if (!algebra_) throw SemanticError(SemanticKind::InvalidAlgebra, "space has no algebra");
  Slots slots;
  for (const auto& f : formulas) collectSlots(f, mode_, defs, slots);
  atoms_.assign(slots.atoms.begin(), slots.atoms.end());
  actKeys_.assign(slots.actKeys.begin(), slots.actKeys.end());
  generatorSlots_.assign(slots.generators.begin(), slots.generators.end());
  signatureForces_.assign(slots.signatures.begin(), slots.signatures.end());

  elements_ = algebra_->enumerate();
  for (auto& h : nonstandardValues(*algebra_)) {
    if (!space.candidateFilter || space.candidateFilter(h)) candidates_.push_back(std::move(h));
  }
  radices_.assign(atoms_.size(), elements_.size());
  std::size_t hyperSlots = actKeys_.size() + generatorSlots_.size() + signatureForces_.size();
  radices_.insert(radices_.end(), hyperSlots, candidates_.size());
  size_ = checkedSpaceSize(radices_, std::max<std::size_t>(formulas.size(), 1), space.search.budget);
}

MBValuation ValuationSpace::at(std::uint64_t index) const {
  auto digits = decodeIndex(index, radices_);
  MBValuation val;
  val.algebra = algebra_;
  val.mode = mode_;
  std::size_t d = 0;
  for (const auto& a : atoms_) val.atomValues.emplace(a, elements_[digits[d++]]);
  for (const auto& k : actKeys_) val.actValues.emplace(k, candidates_[digits[d++]]);
  for (const auto& [force, atom] : generatorSlots_) val.generators[force].emplace(atom, candidates_[digits[d++]]);
  for (const auto& force : signatureForces_) val.signatures.emplace(force, candidates_[digits[d++]]);
  return val;
}

MBTautologyResult isTautologyMB(const Formula& input, const MBSpace& space, const ActDefinitions& defs) {
  Formula f = inlineActs(input, defs);
  ValuationSpace points({f}, space);
  HyperValue one = standard(space.algebra->top());
  auto refutes = [&](std::uint64_t i) {
    MBValuation val = points.at(i);
    Evaluator ev(val, defs, false);
    HyperValue v = ev.eval(f);
    if (space.admissibleOnly && !ev.admissible()) return false;
    return !equivalent(v, one);
  };
  auto hit = findFirst(points.size(), space.search.jobs, refutes);
  MBTautologyResult result;
  result.spaceSize = points.size();
  result.tautology = !hit;
  if (hit) {
    result.witness = points.at(*hit);
    result.value = evalMB(f, *result.witness).value;
  }
  return result;
}

std::vector<MBTableRow> tableMB(const Formula& input, const MBSpace& space, const ActDefinitions& defs) {
  Formula f = inlineActs(input, defs);
  ValuationSpace points({f}, space);
  std::vector<MBTableRow> rows;
  for (std::uint64_t i = 0; i < points.size(); ++i) {
    MBValuation val = points.at(i);
    EvalOutcome outcome = evalMB(f, val);
    if (space.admissibleOnly && !outcome.admissible) continue;
    rows.push_back({std::move(val), std::move(outcome)});
  }
  return rows;
}

std::optional<DistinguishingWitness> findDistinguishing(const Formula& in1, const Formula& in2,
                                                        const MBSpace& space, const ActDefinitions& defs) {
  Formula f1 = inlineActs(in1, defs);
  Formula f2 = inlineActs(in2, defs);
  ValuationSpace points({f1, f2}, space);
  auto differs = [&](std::uint64_t i) {
    MBValuation val = points.at(i);
    Evaluator e1(val, defs, false), e2(val, defs, false);
    HyperValue v1 = e1.eval(f1);
    HyperValue v2 = e2.eval(f2);
    if (space.admissibleOnly && !(e1.admissible() && e2.admissible())) return false;
    return !equivalent(v1, v2);
  };
  auto hit = findFirst(points.size(), space.search.jobs, differs);
  if (!hit) return std::nullopt;
  MBValuation val = points.at(*hit);
  HyperValue v1 = evalMB(f1, val).value;
  HyperValue v2 = evalMB(f2, val).value;
  return DistinguishingWitness{std::move(val), v1, v2};
}

std::optional<DistinguishingWitness> findIdempotenceCounterexample(const MBSpace& space) {
  return findDistinguishing(parseFormula("[f]([f](p))"), parseFormula("[f](p)"), space);
}

std::optional<DistinguishingWitness> findNegSwapCounterexample(const MBSpace& space) {
  return findDistinguishing(parseFormula("~[f](p)"), parseFormula("[f](~p)"), space);
}

namespace {

Formula substituteRefs(const Formula& f, const ActDefinitions& defs) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return f;
    case Formula::Kind::ActRef: return defs.body(f.name());
    case Formula::Kind::Not: return Formula::negation(substituteRefs(f.operand(), defs));
    case Formula::Kind::Force: return Formula::force(f.name(), substituteRefs(f.operand(), defs));
    case Formula::Kind::And:
      return Formula::conjunction(substituteRefs(f.left(), defs), substituteRefs(f.right(), defs));
    case Formula::Kind::Or:
      return Formula::disjunction(substituteRefs(f.left(), defs), substituteRefs(f.right(), defs));
    case Formula::Kind::Implies:
      return Formula::implication(substituteRefs(f.left(), defs), substituteRefs(f.right(), defs));
  }
  return f;
}

}  // namespace

Formula unfoldFormula(const ActDefinitions& defs, const std::string& actName, unsigned steps) {
  bool onCycle = false;
  for (const auto& cycle : detectCycles(defs)) {
    for (const auto& n : cycle) onCycle = onCycle || n == actName;
  }
  if (!onCycle) {
    defs.body(actName);
    throw SemanticError(SemanticKind::NotCyclic, "act '" + actName + "' is not part of a cycle");
  }
  Formula f = Formula::actRef(actName);
  for (unsigned i = 0; i < steps; ++i) f = substituteRefs(f, defs);
  return f;
}

HyperValue unfoldCyclic(const ActDefinitions& defs, const std::string& actName, unsigned steps,
                        const HyperValue& seed, const MBValuation& val) {
  requireAlgebra(val);
  Formula f = unfoldFormula(defs, actName, steps);
  HyperValue s = normalize(seed);
  if (&s.algebra() != val.algebra) {
    throw SemanticError(SemanticKind::AlgebraMismatch, "seed and valuation use different algebras");
  }
  Evaluator ev(val, defs, false, &s);
  return ev.eval(f);
}

}  // namespace illoc
