#include "illoc/opposition.hpp"

#include <algorithm>
#include <functional>

#include "illoc/error.hpp"

namespace illoc {

const char* to_string(MatrixKind m) { return m == MatrixKind::M ? "m" : "mb"; }

std::string to_string(const AnyValue& v) {
  if (const auto* t = std::get_if<TruthValue4>(&v)) return to_string(*t);
  return std::get<HyperValue>(v).str();
}

namespace {

// The formulas of one square: F(p), F(~p), ~F(p), ~F(~p).
struct SquareFormulas {
  Formula act, swapped, negated, negatedSwapped;

  SquareFormulas(const std::string& force, const std::string& atom)
      : act(Formula::force(force, Formula::atom(atom))),
        swapped(Formula::force(force, Formula::negation(Formula::atom(atom)))),
        negated(Formula::negation(act)),
        negatedSwapped(Formula::negation(swapped)) {}

  std::vector<Formula> all() const { return {act, swapped, negated, negatedSwapped}; }
};

// Evaluates a list of formulas at each point of a space, in order. The
// visitor returns false to stop.
using PointVisitor = std::function<bool(const Witness&, const std::vector<AnyValue>&)>;

void visitPoints(const std::vector<Formula>& formulas, const CheckSpace& space,
                 const std::optional<MBValuation>& at, const PointVisitor& visit) {
  if (space.matrix == MatrixKind::M) {
    auto atoms = sortedAtoms(formulas);
    std::uint64_t total = checkedSpaceSize(std::vector<std::uint64_t>(atoms.size(), 2), formulas.size(),
                                           space.mb.search.budget);
    for (std::uint64_t i = 0; i < total; ++i) {
      auto e = valuationAt(atoms, i);
      std::vector<AnyValue> values;
      for (const auto& f : formulas) values.emplace_back(evalM(f, e));
      if (!visit(e, values)) return;
    }
    return;
  }
  auto visitOne = [&](const MBValuation& val) {
    std::vector<AnyValue> values;
    bool admissible = true;
    for (const auto& f : formulas) {
      EvalOutcome out = evalMB(f, val);
      admissible = admissible && out.admissible;
      values.emplace_back(out.value);
    }
    if (space.mb.admissibleOnly && !admissible) return true;
    return visit(val, values);
  };
  if (at) {
    visitOne(*at);
    return;
  }
  ValuationSpace points(formulas, space.mb);
  for (std::uint64_t i = 0; i < points.size(); ++i) {
    if (!visitOne(points.at(i))) return;
  }
}

void record(Relation& r, bool ok, const Witness& w) {
  if (!ok && r.holds) {
    r.holds = false;
    r.witness = w;
  }
}

bool valueLeq(const AnyValue& a, const AnyValue& b) {
  if (const auto* t = std::get_if<TruthValue4>(&a)) return *t <= std::get<TruthValue4>(b);
  return hleq(std::get<HyperValue>(a), std::get<HyperValue>(b));
}

bool designated(const AnyValue& v) {
  if (const auto* t = std::get_if<TruthValue4>(&v)) return isDesignated(*t);
  const auto& h = std::get<HyperValue>(v);
  return equivalent(h, standard(h.algebra().top()));
}

bool sameValue(const AnyValue& a, const AnyValue& b) {
  if (const auto* t = std::get_if<TruthValue4>(&a)) return *t == std::get<TruthValue4>(b);
  return equivalent(std::get<HyperValue>(a), std::get<HyperValue>(b));
}

bool success(const AnyValue& v) { return std::get<TruthValue4>(v) == TruthValue4::Half; }
bool unsuccess(const AnyValue& v) { return std::get<TruthValue4>(v) == TruthValue4::NegHalf; }

void requireSupportedSpace(const CheckSpace& space, const std::optional<MBValuation>& at) {
  if (space.matrix == MatrixKind::M && at) {
    throw SemanticError(SemanticKind::InvalidArgument, "a fixed M_B valuation was given for matrix M");
  }
  if (space.matrix == MatrixKind::MB && !space.mb.algebra && !at) {
    throw SemanticError(SemanticKind::InvalidAlgebra, "M_B checks need an algebra");
  }
}

}  // namespace

EntailmentResult entails(const Formula& in1, const Formula& in2, const CheckSpace& space, const ActDefinitions& defs) {
  Formula f1 = inlineActs(in1, defs);
  Formula f2 = inlineActs(in2, defs);
  EntailmentResult result;
  if (space.matrix == MatrixKind::M) {
    auto atoms = sortedAtoms({f1, f2});
    std::uint64_t total = checkedSpaceSize(std::vector<std::uint64_t>(atoms.size(), 2), 2, space.mb.search.budget);
    auto hit = findFirst(total, space.mb.search.jobs, [&](std::uint64_t i) {
      auto e = valuationAt(atoms, i);
      return !(evalM(f1, e) <= evalM(f2, e));
    });
    result.holds = !hit;
    if (hit) {
      auto e = valuationAt(atoms, *hit);
      result.leftValue = evalM(f1, e);
      result.rightValue = evalM(f2, e);
      result.witness = e;
    }
    return result;
  }
  ValuationSpace points({f1, f2}, space.mb);
  auto hit = findFirst(points.size(), space.mb.search.jobs, [&](std::uint64_t i) {
    MBValuation val = points.at(i);
    EvalOutcome o1 = evalMB(f1, val), o2 = evalMB(f2, val);
    if (space.mb.admissibleOnly && !(o1.admissible && o2.admissible)) return false;
    return !hleq(o1.value, o2.value);
  });
  result.holds = !hit;
  if (hit) {
    MBValuation val = points.at(*hit);
    result.leftValue = evalMB(f1, val).value;
    result.rightValue = evalMB(f2, val).value;
    result.witness = std::move(val);
  }
  return result;
}

Relation criterionHolds(const std::string& force, const std::string& atom, const CheckSpace& space,
                        const std::optional<MBValuation>& at) {
  requireSupportedSpace(space, at);
  SquareFormulas sq(force, atom);
  Relation r;
  visitPoints({sq.swapped, sq.negated}, space, at, [&](const Witness& w, const std::vector<AnyValue>& v) {
    record(r, valueLeq(v[0], v[1]), w);
    return r.holds;
  });
  return r;
}

LawsReport lawsReport(const std::string& force, const std::string& atom, const CheckSpace& space,
                      const std::optional<MBValuation>& at) {
  requireSupportedSpace(space, at);
  SquareFormulas sq(force, atom);
  Formula tertium = Formula::disjunction(sq.negatedSwapped, sq.negated);
  Formula contrary = Formula::negation(Formula::conjunction(sq.swapped, sq.act));
  LawsReport report;
  report.tertiumNonDatur.formula = print(tertium);
  report.lawOfContrary.formula = print(contrary);
  auto note = [](LawReport& law, const AnyValue& v, const Witness& w) {
    std::string s = to_string(v);
    if (std::find(law.values.begin(), law.values.end(), s) == law.values.end()) law.values.push_back(s);
    if (!designated(v) && law.designatedEverywhere) {
      law.designatedEverywhere = false;
      law.witness = w;
    }
  };
  visitPoints({tertium, contrary}, space, at, [&](const Witness& w, const std::vector<AnyValue>& v) {
    note(report.tertiumNonDatur, v[0], w);
    note(report.lawOfContrary, v[1], w);
    report.coincide = report.coincide && sameValue(v[0], v[1]);
    return true;
  });
  return report;
}

OppositionReport squareForForce(const std::string& force, const std::string& atom, const CheckSpace& space,
                                const std::optional<MBValuation>& at) {
  requireSupportedSpace(space, at);
  SquareFormulas sq(force, atom);
  OppositionReport report;
  visitPoints(sq.all(), space, at, [&](const Witness& w, const std::vector<AnyValue>& v) {
    const AnyValue &a = v[0], &b = v[1], &na = v[2], &nb = v[3];
    record(report.criterion, valueLeq(b, na), w);
    if (space.matrix == MatrixKind::M) {
      record(report.contrary, !(success(a) && success(b)), w);
      bool contra = !(success(a) && success(na)) && !(unsuccess(a) && unsuccess(na)) &&
                    !(success(b) && success(nb)) && !(unsuccess(b) && unsuccess(nb));
      record(report.contradictory, contra, w);
      record(report.subcontrary, !(unsuccess(nb) && unsuccess(na)), w);
      record(report.subalternLeft, !success(a) || success(nb), w);
      record(report.subalternRight, !success(b) || success(na), w);
    } else {
      const auto &ha = std::get<HyperValue>(a), &hb = std::get<HyperValue>(b);
      const auto &hna = std::get<HyperValue>(na), &hnb = std::get<HyperValue>(nb);
      HyperValue zero = standard(ha.algebra().bottom());
      HyperValue one = standard(ha.algebra().top());
      record(report.contrary, equivalent(pinf(ha, hb), zero), w);
      bool contra = equivalent(pinf(ha, hna), zero) && equivalent(psup(ha, hna), one) &&
                    equivalent(pinf(hb, hnb), zero) && equivalent(psup(hb, hnb), one);
      record(report.contradictory, contra, w);
      record(report.subcontrary, equivalent(psup(hnb, hna), one), w);
      record(report.subalternLeft, hleq(ha, hnb), w);
      record(report.subalternRight, hleq(hb, hna), w);
      if (at && !ha.isStandard()) report.hyperReport = squareReport(ha);
    }
    return true;
  });
  report.squareHolds = report.criterion.holds;
  report.laws = lawsReport(force, atom, space, at);
  return report;
}

MBValuation generatorValuation(const std::string& force, const std::string& atom, const HyperValue& generator,
                               MBMode mode) {
  MBValuation val;
  val.algebra = &generator.algebra();
  val.mode = mode;
  val.generators[force].emplace(atom, generator);
  return val;
}

}  // namespace illoc
