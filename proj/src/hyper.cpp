#include "illoc/hyper.hpp"

#include <set>

#include "illoc/error.hpp"

namespace illoc {

namespace {

void requireSameAlgebra(const HyperValue& x, const HyperValue& y) {
  if (&x.algebra() != &y.algebra()) {
    throw SemanticError(SemanticKind::AlgebraMismatch,
                        "values " + x.str() + " and " + y.str() + " belong to different algebras");
  }
}

template <typename Op>
HyperValue pointwise(const HyperValue& h1, const HyperValue& h2, Op op) {
  requireSameAlgebra(h1, h2);
  HyperValue::ExceptionMap exceptions;
  std::set<Element> keys;
  for (const auto& [k, v] : h1.exceptions()) keys.insert(k);
  for (const auto& [k, v] : h2.exceptions()) keys.insert(k);
  for (const auto& k : keys) exceptions.emplace(k, op(h1.at(k), h2.at(k)));
  return HyperValue(op(h1.onTrue(), h2.onTrue()), op(h1.onFalse(), h2.onFalse()),
                    std::move(exceptions));
}

HyperValue componentwise(const HyperValue& h1, const HyperValue& h2,
                         Element (*op)(const Element&, const Element&)) {
  return HyperValue(op(h1.onTrue(), h2.onTrue()), op(h1.onFalse(), h2.onFalse()));
}

void requireNonstandard(const HyperValue& h) {
  if (h.isStandard()) {
    throw SemanticError(SemanticKind::StandardInput,
                        h.str() + " is standard; the opposition analysis needs a nonstandard value");
  }
}

}  // namespace

HyperValue::HyperValue(Element onTrue, Element onFalse, ExceptionMap exceptions)
    : onTrue_(onTrue), onFalse_(onFalse), exceptions_(std::move(exceptions)) {
  illoc::requireSameAlgebra(onTrue_, onFalse_);
  for (const auto& [k, v] : exceptions_) {
    illoc::requireSameAlgebra(onTrue_, k);
    illoc::requireSameAlgebra(onTrue_, v);
  }
}

Element HyperValue::at(const Element& a) const {
  if (auto it = exceptions_.find(a); it != exceptions_.end()) return it->second;
  return join(meet(onTrue_, a), meet(onFalse_, complement(a)));
}

std::string HyperValue::str() const {
  std::string out = isStandard() ? "*" + onTrue_.str() : "<" + onTrue_.str() + "," + onFalse_.str() + ">";
  for (const auto& [k, v] : exceptions_) out += "[" + k.str() + "->" + v.str() + "]";
  return out;
}

HyperValue normalize(const HyperValue& h) { return HyperValue(h.onTrue(), h.onFalse()); }

bool equivalent(const HyperValue& h1, const HyperValue& h2) {
  requireSameAlgebra(h1, h2);
  return h1.onTrue() == h2.onTrue() && h1.onFalse() == h2.onFalse();
}

HyperValue standard(const Element& c) { return HyperValue(c, c); }

HyperValue pinf(const HyperValue& h1, const HyperValue& h2) { return pointwise(h1, h2, meet); }
HyperValue psup(const HyperValue& h1, const HyperValue& h2) { return pointwise(h1, h2, join); }

HyperValue hneg(const HyperValue& h) {
  HyperValue::ExceptionMap exceptions;
  for (const auto& [k, v] : h.exceptions()) exceptions.emplace(k, complement(v));
  return HyperValue(complement(h.onTrue()), complement(h.onFalse()), std::move(exceptions));
}

HyperValue contentNeg(const HyperValue& h) {
  // h(a) = f(~a): the value at ~k is the old value at k.
  HyperValue::ExceptionMap exceptions;
  for (const auto& [k, v] : h.exceptions()) exceptions.emplace(complement(k), v);
  return HyperValue(h.onFalse(), h.onTrue(), std::move(exceptions));
}

bool hleq(const HyperValue& h1, const HyperValue& h2) {
  requireSameAlgebra(h1, h2);
  bool s1 = h1.isStandard();
  bool s2 = h2.isStandard();
  if (s1 != s2) return s2;
  return leq(h1.onTrue(), h2.onTrue()) && leq(h1.onFalse(), h2.onFalse());
}

HyperValue osup(const HyperValue& h1, const HyperValue& h2) {
  requireSameAlgebra(h1, h2);
  if (h1.isStandard() != h2.isStandard()) return normalize(h1.isStandard() ? h1 : h2);
  return componentwise(h1, h2, join);
}

HyperValue oinf(const HyperValue& h1, const HyperValue& h2) {
  requireSameAlgebra(h1, h2);
  if (h1.isStandard() != h2.isStandard()) return normalize(h1.isStandard() ? h2 : h1);
  return componentwise(h1, h2, meet);
}

std::vector<HyperValue> nonstandardValues(const AlgebraSpec& algebra) {
  std::vector<HyperValue> out;
  auto elements = algebra.enumerate();
  for (const auto& u : elements) {
    for (const auto& v : elements) {
      if (u != v) out.emplace_back(u, v);
    }
  }
  return out;
}

OppositionCases classifyOpposition(const HyperValue& input) {
  HyperValue h = normalize(input);
  requireNonstandard(h);
  HyperValue neg = hneg(h);
  HyperValue swap = contentNeg(h);
  bool above = hleq(swap, neg);
  bool below = hleq(neg, swap);
  return OppositionCases{
      .incompatible = !above && !below,
      .negAboveSwap = above,
      .negBelowSwap = below,
      .infWitness = pinf(h, swap),
      .supWitness = psup(h, swap),
  };
}

SquareReport squareReport(const HyperValue& input) {
  HyperValue f = normalize(input);
  requireNonstandard(f);
  const AlgebraSpec& algebra = f.algebra();
  HyperValue zero = standard(algebra.bottom());
  HyperValue one = standard(algebra.top());

  HyperValue swap = contentNeg(f);
  HyperValue negF = hneg(f);
  HyperValue negSwap = hneg(swap);

  SquareReport r{.contraryInf = pinf(f, swap),
                 .contradictoryInf = pinf(f, negF),
                 .contradictorySup = psup(f, negF),
                 .subcontrarySup = psup(negSwap, negF)};
  r.holds = hleq(swap, negF);
  r.contrary = equivalent(r.contraryInf, zero);
  r.contradictory = equivalent(r.contradictoryInf, zero) && equivalent(r.contradictorySup, one) &&
                    equivalent(pinf(swap, negSwap), zero) && equivalent(psup(swap, negSwap), one);
  r.subcontrary = equivalent(r.subcontrarySup, one);
  r.subalternLeft = hleq(f, negSwap);
  r.subalternRight = hleq(swap, negF);
  return r;
}

}  // namespace illoc
