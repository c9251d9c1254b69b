#pragma once

#include <map>
#include <string>
#include <vector>

#include "illoc/boolalg.hpp"

namespace illoc {

/// A member of the nonstandard extension *B.
///
/// Stored as a one-variable Boolean term function
///   f(a) = (onTrue & a) | (onFalse & ~a)
/// overridden at finitely many exception points. Finite exception sets are
/// invisible to the cofinite-filter quotient, so `normalize` simply drops
/// them and the (onTrue, onFalse) pair is the canonical representative.
class HyperValue {
 public:
  using ExceptionMap = std::map<Element, Element>;

  HyperValue(Element onTrue, Element onFalse, ExceptionMap exceptions = {});

  const AlgebraSpec& algebra() const { return onTrue_.algebra(); }
  const Element& onTrue() const { return onTrue_; }
  const Element& onFalse() const { return onFalse_; }
  const ExceptionMap& exceptions() const { return exceptions_; }

  bool isNormal() const { return exceptions_.empty(); }
  // Judged on the normal form: constant functions are the standard members.
  bool isStandard() const { return onTrue_ == onFalse_; }

  // Value of the represented function at `a`.
  Element at(const Element& a) const;

  // "*{a}" for standard values, "<{a},{b}>" otherwise; exceptions appended
  // as "[{a}->{}]".
  std::string str() const;

  // Representation equality (exceptions included). Use `equivalent` for
  // equality in *B.
  friend bool operator==(const HyperValue& x, const HyperValue& y) = default;

 private:
  Element onTrue_;
  Element onFalse_;
  ExceptionMap exceptions_;
};

HyperValue normalize(const HyperValue& h);
bool equivalent(const HyperValue& h1, const HyperValue& h2);
HyperValue standard(const Element& c);

// Pointwise lattice operations on the represented functions.
HyperValue pinf(const HyperValue& h1, const HyperValue& h2);
HyperValue psup(const HyperValue& h1, const HyperValue& h2);
HyperValue hneg(const HyperValue& h);

// [f¬]: the class of a -> f(~a).
HyperValue contentNeg(const HyperValue& h);

// The stipulated order: standard values are ordered as in B, every standard
// value lies above every nonstandard one, and nonstandard values compare
// componentwise.
bool hleq(const HyperValue& h1, const HyperValue& h2);

// Join and meet with respect to `hleq`.
HyperValue osup(const HyperValue& h1, const HyperValue& h2);
HyperValue oinf(const HyperValue& h1, const HyperValue& h2);

// All nonstandard normal-form values of an algebra, ordered by
// (onTrue mask, onFalse mask).
std::vector<HyperValue> nonstandardValues(const AlgebraSpec& algebra);

struct OppositionCases {
  bool incompatible = false;   // Case 1
  bool negAboveSwap = false;   // Case 2: ~[f] >= [f~]
  bool negBelowSwap = false;   // Case 3: ~[f] <= [f~]
  HyperValue infWitness;       // pinf([f], [f~])
  HyperValue supWitness;       // psup([f], [f~])
};

OppositionCases classifyOpposition(const HyperValue& h);

struct SquareReport {
  bool holds = false;
  bool contrary = false;             // pinf([f], [f~]) = *0
  HyperValue contraryInf;
  bool contradictory = false;        // [f] vs ~[f], and [f~] vs ~[f~]
  HyperValue contradictoryInf;
  HyperValue contradictorySup;
  bool subcontrary = false;          // psup(~[f~], ~[f]) = *1
  HyperValue subcontrarySup;
  bool subalternLeft = false;        // [f] <=* ~[f~]
  bool subalternRight = false;       // [f~] <=* ~[f]

  bool allRelations() const {
    return contrary && contradictory && subcontrary && subalternLeft && subalternRight;
  }
};

SquareReport squareReport(const HyperValue& h);

}  // namespace illoc
