#pragma once

// Brute-force reference semantics used only by the tests.
//
// Matrix M values are integers counting halves and every operation is the
// paper's arithmetic formula. Members of *B are full function tables
// t[a] for every a in 2^k; a table is standard when it is constant.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "illoc/matrix_mb.hpp"
#include "illoc/syntax.hpp"

namespace oracle {

// ---- matrix M, in halves ----

inline bool classical(int x) { return x == 2 || x == 0; }
inline int mNeg(int x) { return classical(x) ? 2 - x : -x; }
inline int mForce(int x) { return classical(x) ? x - 1 : x; }
inline int mImp(int x, int y) { return 2 - std::max(x, y) + y; }
inline int mOr(int x, int y) { return (!classical(x) && !classical(y)) ? std::min(x, y) : std::max(x, y); }
inline int mAnd(int x, int y) { return (!classical(x) && !classical(y)) ? std::max(x, y) : std::min(x, y); }

inline int evalHalves(const illoc::Formula& f, const std::map<std::string, bool>& e) {
  using K = illoc::Formula::Kind;
  switch (f.kind()) {
    case K::Atom: return e.at(f.name()) ? 2 : 0;
    case K::Not: return mNeg(evalHalves(f.operand(), e));
    case K::Force: return mForce(evalHalves(f.operand(), e));
    case K::And: return mAnd(evalHalves(f.left(), e), evalHalves(f.right(), e));
    case K::Or: return mOr(evalHalves(f.left(), e), evalHalves(f.right(), e));
    case K::Implies: return mImp(evalHalves(f.left(), e), evalHalves(f.right(), e));
    case K::ActRef: break;
  }
  throw std::logic_error("oracle: act references are not supported");
}

// ---- *B as tables ----

using Table = std::vector<std::uint32_t>;

struct Algebra {
  unsigned k;
  std::uint32_t top() const { return (1U << k) - 1; }
  std::uint32_t size() const { return 1U << k; }
};

inline bool isConstant(const Table& t) {
  for (auto x : t)
    if (x != t[0]) return false;
  return true;
}

inline Table constant(const Algebra& b, std::uint32_t c) { return Table(b.size(), c); }

inline Table termFunction(const Algebra& b, std::uint32_t u, std::uint32_t v) {
  Table t(b.size());
  for (std::uint32_t a = 0; a < b.size(); ++a) t[a] = (u & a) | (v & ~a & b.top());
  return t;
}

inline Table fromHyper(const Algebra& b, const illoc::HyperValue& h) {
  Table t(b.size());
  for (std::uint32_t a = 0; a < b.size(); ++a) t[a] = h.at(h.algebra().fromMask(a)).mask();
  return t;
}

inline Table pMeet(const Table& x, const Table& y) {
  Table t(x.size());
  for (std::size_t a = 0; a < x.size(); ++a) t[a] = x[a] & y[a];
  return t;
}
inline Table pJoin(const Table& x, const Table& y) {
  Table t(x.size());
  for (std::size_t a = 0; a < x.size(); ++a) t[a] = x[a] | y[a];
  return t;
}
inline Table pNeg(const Algebra& b, const Table& x) {
  Table t(x.size());
  for (std::size_t a = 0; a < x.size(); ++a) t[a] = ~x[a] & b.top();
  return t;
}
inline Table swapArg(const Algebra& b, const Table& x) {
  Table t(x.size());
  for (std::uint32_t a = 0; a < b.size(); ++a) t[a] = x[~a & b.top()];
  return t;
}

// Every constant lies above every non-constant table; otherwise pointwise.
inline bool orderLeq(const Table& x, const Table& y) {
  bool cx = isConstant(x), cy = isConstant(y);
  if (cx != cy) return cy;
  for (std::size_t a = 0; a < x.size(); ++a)
    if (x[a] & ~y[a]) return false;
  return true;
}

inline Table orderJoin(const Table& x, const Table& y) {
  bool cx = isConstant(x), cy = isConstant(y);
  if (cx != cy) return cx ? x : y;
  return pJoin(x, y);
}
inline Table orderMeet(const Table& x, const Table& y) {
  bool cx = isConstant(x), cy = isConstant(y);
  if (cx != cy) return cx ? y : x;
  return pMeet(x, y);
}

inline Table bAnd(const Table& x, const Table& y) {
  bool cx = isConstant(x), cy = isConstant(y);
  if (cx && cy) return pMeet(x, y);
  if (!cx && !cy) return pJoin(x, y);
  return orderMeet(x, y);
}
inline Table bOr(const Table& x, const Table& y) {
  bool cx = isConstant(x), cy = isConstant(y);
  if (cx && cy) return pJoin(x, y);
  if (!cx && !cy) return pMeet(x, y);
  return orderJoin(x, y);
}
inline Table bImp(const Algebra& b, const Table& x, const Table& y) { return pJoin(pNeg(b, orderJoin(x, y)), y); }

inline std::vector<Table> nonstandardTables(const Algebra& b) {
  std::vector<Table> out;
  for (std::uint32_t u = 0; u < b.size(); ++u)
    for (std::uint32_t v = 0; v < b.size(); ++v)
      if (u != v) out.push_back(termFunction(b, u, v));
  return out;
}

// ---- M_B valuations ----

struct Valuation {
  std::map<std::string, std::uint32_t> atoms;
  std::map<std::string, Table> acts;                                   // Free, keyed by key()
  std::map<std::pair<std::string, std::string>, Table> generators;     // (force, atom)
  std::map<std::string, Table> signatures;
};

inline std::string key(const illoc::Formula& f) {
  using K = illoc::Formula::Kind;
  switch (f.kind()) {
    case K::Atom: return f.name();
    case K::ActRef: return "@" + f.name();
    case K::Not: return "N(" + key(f.operand()) + ")";
    case K::Force: return "F" + f.name() + "(" + key(f.operand()) + ")";
    case K::And: return "A(" + key(f.left()) + "," + key(f.right()) + ")";
    case K::Or: return "O(" + key(f.left()) + "," + key(f.right()) + ")";
    case K::Implies: return "I(" + key(f.left()) + "," + key(f.right()) + ")";
  }
  return {};
}

inline bool hasForce(const illoc::Formula& f) {
  if (f.kind() == illoc::Formula::Kind::Force) return true;
  for (const auto& c : f.children())
    if (hasForce(c)) return true;
  return false;
}

struct Slots {
  std::set<std::string> atoms;
  std::map<std::string, illoc::Formula> acts;
  std::set<std::pair<std::string, std::string>> generators;
  std::set<std::string> signatures;
};

inline void collectAtoms(const illoc::Formula& f, std::set<std::string>& out) {
  if (f.kind() == illoc::Formula::Kind::Atom) out.insert(f.name());
  for (const auto& c : f.children()) collectAtoms(c, out);
}

inline void collectSlots(const illoc::Formula& f, illoc::MBMode mode, Slots& s, bool inAct = false) {
  using K = illoc::Formula::Kind;
  if (f.kind() == K::Atom) {
    if (!inAct) s.atoms.insert(f.name());
    return;
  }
  if (f.kind() == K::Force) {
    if (hasForce(f.operand())) {
      s.signatures.insert(f.name());
      collectSlots(f.operand(), mode, s, false);
      return;
    }
    if (mode == illoc::MBMode::Free) {
      s.acts.emplace(key(f), f);
    } else {
      std::set<std::string> atoms;
      collectAtoms(f.operand(), atoms);
      for (const auto& a : atoms) s.generators.insert({f.name(), a});
    }
    return;
  }
  for (const auto& c : f.children()) collectSlots(c, mode, s, inAct);
}

struct Evaluator {
  Algebra b;
  illoc::MBMode mode;
  const Valuation& val;
  bool admissible = true;

  Table content(const std::string& force, const illoc::Formula& f) const {
    using K = illoc::Formula::Kind;
    bool pw = mode == illoc::MBMode::Pointwise;
    switch (f.kind()) {
      case K::Atom: return val.generators.at({force, f.name()});
      case K::Not: return swapArg(b, content(force, f.operand()));
      case K::And: {
        Table l = content(force, f.left()), r = content(force, f.right());
        return pw ? pMeet(l, r) : bAnd(l, r);
      }
      case K::Or: {
        Table l = content(force, f.left()), r = content(force, f.right());
        return pw ? pJoin(l, r) : bOr(l, r);
      }
      case K::Implies: {
        Table r = content(force, f.right());
        return pw ? pJoin(swapArg(b, content(force, f.left())), r) : bImp(b, content(force, f.left()), r);
      }
      default: break;
    }
    throw std::logic_error("oracle: unexpected content node");
  }

  Table eval(const illoc::Formula& f) {
    using K = illoc::Formula::Kind;
    switch (f.kind()) {
      case K::Atom: return constant(b, val.atoms.at(f.name()));
      case K::Not: return pNeg(b, eval(f.operand()));
      case K::And: {
        Table l = eval(f.left());
        return bAnd(l, eval(f.right()));
      }
      case K::Or: {
        Table l = eval(f.left());
        return bOr(l, eval(f.right()));
      }
      case K::Implies: {
        Table l = eval(f.left());
        return bImp(b, l, eval(f.right()));
      }
      case K::Force: {
        Table t;
        if (hasForce(f.operand())) {
          Table inner = eval(f.operand());
          t = bImp(b, val.signatures.at(f.name()), inner);
        } else if (mode == illoc::MBMode::Free) {
          t = val.acts.at(key(f));
        } else {
          t = content(f.name(), f.operand());
        }
        if (isConstant(t)) admissible = false;
        return t;
      }
      case K::ActRef: break;
    }
    throw std::logic_error("oracle: act references are not supported");
  }
};

struct Verdict {
  bool tautology = true;
  std::uint64_t points = 0;
  std::uint64_t admissiblePoints = 0;
  std::uint64_t refutations = 0;
};

// Exhaustive check over every admissible valuation, by nested recursion.
inline Verdict tautology(const illoc::Formula& f, unsigned k, illoc::MBMode mode) {
  Algebra b{k};
  Slots s;
  collectSlots(f, mode, s);
  std::vector<Table> cands = nonstandardTables(b);
  Valuation val;
  Verdict out;
  Table one = constant(b, b.top());

  std::vector<std::string> atoms(s.atoms.begin(), s.atoms.end());
  std::vector<std::string> acts;
  for (const auto& [k2, _] : s.acts) acts.push_back(k2);
  std::vector<std::pair<std::string, std::string>> gens(s.generators.begin(), s.generators.end());
  std::vector<std::string> sigs(s.signatures.begin(), s.signatures.end());

  auto leaf = [&] {
    ++out.points;
    Evaluator ev{b, mode, val};
    Table t = ev.eval(f);
    if (!ev.admissible) return;
    ++out.admissiblePoints;
    if (t != one) {
      out.tautology = false;
      ++out.refutations;
    }
  };
  std::function<void(std::size_t)> sigLoop = [&](std::size_t i) {
    if (i == sigs.size()) return leaf();
    for (const auto& c : cands) {
      val.signatures[sigs[i]] = c;
      sigLoop(i + 1);
    }
  };
  std::function<void(std::size_t)> genLoop = [&](std::size_t i) {
    if (i == gens.size()) return sigLoop(0);
    for (const auto& c : cands) {
      val.generators[gens[i]] = c;
      genLoop(i + 1);
    }
  };
  std::function<void(std::size_t)> actLoop = [&](std::size_t i) {
    if (i == acts.size()) return genLoop(0);
    for (const auto& c : cands) {
      val.acts[acts[i]] = c;
      actLoop(i + 1);
    }
  };
  std::function<void(std::size_t)> atomLoop = [&](std::size_t i) {
    if (i == atoms.size()) return actLoop(0);
    for (std::uint32_t x = 0; x < b.size(); ++x) {
      val.atoms[atoms[i]] = x;
      atomLoop(i + 1);
    }
  };
  atomLoop(0);
  return out;
}

// Translates an implementation valuation so the oracle can replay it.
inline Valuation fromValuation(const illoc::Formula& f, const illoc::MBValuation& v) {
  Algebra b{static_cast<unsigned>(v.algebra->size())};
  Valuation out;
  for (const auto& [name, e] : v.atomValues) out.atoms[name] = e.mask();
  for (const auto& [force, m] : v.generators)
    for (const auto& [atom, h] : m) out.generators[{force, atom}] = fromHyper(b, h);
  for (const auto& [force, h] : v.signatures) out.signatures[force] = fromHyper(b, h);
  if (v.mode == illoc::MBMode::Free) {
    Slots s;
    collectSlots(f, v.mode, s);
    for (const auto& [k, act] : s.acts) out.acts[k] = fromHyper(b, v.actValues.at(illoc::print(act)));
  }
  return out;
}

inline Table replay(const illoc::Formula& f, const illoc::MBValuation& v, bool* admissible = nullptr) {
  Valuation val = fromValuation(f, v);
  Evaluator ev{Algebra{static_cast<unsigned>(v.algebra->size())}, v.mode, val};
  Table t = ev.eval(f);
  if (admissible) *admissible = ev.admissible;
  return t;
}

}  // namespace oracle
