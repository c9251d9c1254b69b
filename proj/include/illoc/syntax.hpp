#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace illoc {

/// Immutable formula of the illocutionary language. Copies share structure.
class Formula {
 public:
  enum class Kind { Atom, Not, And, Or, Implies, Force, ActRef };

  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);
  static Formula force(std::string forceName, Formula content);
  static Formula actRef(std::string name);

  Kind kind() const { return node_->kind; }
  bool isBinary() const {
    return kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Implies;
  }
  // Atom name, force name, or act name.
  const std::string& name() const { return node_->name; }
  // Operand of Not, content of Force.
  const Formula& operand() const { return node_->children.at(0); }
  const Formula& left() const { return node_->children.at(0); }
  const Formula& right() const { return node_->children.at(1); }
  const std::vector<Formula>& children() const { return node_->children; }

  std::size_t depth() const;

  // Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::string name, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

enum class IllocutionaryPoint { Assertive, Commissive, Directive, Declarative, Expressive };

// Forces carry their illocutionary point as metadata only.
struct ForceDecl {
  std::string name;
  std::optional<IllocutionaryPoint> point;
};

std::optional<IllocutionaryPoint> parsePoint(std::string_view text);
const char* to_string(IllocutionaryPoint point);

/// Named act definitions in declaration order. Bodies may refer to each
/// other, including cyclically.
class ActDefinitions {
 public:
  void define(std::string name, Formula body);
  bool contains(std::string_view name) const;
  const Formula& body(std::string_view name) const;
  const std::vector<std::string>& names() const { return order_; }
  bool empty() const { return order_.empty(); }

 private:
  std::vector<std::string> order_;
  std::map<std::string, Formula, std::less<>> bodies_;
};

struct ParseResult {
  ActDefinitions definitions;
  std::optional<Formula> formula;
};

// Grammar:
//   file    := ("act" ident "=" formula ";")* formula?
//   formula := or ("->" formula)?
//   or      := and ("|" and)*
//   and     := not ("&" not)*
//   not     := "~" not | "[" ident "]" "(" formula ")" | ident | "(" formula ")"
// Identifiers naming a defined act become ActRef nodes, all others atoms.
ParseResult parse(std::string_view text);

// Parses text that must contain exactly one formula and no definitions.
Formula parseFormula(std::string_view text);

// Canonical text with minimal parentheses.
std::string print(const Formula& f);

std::set<std::string> atomsOf(const Formula& f);

// Cycles of the act reference graph (strongly connected components with a
// cycle), each listed in declaration order. Cycles are reported in order of
// their first member's declaration.
std::vector<std::vector<std::string>> detectCycles(const ActDefinitions& defs);

// True when the complete unfolding of `name` is infinite, i.e. the act
// reaches a cycle.
bool hasInfiniteUnfolding(const ActDefinitions& defs, std::string_view name);

// Replaces every ActRef by its body. Throws CyclicAct if an infinite
// unfolding is reached and UnknownActRef for undefined names.
Formula inlineActs(const Formula& f, const ActDefinitions& defs);

// Force names occurring in f, looking through ActRefs.
std::set<std::string> forcesOf(const Formula& f, const ActDefinitions& defs = {});
bool isForceFree(const Formula& f, const ActDefinitions& defs = {});

}  // namespace illoc
