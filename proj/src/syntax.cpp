#include "illoc/syntax.hpp"

#include <algorithm>
#include <functional>

#include "illoc/boolalg.hpp"
#include "illoc/error.hpp"

namespace illoc {

// ---------------------------------------------------------------------------
// AST

Formula Formula::make(Kind kind, std::string name, std::vector<Formula> children) {
  return Formula(std::make_shared<const Node>(Node{kind, std::move(name), std::move(children)}));
}

Formula Formula::atom(std::string name) { return make(Kind::Atom, std::move(name), {}); }
Formula Formula::negation(Formula operand) { return make(Kind::Not, {}, {std::move(operand)}); }
Formula Formula::conjunction(Formula l, Formula r) { return make(Kind::And, {}, {std::move(l), std::move(r)}); }
Formula Formula::disjunction(Formula l, Formula r) { return make(Kind::Or, {}, {std::move(l), std::move(r)}); }
Formula Formula::implication(Formula l, Formula r) {
  return make(Kind::Implies, {}, {std::move(l), std::move(r)});
}
Formula Formula::force(std::string forceName, Formula content) {
  return make(Kind::Force, std::move(forceName), {std::move(content)});
}
Formula Formula::actRef(std::string name) { return make(Kind::ActRef, std::move(name), {}); }

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& c : children()) d = std::max(d, c.depth());
  return d + 1;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  return a.children() == b.children();
}

std::optional<IllocutionaryPoint> parsePoint(std::string_view text) {
  if (text == "assertive") return IllocutionaryPoint::Assertive;
  if (text == "commissive") return IllocutionaryPoint::Commissive;
  if (text == "directive") return IllocutionaryPoint::Directive;
  if (text == "declarative") return IllocutionaryPoint::Declarative;
  if (text == "expressive") return IllocutionaryPoint::Expressive;
  return std::nullopt;
}

const char* to_string(IllocutionaryPoint point) {
  switch (point) {
    case IllocutionaryPoint::Assertive: return "assertive";
    case IllocutionaryPoint::Commissive: return "commissive";
    case IllocutionaryPoint::Directive: return "directive";
    case IllocutionaryPoint::Declarative: return "declarative";
    case IllocutionaryPoint::Expressive: return "expressive";
  }
  return "?";
}

void ActDefinitions::define(std::string name, Formula body) {
  if (!isIdentifier(name)) {
    throw SemanticError(SemanticKind::InvalidArgument, "'" + name + "' is not a valid act name");
  }
  if (contains(name)) throw SemanticError(SemanticKind::InvalidArgument, "act '" + name + "' defined twice");
  order_.push_back(name);
  bodies_.emplace(std::move(name), std::move(body));
}

bool ActDefinitions::contains(std::string_view name) const { return bodies_.find(name) != bodies_.end(); }

const Formula& ActDefinitions::body(std::string_view name) const {
  auto it = bodies_.find(name);
  if (it == bodies_.end()) {
    throw SemanticError(SemanticKind::UnknownActRef, "no act named '" + std::string(name) + "'");
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Lexer and parser

namespace {

enum class Tok { Ident, Act, Eq, Semi, Tilde, Amp, Bar, Arrow, LBracket, RBracket, LParen, RParen, End };

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Act: return "'act'";
    case Tok::Eq: return "'='";
    case Tok::Semi: return "';'";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (src[i] == '\n') {
        ++line;
        column = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++column;  // count UTF-8 code points, not bytes
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    std::size_t l = line, col = column;
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i;
      while (j < src.size() && ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= '0' && src[j] <= '9') || src[j] == '_')) ++j;
      std::string word(src.substr(i, j - i));
      out.push_back({word == "act" ? Tok::Act : Tok::Ident, word, l, col});
      advance(j - i);
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case '=': kind = Tok::Eq; break;
      case ';': kind = Tok::Semi; break;
      case '~': kind = Tok::Tilde; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Bar; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '-':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          kind = Tok::Arrow;
          len = 2;
          break;
        }
        throw ParseError(l, col, "unexpected '-'", {"'->'"});
      default: {
        std::size_t n = 1;
        auto lead = static_cast<unsigned char>(c);
        if (lead >= 0xF0) n = 4;
        else if (lead >= 0xE0) n = 3;
        else if (lead >= 0xC0) n = 2;
        throw ParseError(l, col, "unexpected character '" + std::string(src.substr(i, std::min(n, src.size() - i))) + "'");
      }
    }
    out.push_back({kind, std::string(src.substr(i, len)), l, col});
    advance(len);
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ParseResult file() {
    ParseResult result;
    std::vector<std::pair<std::string, Formula>> raw;
    std::vector<const Token*> defTokens;
    while (peek().kind == Tok::Act) {
      next();
      const Token& name = expect(Tok::Ident);
      for (const auto& [n, body] : raw) {
        if (n == name.text) throw ParseError(name.line, name.column, "act '" + name.text + "' is already defined");
      }
      expect(Tok::Eq);
      Formula body = formula();
      expect(Tok::Semi);
      raw.emplace_back(name.text, std::move(body));
    }
    std::optional<Formula> main;
    if (peek().kind != Tok::End) main = formula();
    if (peek().kind != Tok::End) fail({main ? "'->'" : "'act'", "'&'", "'|'", describe(Tok::End)});

    std::set<std::string> actNames;
    for (const auto& [n, body] : raw) actNames.insert(n);
    for (auto& [n, body] : raw) result.definitions.define(n, resolve(body, actNames));
    if (main) result.formula = resolve(*main, actNames);
    return result;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, "unexpected " + found, std::move(expected));
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) fail({describe(kind)});
    return next();
  }

  Formula formula() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Arrow) {
      next();
      return Formula::implication(std::move(lhs), formula());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (peek().kind == Tok::Bar) {
      next();
      lhs = Formula::disjunction(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (peek().kind == Tok::Amp) {
      next();
      lhs = Formula::conjunction(std::move(lhs), unary());
    }
    return lhs;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::Tilde:
        next();
        return Formula::negation(unary());
      case Tok::LBracket: {
        next();
        std::string force = expect(Tok::Ident).text;
        expect(Tok::RBracket);
        expect(Tok::LParen);
        Formula content = formula();
        expect(Tok::RParen);
        return Formula::force(std::move(force), std::move(content));
      }
      case Tok::Ident:
        return Formula::atom(next().text);
      case Tok::LParen: {
        next();
        Formula inner = formula();
        expect(Tok::RParen);
        return inner;
      }
      default:
        fail({"'~'", "'['", "identifier", "'('"});
    }
  }

  static Formula resolve(const Formula& f, const std::set<std::string>& acts) {
    switch (f.kind()) {
      case Formula::Kind::Atom:
        return acts.count(f.name()) ? Formula::actRef(f.name()) : f;
      case Formula::Kind::ActRef:
        return f;
      case Formula::Kind::Not:
        return Formula::negation(resolve(f.operand(), acts));
      case Formula::Kind::Force:
        return Formula::force(f.name(), resolve(f.operand(), acts));
      case Formula::Kind::And:
        return Formula::conjunction(resolve(f.left(), acts), resolve(f.right(), acts));
      case Formula::Kind::Or:
        return Formula::disjunction(resolve(f.left(), acts), resolve(f.right(), acts));
      case Formula::Kind::Implies:
        return Formula::implication(resolve(f.left(), acts), resolve(f.right(), acts));
    }
    return f;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    default: return 4;
  }
}

void printInto(const Formula& f, std::string& out) {
  auto child = [&out](const Formula& c, bool parens) {
    if (parens) out += '(';
    printInto(c, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::ActRef:
      out += f.name();
      return;
    case Formula::Kind::Not:
      out += '~';
      child(f.operand(), precedence(f.operand()) < 4);
      return;
    case Formula::Kind::Force:
      out += '[' + f.name() + "](";
      printInto(f.operand(), out);
      out += ')';
      return;
    case Formula::Kind::Implies:
      child(f.left(), precedence(f.left()) <= 1);
      out += " -> ";
      child(f.right(), precedence(f.right()) < 1);
      return;
    case Formula::Kind::Or:
    case Formula::Kind::And: {
      int p = precedence(f);
      child(f.left(), precedence(f.left()) < p);
      out += f.kind() == Formula::Kind::Or ? " | " : " & ";
      child(f.right(), precedence(f.right()) <= p);
      return;
    }
  }
}

void collectRefs(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == Formula::Kind::ActRef) out.insert(f.name());
  for (const auto& c : f.children()) collectRefs(c, out);
}

}  // namespace

ParseResult parse(std::string_view text) { return Parser(tokenize(text)).file(); }

Formula parseFormula(std::string_view text) {
  ParseResult r = parse(text);
  if (!r.definitions.empty()) throw ParseError(1, 1, "act definitions are not allowed here");
  if (!r.formula) throw ParseError(1, 1, "empty formula", {"'~'", "'['", "identifier", "'('"});
  return *r.formula;
}

std::string print(const Formula& f) {
  std::string out;
  printInto(f, out);
  return out;
}

std::set<std::string> atomsOf(const Formula& f) {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.kind() == Formula::Kind::Atom) out.insert(g.name());
    for (const auto& c : g.children()) walk(c);
  };
  walk(f);
  return out;
}

// ---------------------------------------------------------------------------
// Act reference graph

std::vector<std::vector<std::string>> detectCycles(const ActDefinitions& defs) {
  const auto& names = defs.names();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;

  std::vector<std::vector<std::size_t>> edges(names.size());
  std::vector<bool> selfLoop(names.size(), false);
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::set<std::string> refs;
    collectRefs(defs.body(names[i]), refs);
    for (const auto& r : refs) {
      auto it = index.find(r);
      if (it == index.end()) {
        throw SemanticError(SemanticKind::UnknownActRef,
                            "act '" + names[i] + "' refers to undefined act '" + r + "'");
      }
      edges[i].push_back(it->second);
      if (it->second == i) selfLoop[i] = true;
    }
  }

  // Tarjan's strongly connected components.
  const std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(names.size(), unvisited), low(names.size(), 0);
  std::vector<bool> onStack(names.size(), false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;
  std::function<void(std::size_t)> strongConnect = [&](std::size_t v) {
    order[v] = low[v] = counter++;
    stack.push_back(v);
    onStack[v] = true;
    for (std::size_t w : edges[v]) {
      if (order[w] == unvisited) {
        strongConnect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (onStack[w]) {
        low[v] = std::min(low[v], order[w]);
      }
    }
    if (low[v] == order[v]) {
      std::vector<std::size_t> component;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        onStack[w] = false;
        component.push_back(w);
      } while (w != v);
      components.push_back(std::move(component));
    }
  };
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (order[v] == unvisited) strongConnect(v);
  }

  std::vector<std::vector<std::size_t>> cyclic;
  for (auto& c : components) {
    if (c.size() > 1 || selfLoop[c.front()]) {
      std::sort(c.begin(), c.end());
      cyclic.push_back(std::move(c));
    }
  }
  std::sort(cyclic.begin(), cyclic.end());
  std::vector<std::vector<std::string>> out;
  for (const auto& c : cyclic) {
    std::vector<std::string> cycle;
    for (std::size_t i : c) cycle.push_back(names[i]);
    out.push_back(std::move(cycle));
  }
  return out;
}

bool hasInfiniteUnfolding(const ActDefinitions& defs, std::string_view name) {
  std::set<std::string> onCycle;
  for (const auto& cycle : detectCycles(defs)) onCycle.insert(cycle.begin(), cycle.end());
  std::set<std::string> seen;
  std::vector<std::string> work{std::string(name)};
  defs.body(name);
  while (!work.empty()) {
    std::string n = work.back();
    work.pop_back();
    if (onCycle.count(n)) return true;
    if (!seen.insert(n).second) continue;
    std::set<std::string> refs;
    collectRefs(defs.body(n), refs);
    work.insert(work.end(), refs.begin(), refs.end());
  }
  return false;
}

Formula inlineActs(const Formula& f, const ActDefinitions& defs) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return f;
    case Formula::Kind::ActRef:
      if (hasInfiniteUnfolding(defs, f.name())) {
        throw SemanticError(SemanticKind::CyclicAct,
                            "act '" + f.name() + "' has an infinite unfolding and no value");
      }
      return inlineActs(defs.body(f.name()), defs);
    case Formula::Kind::Not:
      return Formula::negation(inlineActs(f.operand(), defs));
    case Formula::Kind::Force:
      return Formula::force(f.name(), inlineActs(f.operand(), defs));
    case Formula::Kind::And:
      return Formula::conjunction(inlineActs(f.left(), defs), inlineActs(f.right(), defs));
    case Formula::Kind::Or:
      return Formula::disjunction(inlineActs(f.left(), defs), inlineActs(f.right(), defs));
    case Formula::Kind::Implies:
      return Formula::implication(inlineActs(f.left(), defs), inlineActs(f.right(), defs));
  }
  return f;
}

std::set<std::string> forcesOf(const Formula& f, const ActDefinitions& defs) {
  std::set<std::string> out;
  std::set<std::string> visitedActs;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.kind() == Formula::Kind::Force) out.insert(g.name());
    if (g.kind() == Formula::Kind::ActRef && visitedActs.insert(g.name()).second) walk(defs.body(g.name()));
    for (const auto& c : g.children()) walk(c);
  };
  walk(f);
  return out;
}

bool isForceFree(const Formula& f, const ActDefinitions& defs) { return forcesOf(f, defs).empty(); }

}  // namespace illoc
