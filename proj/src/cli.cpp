#include "illoc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "illoc/error.hpp"
#include "illoc/json_io.hpp"
#include "illoc/matrix_m.hpp"
#include "illoc/matrix_mb.hpp"
#include "illoc/opposition.hpp"

namespace illoc::cli {

namespace {

struct RunConfig {
  std::string matrix = "m";
  std::string atoms = "a,b";
  std::string mode = "pointwise";
  bool allValuations = false;
  std::string valuationFile;
  std::vector<std::string> assignments;
  std::string defsFile;
  std::string formulaFile;
  std::vector<std::string> formulas;
  std::uint64_t budget = 0;
  std::string output = "text";
  unsigned jobs = 1;

  // square
  std::string force;
  std::string atom = "p";
  std::string generator;
  // unfold
  std::string act;
  unsigned steps = 4;
  std::string seed = "standard:0";
  std::string signature;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SemanticError(SemanticKind::InvalidArgument, "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> splitComma(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  bool json() const { return cfg_.output == "json"; }
  MatrixKind matrix() const {
    if (cfg_.matrix == "m") return MatrixKind::M;
    if (cfg_.matrix == "mb") return MatrixKind::MB;
    throw SemanticError(SemanticKind::InvalidArgument, "--matrix must be m or mb");
  }

  const AlgebraSpec& algebra() const {
    if (valuation_) return *valuation_->algebra;
    return AlgebraSpec::make(splitComma(cfg_.atoms));
  }

  MBMode mode() const {
    auto m = parseMode(cfg_.mode);
    if (!m) throw SemanticError(SemanticKind::InvalidArgument, "--mode must be free, pointwise or connective");
    return *m;
  }

  SearchOptions search() const {
    SearchOptions s;
    s.budget = cfg_.budget ? cfg_.budget : budgetFromEnvironment();
    s.jobs = std::max(1U, cfg_.jobs);
    return s;
  }

  CheckSpace space() const {
    CheckSpace space;
    space.matrix = matrix();
    space.mb.search = search();
    if (space.matrix == MatrixKind::MB) {
      space.mb.algebra = &algebra();
      space.mb.mode = valuation_ ? valuation_->mode : mode();
      space.mb.admissibleOnly = !cfg_.allValuations;
    }
    return space;
  }

  // Loads definitions and the formulas named on the command line.
  void load(std::optional<std::size_t> expectedFormulas) {
    if (!cfg_.defsFile.empty()) mergeDefs(parse(readFile(cfg_.defsFile)));
    std::vector<std::string> sources = cfg_.formulas;
    if (!cfg_.formulaFile.empty()) sources.insert(sources.begin(), readFile(cfg_.formulaFile));
    for (const auto& text : sources) {
      ParseResult r = parse(text);
      mergeDefs(r);
      if (r.formula) formulas_.push_back(*r.formula);
    }
    if (expectedFormulas && formulas_.size() != *expectedFormulas) {
      throw SemanticError(SemanticKind::InvalidArgument, "expected " + std::to_string(*expectedFormulas) +
                                                             " formula(s), got " + std::to_string(formulas_.size()));
    }
    // Names defined in a separate file are act references in the formula too.
    for (auto& f : formulas_) f = rebind(f);
    if (!cfg_.valuationFile.empty()) {
      valuation_ = valuationFromJson(Json::parse(readFile(cfg_.valuationFile)));
    }
  }

  const RunConfig& cfg() const { return cfg_; }
  const std::vector<Formula>& formulas() const { return formulas_; }
  const ActDefinitions& defs() const { return defs_; }
  const std::optional<MBValuation>& valuation() const { return valuation_; }
  std::ostream& out() { return out_; }

  AtomValuation2 assignments() const {
    AtomValuation2 e;
    for (const auto& a : cfg_.assignments) {
      auto eq = a.find('=');
      std::string name = a.substr(0, eq);
      std::string value = eq == std::string::npos ? "" : a.substr(eq + 1);
      if (eq == std::string::npos || !isIdentifier(name) || (value != "0" && value != "1")) {
        throw SemanticError(SemanticKind::InvalidArgument, "--assign expects atom=0 or atom=1, got '" + a + "'");
      }
      e[name] = value == "1";
    }
    return e;
  }

 private:
  void mergeDefs(const ParseResult& r) {
    for (const auto& name : r.definitions.names()) defs_.define(name, r.definitions.body(name));
  }

  Formula rebind(const Formula& f) const {
    switch (f.kind()) {
      case Formula::Kind::Atom: return defs_.contains(f.name()) ? Formula::actRef(f.name()) : f;
      case Formula::Kind::ActRef: return f;
      case Formula::Kind::Not: return Formula::negation(rebind(f.operand()));
      case Formula::Kind::Force: return Formula::force(f.name(), rebind(f.operand()));
      case Formula::Kind::And: return Formula::conjunction(rebind(f.left()), rebind(f.right()));
      case Formula::Kind::Or: return Formula::disjunction(rebind(f.left()), rebind(f.right()));
      case Formula::Kind::Implies: return Formula::implication(rebind(f.left()), rebind(f.right()));
    }
    return f;
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  ActDefinitions defs_;
  std::vector<Formula> formulas_;
  std::optional<MBValuation> valuation_;
};

std::string renderValuation(const AtomValuation2& e) {
  std::string s;
  for (const auto& [a, v] : e) s += (s.empty() ? "" : " ") + a + "=" + (v ? "1" : "0");
  return s.empty() ? "(no atoms)" : s;
}

std::string renderValuation(const MBValuation& val) {
  std::string s;
  auto add = [&s](const std::string& part) { s += (s.empty() ? "" : " ") + part; };
  for (const auto& [a, x] : val.atomValues) add(a + "=" + x.str());
  for (const auto& [k, h] : val.actValues) add(k + "=" + h.str());
  for (const auto& [force, perAtom] : val.generators) {
    for (const auto& [a, h] : perAtom) add("gen(" + force + "," + a + ")=" + h.str());
  }
  for (const auto& [force, h] : val.signatures) add("sig(" + force + ")=" + h.str());
  return s.empty() ? "(empty valuation)" : s;
}

std::string renderWitness(const Witness& w) {
  if (const auto* e = std::get_if<AtomValuation2>(&w)) return renderValuation(*e);
  return renderValuation(std::get<MBValuation>(w));
}

MBValuation requireValuation(const Session& s) {
  if (!s.valuation()) throw SemanticError(SemanticKind::MissingAssignment, "matrix mb needs --valuation FILE");
  return *s.valuation();
}

int cmdEval(Session& s) {
  s.load(1);
  const Formula& f = s.formulas()[0];
  if (s.matrix() == MatrixKind::M) {
    TruthValue4 v = evalM(f, s.assignments(), s.defs());
    if (s.json()) {
      s.out() << Json{{"formula", print(f)}, {"matrix", "m"}, {"value", to_string(v)},
                      {"classification", to_string(classify(v))}}
                     .dump(2)
              << "\n";
    } else {
      s.out() << to_string(v) << " " << to_string(classify(v)) << "\n";
    }
    return kOk;
  }
  MBValuation val = requireValuation(s);
  EvalOutcome o = evalMB(f, val, s.defs());
  if (s.json()) {
    Json subs = Json::object();
    for (const auto& [k, h] : o.subvalues) subs[k] = toJson(h);
    s.out() << Json{{"formula", print(f)}, {"matrix", "mb"}, {"mode", to_string(val.mode)}, {"value", toJson(o.value)},
                    {"standard", o.value.isStandard()}, {"admissible", o.admissible}, {"subvalues", subs}}
                   .dump(2)
            << "\n";
  } else {
    s.out() << o.value.str() << (o.value.isStandard() ? " standard" : " nonstandard")
            << (o.admissible ? "" : " (inadmissible)") << "\n";
    for (const auto& [k, h] : o.subvalues) s.out() << "  " << k << " = " << h.str() << "\n";
  }
  return kOk;
}

int cmdTable(Session& s) {
  s.load(1);
  const Formula& f = s.formulas()[0];
  Json rows = Json::array();
  if (s.matrix() == MatrixKind::M) {
    for (const auto& row : tableM(f, s.defs(), s.search())) {
      if (s.json()) {
        rows.push_back(Json{{"valuation", toJson(row.valuation)}, {"value", to_string(row.value)}});
      } else {
        s.out() << renderValuation(row.valuation) << " : " << to_string(row.value) << " "
                << to_string(classify(row.value)) << "\n";
      }
    }
  } else {
    for (const auto& row : tableMB(f, s.space().mb, s.defs())) {
      if (s.json()) {
        rows.push_back(Json{{"valuation", toJson(row.valuation)}, {"value", toJson(row.outcome.value)},
                            {"admissible", row.outcome.admissible}});
      } else {
        s.out() << renderValuation(row.valuation) << " : " << row.outcome.value.str()
                << (row.outcome.admissible ? "" : " (inadmissible)") << "\n";
      }
    }
  }
  if (s.json()) s.out() << Json{{"formula", print(f)}, {"rows", rows}}.dump(2) << "\n";
  return kOk;
}

int cmdTaut(Session& s) {
  s.load(1);
  const Formula& f = s.formulas()[0];
  Json j{{"formula", print(f)}};
  bool tautology;
  if (s.matrix() == MatrixKind::M) {
    auto r = isTautologyM(f, s.defs(), s.search());
    tautology = r.tautology;
    j["mode"] = "m";
    j["status"] = tautology ? "tautology" : "refuted";
    if (!tautology) {
      j["witness"] = toJson(*r.witness);
      j["value"] = to_string(*r.witnessValue);
    }
    if (!s.json()) {
      s.out() << (tautology ? "tautology" : "refuted");
      if (!tautology) s.out() << ": " << renderValuation(*r.witness) << " gives " << to_string(*r.witnessValue);
      s.out() << "\n";
    }
  } else {
    CheckSpace space = s.space();
    auto r = isTautologyMB(f, space.mb, s.defs());
    tautology = r.tautology;
    j["mode"] = to_string(space.mb.mode);
    j["status"] = tautology ? "tautology" : "refuted";
    if (!tautology) {
      j["witness"] = toJson(*r.witness);
      j["value"] = toJson(*r.value);
    }
    if (!s.json()) {
      s.out() << (tautology ? "tautology" : "refuted");
      if (!tautology) s.out() << ": " << renderValuation(*r.witness) << " gives " << r.value->str();
      s.out() << "\n";
    }
  }
  if (s.json()) s.out() << j.dump(2) << "\n";
  return tautology ? kOk : kRefuted;
}

std::string tupleText(const std::vector<TruthValue4>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + to_string(t[i]);
  return s + ")";
}

int cmdCheckMatrix(Session& s) {
  auto checks = checkMatrixProperties();
  bool all = true;
  Json props = Json::array();
  for (const auto& c : checks) {
    all = all && c.holds();
    if (s.json()) {
      Json violations = Json::array();
      for (const auto& v : c.violations) {
        Json t = Json::array();
        for (auto x : v) t.push_back(to_string(x));
        violations.push_back(t);
      }
      props.push_back(Json{{"property", c.number}, {"statement", c.statement}, {"holds", c.holds()},
                           {"checked", c.tuplesChecked}, {"holding", c.tuplesHolding}, {"violations", violations}});
      continue;
    }
    s.out() << (c.holds() ? "PASS" : "FAIL") << " (" << c.number << ") " << c.statement << "  " << c.tuplesHolding
            << "/" << c.tuplesChecked;
    if (!c.holds()) {
      s.out() << "  violated at";
      for (const auto& v : c.violations) s.out() << " " << tupleText(v);
    }
    s.out() << "\n";
  }
  if (s.json()) {
    Json orderings = Json::array();
    for (const auto& o : contradictionOrderings()) {
      orderings.push_back(Json{{"a", to_string(o.a)}, {"a & ~a", to_string(o.plain)},
                               {"F(a & ~a)", to_string(o.forced)}, {"F(a) & ~F(a)", to_string(o.forcedParts)}});
    }
    s.out() << Json{{"properties", props}, {"contradictions", orderings}}.dump(2) << "\n";
  } else {
    for (const auto& o : contradictionOrderings()) {
      s.out() << "a=" << to_string(o.a) << ": a & ~a = " << to_string(o.plain)
              << ", F(a & ~a) = " << to_string(o.forced) << ", F(a) & ~F(a) = " << to_string(o.forcedParts) << "\n";
    }
  }
  return all ? kOk : kRefuted;
}

const char* mark(bool b) { return b ? "✓" : "✗"; }

int cmdSquare(Session& s) {
  s.load(0);
  CheckSpace space = s.space();
  const RunConfig& cfg = s.cfg();
  std::string force = !cfg.force.empty() ? cfg.force : space.matrix == MatrixKind::M ? "think" : "f";
  std::optional<MBValuation> at;
  if (space.matrix == MatrixKind::MB) {
    if (!cfg.generator.empty()) {
      if (space.mb.mode == MBMode::Free) {
        throw SemanticError(SemanticKind::InvalidArgument, "--gen needs pointwise or connective mode");
      }
      at = generatorValuation(force, cfg.atom, parseHyperText(s.algebra(), cfg.generator), space.mb.mode);
    } else if (s.valuation()) {
      at = s.valuation();
    }
  } else if (!cfg.generator.empty()) {
    throw SemanticError(SemanticKind::InvalidArgument, "--gen applies to matrix mb only");
  }
  OppositionReport r = squareForForce(force, cfg.atom, space, at);

  if (s.json()) {
    Json j{{"force", force}, {"atom", cfg.atom}, {"matrix", to_string(space.matrix)}};
    if (space.matrix == MatrixKind::MB) j["mode"] = to_string(space.mb.mode);
    if (at) j["valuation"] = toJson(*at);
    j["report"] = toJson(r);
    if (r.hyperReport) j["cases"] = toJson(classifyOpposition(at->generators.at(force).at(cfg.atom)));
    s.out() << j.dump(2) << "\n";
    return r.squareHolds ? kOk : kRefuted;
  }

  std::string fp = "[" + force + "](" + cfg.atom + ")";
  std::string fnp = "[" + force + "](~" + cfg.atom + ")";
  auto& out = s.out();
  out << "square of opposition for " << fp << " (matrix " << to_string(space.matrix);
  if (space.matrix == MatrixKind::MB) out << ", " << to_string(space.mb.mode);
  if (at) out << ", at " << renderValuation(*at);
  out << ")\n";
  auto line = [&out](const char* name, const std::string& pair, const Relation& rel) {
    out << "  " << mark(rel.holds) << " " << name << "  " << pair;
    if (!rel.holds && rel.witness) out << "  fails at " << renderWitness(*rel.witness);
    out << "\n";
  };
  line("criterion    ", fnp + " <= ~" + fp, r.criterion);
  line("contrary     ", fp + " , " + fnp, r.contrary);
  line("contradictory", fp + " , ~" + fp + "  and  " + fnp + " , ~" + fnp, r.contradictory);
  line("subcontrary  ", "~" + fnp + " , ~" + fp, r.subcontrary);
  line("subaltern    ", fp + " => ~" + fnp, r.subalternLeft);
  line("subaltern    ", fnp + " => ~" + fp, r.subalternRight);
  auto law = [&out](const char* tag, const LawReport& l) {
    out << "  " << tag << " " << l.formula << " : values {";
    for (std::size_t i = 0; i < l.values.size(); ++i) out << (i ? ", " : "") << l.values[i];
    out << "} " << mark(l.designatedEverywhere) << " designated\n";
  };
  law("tertium non datur", r.laws.tertiumNonDatur);
  law("law of contrary  ", r.laws.lawOfContrary);
  if (r.hyperReport) {
    OppositionCases c = classifyOpposition(at->generators.at(force).at(cfg.atom));
    out << "  cases:";
    if (c.incompatible) out << " 1";
    if (c.negAboveSwap) out << " 2";
    if (c.negBelowSwap) out << " 3";
    out << "  inf([f],[f~]) = " << c.infWitness.str() << "  sup([f],[f~]) = " << c.supWitness.str() << "\n";
  }
  out << "square holds: " << (r.squareHolds ? "yes" : "no") << "\n";
  return r.squareHolds ? kOk : kRefuted;
}

int cmdEntail(Session& s) {
  s.load(2);
  CheckSpace space = s.space();
  auto r = entails(s.formulas()[0], s.formulas()[1], space, s.defs());
  if (s.json()) {
    Json j{{"left", print(s.formulas()[0])}, {"right", print(s.formulas()[1])}, {"matrix", to_string(space.matrix)},
           {"holds", r.holds}};
    if (space.matrix == MatrixKind::MB) j["mode"] = to_string(space.mb.mode);
    if (!r.holds) {
      j["witness"] = toJson(*r.witness);
      j["left_value"] = to_string(*r.leftValue);
      j["right_value"] = to_string(*r.rightValue);
    }
    s.out() << j.dump(2) << "\n";
  } else {
    s.out() << (r.holds ? "entails" : "does not entail");
    if (!r.holds) {
      s.out() << ": " << renderWitness(*r.witness) << " gives " << to_string(*r.leftValue) << " vs "
              << to_string(*r.rightValue);
    }
    s.out() << "\n";
  }
  return r.holds ? kOk : kRefuted;
}

int cmdUnfold(Session& s) {
  s.load(0);
  const RunConfig& cfg = s.cfg();
  const AlgebraSpec& algebra = s.algebra();
  MBValuation val;
  if (s.valuation()) {
    val = *s.valuation();
  } else {
    val.algebra = &algebra;
    val.mode = s.mode();
  }
  // Forces without a signature get --signature, or <{first atom}, rest>.
  HyperValue fallback = cfg.signature.empty()
                            ? HyperValue(algebra.fromMask(1), complement(algebra.fromMask(1)))
                            : parseHyperText(algebra, cfg.signature);
  for (const auto& name : s.defs().names()) {
    for (const auto& force : forcesOf(s.defs().body(name), s.defs())) val.signatures.emplace(force, fallback);
  }
  HyperValue seed = parseHyperText(algebra, cfg.seed);
  Formula unfolded = unfoldFormula(s.defs(), cfg.act, cfg.steps);
  HyperValue value = unfoldCyclic(s.defs(), cfg.act, cfg.steps, seed, val);
  if (s.json()) {
    s.out() << Json{{"act", cfg.act}, {"steps", cfg.steps}, {"seed", toJson(seed)}, {"unfolded", print(unfolded)},
                    {"valuation", toJson(val)}, {"value", toJson(value)}}
                   .dump(2)
            << "\n";
  } else {
    s.out() << print(unfolded) << "\n" << value.str() << "\n";
  }
  return kOk;
}

int cmdFmt(Session& s) {
  s.load(std::nullopt);
  if (s.json()) {
    Json defs = Json::object();
    for (const auto& name : s.defs().names()) defs[name] = toJson(s.defs().body(name));
    Json formulas = Json::array();
    for (const auto& f : s.formulas()) formulas.push_back(toJson(f));
    s.out() << Json{{"definitions", defs}, {"formulas", formulas}}.dump(2) << "\n";
    return kOk;
  }
  for (const auto& name : s.defs().names()) s.out() << "act " << name << " = " << print(s.defs().body(name)) << ";\n";
  for (const auto& f : s.formulas()) s.out() << print(f) << "\n";
  return kOk;
}

void addCommon(CLI::App* cmd, RunConfig& cfg, bool formulas) {
  cmd->add_option("--matrix", cfg.matrix, "Matrix: m or mb")->check(CLI::IsMember({"m", "mb"}));
  cmd->add_option("--atoms", cfg.atoms, "Atoms of the Boolean algebra, comma separated");
  cmd->add_option("--mode", cfg.mode, "M_B valuation mode")->check(CLI::IsMember({"free", "pointwise", "connective"}));
  cmd->add_flag("--all-valuations", cfg.allValuations, "Include inadmissible M_B valuations");
  cmd->add_option("--valuation", cfg.valuationFile, "M_B valuation JSON file");
  cmd->add_option("--defs", cfg.defsFile, "File with act definitions");
  cmd->add_option("--budget", cfg.budget, "Evaluation budget (default ILLOC_BUDGET or 10^7)");
  cmd->add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--jobs", cfg.jobs, "Parallel search workers")->check(CLI::Range(1U, 256U));
  if (formulas) {
    cmd->add_option("--file", cfg.formulaFile, "Formula file (.illoc)");
    cmd->add_option("formula", cfg.formulas, "Formula text");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"illoc: many-valued illocutionary logic toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* eval = app.add_subcommand("eval", "Evaluate a formula");
  addCommon(eval, cfg, true);
  eval->add_option("--assign", cfg.assignments, "Atom value for matrix m, e.g. p=1")->allow_extra_args(false);
  auto* table = app.add_subcommand("table", "Print the value of a formula under every valuation");
  addCommon(table, cfg, true);
  auto* taut = app.add_subcommand("taut", "Check whether a formula is a tautology");
  addCommon(taut, cfg, true);
  auto* check = app.add_subcommand("check-matrix", "Check the properties of the four-valued matrix");
  addCommon(check, cfg, false);
  auto* square = app.add_subcommand("square", "Square of opposition report for one force");
  addCommon(square, cfg, false);
  square->add_option("--force", cfg.force, "Force name (default think for m, f for mb)");
  square->add_option("--atom", cfg.atom, "Content atom");
  square->add_option("--gen", cfg.generator, "Generator of the act, e.g. \"on_true=a;on_false=\"");
  auto* entail = app.add_subcommand("entail", "Check whether the first formula entails the second");
  addCommon(entail, cfg, true);
  auto* unfold = app.add_subcommand("unfold", "Unfold a cyclic act and evaluate it with a seed");
  addCommon(unfold, cfg, false);
  unfold->add_option("--act", cfg.act, "Cyclic act name")->required();
  unfold->add_option("--steps", cfg.steps, "Unfolding depth");
  unfold->add_option("--seed", cfg.seed, "Value of the innermost occurrence, e.g. standard:0");
  unfold->add_option("--signature", cfg.signature, "Signature for forces without one");
  auto* fmt = app.add_subcommand("fmt", "Print formulas in canonical form");
  addCommon(fmt, cfg, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  Session session(cfg, out);
  try {
    if (*eval) return cmdEval(session);
    if (*table) return cmdTable(session);
    if (*taut) return cmdTaut(session);
    if (*check) return cmdCheckMatrix(session);
    if (*square) return cmdSquare(session);
    if (*entail) return cmdEntail(session);
    if (*unfold) return cmdUnfold(session);
    if (*fmt) return cmdFmt(session);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: invalid JSON: " << e.what() << "\n";
    return kSemanticError;
  }
  return kParseError;
}

}  // namespace illoc::cli
