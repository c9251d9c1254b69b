#include "illoc/json_io.hpp"

#include "illoc/error.hpp"

namespace illoc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw SemanticError(SemanticKind::InvalidArgument, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::vector<std::string> splitList(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string item(text.substr(start, comma - start));
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (!item.empty()) out.push_back(item);
    start = comma + 1;
  }
  return out;
}

Element elementFromText(const AlgebraSpec& algebra, std::string_view text) {
  auto items = splitList(text);
  if (items.size() == 1 && items[0] == "0") return algebra.bottom();
  if (items.size() == 1 && items[0] == "1") return algebra.top();
  return algebra.fromNames(items);
}

}  // namespace

Json toJson(const Element& x) { return Json(x.atomNames()); }

Element elementFromJson(const AlgebraSpec& algebra, const Json& j) {
  if (!j.is_array()) bad("an element must be an array of atom names");
  std::vector<std::string> names;
  for (const auto& item : j) {
    if (!item.is_string()) bad("atom names must be strings");
    names.push_back(item.get<std::string>());
  }
  return algebra.fromNames(names);
}

Json toJson(const AlgebraSpec& spec) { return Json{{"atoms", spec.atoms()}}; }

const AlgebraSpec& algebraFromJson(const Json& j) {
  const Json& atoms = field(j, "atoms");
  if (!atoms.is_array()) bad("'atoms' must be an array");
  std::vector<std::string> names;
  for (const auto& a : atoms) {
    if (!a.is_string()) bad("atom names must be strings");
    names.push_back(a.get<std::string>());
  }
  return AlgebraSpec::make(names);
}

Json toJson(const HyperValue& h) {
  if (h.isNormal() && h.isStandard()) return Json{{"standard", toJson(h.onTrue())}};
  Json j{{"on_true", toJson(h.onTrue())}, {"on_false", toJson(h.onFalse())}};
  if (!h.isNormal()) {
    Json ex = Json::array();
    for (const auto& [k, v] : h.exceptions()) ex.push_back(Json{{"at", toJson(k)}, {"value", toJson(v)}});
    j["exceptions"] = ex;
  }
  return j;
}

HyperValue hyperFromJson(const AlgebraSpec& algebra, const Json& j) {
  if (j.is_object() && j.contains("standard")) return standard(elementFromJson(algebra, j.at("standard")));
  Element onTrue = elementFromJson(algebra, field(j, "on_true"));
  Element onFalse = elementFromJson(algebra, field(j, "on_false"));
  HyperValue::ExceptionMap exceptions;
  if (j.contains("exceptions")) {
    for (const auto& e : j.at("exceptions")) {
      Element at = elementFromJson(algebra, field(e, "at"));
      if (!exceptions.emplace(at, elementFromJson(algebra, field(e, "value"))).second) {
        bad("duplicate exception point " + at.str());
      }
    }
  }
  return HyperValue(onTrue, onFalse, std::move(exceptions));
}

HyperValue parseHyperText(const AlgebraSpec& algebra, std::string_view text) {
  constexpr std::string_view kStandard = "standard:";
  if (text.substr(0, kStandard.size()) == kStandard) {
    return standard(elementFromText(algebra, text.substr(kStandard.size())));
  }
  std::optional<Element> onTrue, onFalse;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    if (semi == std::string_view::npos) semi = text.size();
    std::string_view part = text.substr(start, semi - start);
    std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) {
      if (!part.empty()) bad("expected key=value in '" + std::string(part) + "'");
    } else {
      std::string_view key = part.substr(0, eq);
      Element value = elementFromText(algebra, part.substr(eq + 1));
      if (key == "on_true") onTrue = value;
      else if (key == "on_false") onFalse = value;
      else bad("unknown key '" + std::string(key) + "'");
    }
    start = semi + 1;
  }
  if (!onTrue || !onFalse) bad("a value needs both on_true and on_false, or the form standard:atoms");
  return HyperValue(*onTrue, *onFalse);
}

Json toJson(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return Json{{"kind", "atom"}, {"name", f.name()}};
    case Formula::Kind::ActRef: return Json{{"kind", "act"}, {"name", f.name()}};
    case Formula::Kind::Not: return Json{{"kind", "not"}, {"operand", toJson(f.operand())}};
    case Formula::Kind::Force:
      return Json{{"kind", "force"}, {"force", f.name()}, {"content", toJson(f.operand())}};
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      const char* kind = f.kind() == Formula::Kind::And ? "and" : f.kind() == Formula::Kind::Or ? "or" : "implies";
      return Json{{"kind", kind}, {"left", toJson(f.left())}, {"right", toJson(f.right())}};
    }
  }
  return Json();
}

Formula formulaFromJson(const Json& j) {
  std::string kind = field(j, "kind").get<std::string>();
  auto name = [&](const char* key) {
    std::string n = field(j, key).get<std::string>();
    if (!isIdentifier(n)) bad("'" + n + "' is not an identifier");
    return n;
  };
  if (kind == "atom") return Formula::atom(name("name"));
  if (kind == "act") return Formula::actRef(name("name"));
  if (kind == "not") return Formula::negation(formulaFromJson(field(j, "operand")));
  if (kind == "force") return Formula::force(name("force"), formulaFromJson(field(j, "content")));
  if (kind == "and" || kind == "or" || kind == "implies") {
    Formula l = formulaFromJson(field(j, "left"));
    Formula r = formulaFromJson(field(j, "right"));
    if (kind == "and") return Formula::conjunction(l, r);
    if (kind == "or") return Formula::disjunction(l, r);
    return Formula::implication(l, r);
  }
  bad("unknown formula kind '" + kind + "'");
}

Json toJson(const AtomValuation2& e) {
  Json j = Json::object();
  for (const auto& [atom, value] : e) j[atom] = value ? 1 : 0;
  return j;
}

Json toJson(const MBValuation& val) {
  Json j;
  if (val.algebra) j["algebra"] = toJson(*val.algebra);
  j["mode"] = to_string(val.mode);
  Json atoms = Json::object();
  for (const auto& [a, x] : val.atomValues) atoms[a] = toJson(x);
  j["atom_values"] = atoms;
  Json acts = Json::object();
  for (const auto& [k, h] : val.actValues) acts[k] = toJson(h);
  j["act_values"] = acts;
  Json gens = Json::object();
  for (const auto& [force, perAtom] : val.generators) {
    Json g = Json::object();
    for (const auto& [a, h] : perAtom) g[a] = toJson(h);
    gens[force] = g;
  }
  j["generators"] = gens;
  Json sigs = Json::object();
  for (const auto& [force, h] : val.signatures) sigs[force] = toJson(h);
  j["signatures"] = sigs;
  return j;
}

MBValuation valuationFromJson(const Json& j) {
  MBValuation val;
  val.algebra = &algebraFromJson(field(j, "algebra"));
  const AlgebraSpec& algebra = *val.algebra;
  if (j.contains("mode")) {
    auto mode = parseMode(j.at("mode").get<std::string>());
    if (!mode) bad("mode must be free, pointwise or connective");
    val.mode = *mode;
  }
  if (j.contains("atom_values")) {
    for (const auto& [a, x] : j.at("atom_values").items()) val.atomValues.emplace(a, elementFromJson(algebra, x));
  }
  if (j.contains("act_values")) {
    for (const auto& [k, h] : j.at("act_values").items()) {
      // Keys are re-printed so that any equivalent spelling finds its act.
      std::string key = k;
      try {
        key = print(parseFormula(k));
      } catch (const ParseError&) {
      }
      val.actValues.emplace(key, hyperFromJson(algebra, h));
    }
  }
  if (j.contains("generators")) {
    for (const auto& [force, perAtom] : j.at("generators").items()) {
      for (const auto& [a, h] : perAtom.items()) val.generators[force].emplace(a, hyperFromJson(algebra, h));
    }
  }
  if (j.contains("signatures")) {
    for (const auto& [force, h] : j.at("signatures").items()) val.signatures.emplace(force, hyperFromJson(algebra, h));
  }
  return val;
}

Json toJson(const Witness& w) {
  if (const auto* e = std::get_if<AtomValuation2>(&w)) return toJson(*e);
  return toJson(std::get<MBValuation>(w));
}

Json toJson(const OppositionCases& c) {
  Json cases = Json::array();
  if (c.incompatible) cases.push_back("case1");
  if (c.negAboveSwap) cases.push_back("case2");
  if (c.negBelowSwap) cases.push_back("case3");
  return Json{{"cases", cases}, {"inf", toJson(c.infWitness)}, {"sup", toJson(c.supWitness)}};
}

Json toJson(const SquareReport& r) {
  return Json{{"holds", r.holds},
              {"relations",
               {{"contrary", {{"holds", r.contrary}, {"inf", toJson(r.contraryInf)}}},
                {"contradictory",
                 {{"holds", r.contradictory},
                  {"inf", toJson(r.contradictoryInf)},
                  {"sup", toJson(r.contradictorySup)}}},
                {"subcontrary", {{"holds", r.subcontrary}, {"sup", toJson(r.subcontrarySup)}}},
                {"subaltern", {{"holds", r.subalternLeft && r.subalternRight},
                               {"left", r.subalternLeft},
                               {"right", r.subalternRight}}}}}};
}

namespace {

Json relationJson(const Relation& r) {
  Json j{{"holds", r.holds}};
  if (r.witness) j["witness"] = toJson(*r.witness);
  return j;
}

Json lawJson(const LawReport& law) {
  Json j{{"formula", law.formula}, {"values", law.values}, {"designated", law.designatedEverywhere}};
  if (law.witness) j["witness"] = toJson(*law.witness);
  return j;
}

}  // namespace

Json toJson(const OppositionReport& r) {
  Json j{{"square_holds", r.squareHolds},
         {"criterion", relationJson(r.criterion)},
         {"relations",
          {{"contrary", relationJson(r.contrary)},
           {"contradictory", relationJson(r.contradictory)},
           {"subcontrary", relationJson(r.subcontrary)},
           {"subaltern_left", relationJson(r.subalternLeft)},
           {"subaltern_right", relationJson(r.subalternRight)}}},
         {"laws",
          {{"tertium_non_datur", lawJson(r.laws.tertiumNonDatur)},
           {"law_of_contrary", lawJson(r.laws.lawOfContrary)},
           {"coincide", r.laws.coincide}}}};
  if (r.hyperReport) j["figure"] = toJson(*r.hyperReport);
  return j;
}

}  // namespace illoc
