#include <doctest.h>

#include <random>

#include "seed.hpp"
#include "illoc/error.hpp"
#include "illoc/matrix_mb.hpp"
#include "oracle/table_oracle.hpp"

using namespace illoc;

namespace {

const AlgebraSpec& k1() { return AlgebraSpec::make({"alpha"}); }
const AlgebraSpec& k2() { return AlgebraSpec::make({"alpha", "beta"}); }

HyperValue hv(std::uint32_t u, std::uint32_t v, const AlgebraSpec& b = k2()) {
  return HyperValue(b.fromMask(u), b.fromMask(v));
}
HyperValue star(std::uint32_t c, const AlgebraSpec& b = k2()) { return standard(b.fromMask(c)); }

std::vector<HyperValue> normals(const AlgebraSpec& b) {
  std::vector<HyperValue> out;
  for (const auto& u : b.enumerate())
    for (const auto& v : b.enumerate()) out.emplace_back(u, v);
  return out;
}

SemanticKind kindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SemanticError& e) {
    return e.kind();
  }
  return SemanticKind::InvalidArgument;
}

MBSpace spaceOf(MBMode mode, const AlgebraSpec& b = k2()) {
  MBSpace s;
  s.algebra = &b;
  s.mode = mode;
  return s;
}

Formula randomFormula(std::mt19937& rng, int depth, bool forceFree) {
  static const char* atoms[] = {"p", "q"};
  static const char* forces[] = {"f", "g"};
  int choices = forceFree ? 5 : 7;
  switch (depth == 0 ? 0 : rng() % choices) {
    case 0: return Formula::atom(atoms[rng() % 2]);
    case 1: return Formula::negation(randomFormula(rng, depth - 1, forceFree));
    case 2: return Formula::conjunction(randomFormula(rng, depth - 1, forceFree), randomFormula(rng, depth - 1, forceFree));
    case 3: return Formula::disjunction(randomFormula(rng, depth - 1, forceFree), randomFormula(rng, depth - 1, forceFree));
    case 4: return Formula::implication(randomFormula(rng, depth - 1, forceFree), randomFormula(rng, depth - 1, forceFree));
    default: return Formula::force(forces[rng() % 2], randomFormula(rng, depth - 1, false));
  }
}

const char* kFormulas[] = {
    "[f](p) -> p",
    "~[f](p) -> ~p",
    "[f](p & q) -> ([f](p) & [f](q))",
    "([f](p) | [f](q)) -> [f](p | q)",
    "[f](p -> q) -> ([f](p) -> [f](q))",
};

}  // namespace

TEST_CASE("connective examples") {
  CHECK(mbOr(hv(1, 0), hv(2, 0)) == star(0));
  CHECK(mbImp(hv(1, 2), star(0)) == star(3));
  CHECK(mbAnd(hv(1, 0), hv(2, 0)) == hv(3, 0));
  CHECK(mbAnd(hv(1, 0), star(2)) == hv(1, 0));
  CHECK(mbOr(hv(1, 0), star(2)) == star(2));
  CHECK(mbNeg(hv(1, 2)) == hv(2, 1));
}

TEST_CASE("connectives agree with B on standard values and with the table oracle") {
  const auto& b = k2();
  oracle::Algebra ob{2};
  for (const auto& x : b.enumerate())
    for (const auto& y : b.enumerate()) {
      CHECK(mbAnd(standard(x), standard(y)) == standard(meet(x, y)));
      CHECK(mbOr(standard(x), standard(y)) == standard(join(x, y)));
      CHECK(mbImp(standard(x), standard(y)) == standard(join(complement(x), y)));
    }
  for (const auto& x : normals(b)) {
    CHECK(mbImp(x, x) == star(3));
    auto tx = oracle::fromHyper(ob, x);
    for (const auto& y : normals(b)) {
      auto ty = oracle::fromHyper(ob, y);
      CHECK(oracle::fromHyper(ob, mbAnd(x, y)) == oracle::bAnd(tx, ty));
      CHECK(oracle::fromHyper(ob, mbOr(x, y)) == oracle::bOr(tx, ty));
      CHECK(oracle::fromHyper(ob, mbImp(x, y)) == oracle::bImp(ob, tx, ty));
    }
  }
}

TEST_CASE("evaluation examples") {
  const auto& b = k2();
  MBValuation free{.algebra = &b, .mode = MBMode::Free};
  free.atomValues.emplace("p", b.fromMask(1));
  free.actValues.emplace("[think](p)", hv(2, 3));
  auto out = evalMB(parseFormula("[think](p) -> p"), free);
  CHECK(out.value == star(3));
  CHECK(out.admissible);
  CHECK(out.subvalues.at("[think](p)") == hv(2, 3));

  MBValuation pw{.algebra = &b, .mode = MBMode::Pointwise};
  pw.generators["f"].emplace("p", hv(1, 3));
  CHECK(evalMB(parseFormula("[f](~p)"), pw).value == hv(3, 1));

  MBValuation nested{.algebra = &b, .mode = MBMode::Pointwise};
  nested.generators["b"].emplace("p", hv(2, 1));
  nested.signatures.emplace("a", hv(1, 2));
  CHECK(evalMB(parseFormula("[a]([b](p))"), nested).value == mbImp(hv(1, 2), hv(2, 1)));
}

TEST_CASE("evaluation errors") {
  const auto& b = k2();
  MBValuation free{.algebra = &b, .mode = MBMode::Free};
  free.atomValues.emplace("p", b.top());
  CHECK(kindOf([&] { evalMB(parseFormula("[f](p)"), free); }) == SemanticKind::MissingAssignment);
  free.actValues.emplace("[f](p)", star(1));
  CHECK(kindOf([&] { evalMB(parseFormula("[f](p)"), free); }) == SemanticKind::StandardAssignment);
  CHECK(kindOf([&] { evalMB(parseFormula("q"), free); }) == SemanticKind::MissingAtom);

  MBValuation pw{.algebra = &b, .mode = MBMode::Pointwise};
  CHECK(kindOf([&] { evalMB(parseFormula("[f](p)"), pw); }) == SemanticKind::MissingAssignment);
  pw.generators["f"].emplace("p", hv(1, 0));
  CHECK(kindOf([&] { evalMB(parseFormula("[g]([f](p))"), pw); }) == SemanticKind::MissingAssignment);

  ParseResult cyclic = parse("act x = [promise](~x); x");
  CHECK(kindOf([&] { evalMB(*cyclic.formula, pw, cyclic.definitions); }) == SemanticKind::CyclicAct);
}

TEST_CASE("admissibility flags standard act values") {
  const auto& b = k2();
  MBValuation pw{.algebra = &b, .mode = MBMode::Pointwise};
  pw.generators["f"].emplace("p", hv(1, 0));
  // pinf(<{a},{}>, <{},{a}>) is *0.
  auto out = evalMB(parseFormula("[f](p & ~p)"), pw);
  CHECK(out.value == star(0));
  CHECK_FALSE(out.admissible);
  CHECK(evalMB(parseFormula("[f](p)"), pw).admissible);
}

TEST_CASE("evaluation agrees with the table oracle on random formulas") {
  std::mt19937 rng(testSeed(77));
  const auto& b = k2();
  auto cands = nonstandardValues(b);
  for (MBMode mode : {MBMode::Free, MBMode::Pointwise, MBMode::Connective}) {
    for (int i = 0; i < 400; ++i) {
      Formula f = randomFormula(rng, 4, false);
      MBSpace space = spaceOf(mode);
      space.admissibleOnly = false;
      ValuationSpace vs({f}, space);
      for (int j = 0; j < 5; ++j) {
        MBValuation v = vs.at(rng() % vs.size());
        EvalOutcome out = evalMB(f, v);
        bool admissible = true;
        auto t = oracle::replay(f, v, &admissible);
        CHECK_MESSAGE(oracle::fromHyper(oracle::Algebra{2}, out.value) == t, print(f));
        CHECK(out.admissible == admissible);
      }
    }
  }
  CHECK(cands.size() == 12);
}

TEST_CASE("force-free formulas evaluate as in B") {
  std::mt19937 rng(testSeed(5));
  const auto& b = k2();
  for (int i = 0; i < 200; ++i) {
    Formula f = randomFormula(rng, 4, true);
    for (MBMode mode : {MBMode::Free, MBMode::Pointwise, MBMode::Connective}) {
      for (const auto& x : b.enumerate())
        for (const auto& y : b.enumerate()) {
          MBValuation v{.algebra = &b, .mode = mode};
          v.atomValues.emplace("p", x);
          v.atomValues.emplace("q", y);
          // Classical evaluation bit by bit.
          std::uint32_t mask = 0;
          for (std::size_t bit = 0; bit < 2; ++bit) {
            std::function<bool(const Formula&)> cl = [&](const Formula& g) -> bool {
              switch (g.kind()) {
                case Formula::Kind::Atom: return (g.name() == "p" ? x : y).contains(bit);
                case Formula::Kind::Not: return !cl(g.operand());
                case Formula::Kind::And: return cl(g.left()) && cl(g.right());
                case Formula::Kind::Or: return cl(g.left()) || cl(g.right());
                default: return !cl(g.left()) || cl(g.right());
              }
            };
            if (cl(f)) mask |= 1U << bit;
          }
          CHECK(evalMB(f, v).value == standard(b.fromMask(mask)));
        }
    }
  }
}

TEST_CASE("content negation law in pointwise mode") {
  std::mt19937 rng(testSeed(11));
  const auto& b = k2();
  auto cands = nonstandardValues(b);
  for (int i = 0; i < 300; ++i) {
    Formula phi = randomFormula(rng, 3, true);
    MBValuation v{.algebra = &b, .mode = MBMode::Pointwise};
    v.generators["f"].emplace("p", cands[rng() % cands.size()]);
    v.generators["f"].emplace("q", cands[rng() % cands.size()]);
    CHECK(evalMB(Formula::force("f", Formula::negation(phi)), v).value ==
          contentNeg(evalMB(Formula::force("f", phi), v).value));
  }
}

TEST_CASE("valuation space layout") {
  Formula f = parseFormula("[g]([f](p & q)) -> r");
  MBSpace s = spaceOf(MBMode::Pointwise);
  ValuationSpace vs({f}, s);
  CHECK(vs.atoms() == std::vector<std::string>{"r"});
  CHECK(vs.generatorSlots() == std::vector<std::pair<std::string, std::string>>{{"f", "p"}, {"f", "q"}});
  CHECK(vs.signatureForces() == std::vector<std::string>{"g"});
  CHECK(vs.size() == 4u * 12 * 12 * 12);
  MBValuation first = vs.at(0);
  CHECK(first.atomValues.at("r") == k2().bottom());
  CHECK(first.signatures.at("g") == vs.candidates().front());
  MBValuation second = vs.at(1);
  CHECK(second.signatures.at("g") == vs.candidates()[1]);

  ValuationSpace fs({parseFormula("[f](p) & [f](p) | [f](q)")}, spaceOf(MBMode::Free));
  CHECK(fs.actKeys() == std::vector<std::string>{"[f](p)", "[f](q)"});
  CHECK(fs.atoms().empty());
}

TEST_CASE("tautology statuses match the table oracle") {
  for (const auto* algebra : {&k1(), &k2()}) {
    for (MBMode mode : {MBMode::Free, MBMode::Pointwise, MBMode::Connective}) {
      for (const char* text : kFormulas) {
        Formula f = parseFormula(text);
        auto got = isTautologyMB(f, spaceOf(mode, *algebra));
        auto want = oracle::tautology(f, static_cast<unsigned>(algebra->size()), mode);
        CHECK_MESSAGE(got.tautology == want.tautology, text, " ", to_string(mode), " k=", algebra->size());
        CHECK(got.spaceSize == want.points);
        if (!got.tautology) {
          REQUIRE(got.witness);
          bool admissible = false;
          auto t = oracle::replay(f, *got.witness, &admissible);
          CHECK(admissible);
          CHECK_FALSE(t == oracle::constant(oracle::Algebra{static_cast<unsigned>(algebra->size())}, algebra->topMask()));
          CHECK(oracle::fromHyper(oracle::Algebra{static_cast<unsigned>(algebra->size())}, *got.value) == t);
        }
      }
    }
  }
}

TEST_CASE("frozen status table at k=2") {
  // tautology per mode: free, pointwise, connective
  const bool expected[5][3] = {
      {true, true, true}, {true, true, true}, {false, true, true}, {false, true, true}, {false, false, true}};
  for (int i = 0; i < 5; ++i) {
    int m = 0;
    for (MBMode mode : {MBMode::Free, MBMode::Pointwise, MBMode::Connective}) {
      CHECK_MESSAGE(isTautologyMB(parseFormula(kFormulas[i]), spaceOf(mode)).tautology == expected[i][m],
                    kFormulas[i], " ", to_string(mode));
      ++m;
    }
  }
  // At k=1 only two nonstandard values exist and distribution over -> survives pointwise.
  CHECK(isTautologyMB(parseFormula(kFormulas[4]), spaceOf(MBMode::Pointwise, k1())).tautology);
}

TEST_CASE("hand-computed witnesses refute") {
  const auto& b = k2();
  MBValuation free{.algebra = &b, .mode = MBMode::Free};
  free.actValues.emplace("[f](p & q)", hv(3, 1));
  free.actValues.emplace("[f](p)", hv(0, 2));
  free.actValues.emplace("[f](q)", hv(0, 2));
  auto out = evalMB(parseFormula(kFormulas[2]), free);
  CHECK(out.admissible);
  CHECK(out.value == hv(0, 2));

  MBValuation pw{.algebra = &b, .mode = MBMode::Pointwise};
  pw.generators["f"].emplace("p", hv(1, 3));
  pw.generators["f"].emplace("q", hv(0, 1));
  auto out14 = evalMB(parseFormula(kFormulas[4]), pw);
  CHECK(out14.admissible);
  CHECK(out14.value == hv(2, 3));
}

TEST_CASE("statuses are stable under renaming") {
  for (MBMode mode : {MBMode::Free, MBMode::Pointwise, MBMode::Connective}) {
    for (const char* text : kFormulas) {
      std::string renamed = text;
      for (auto& c : renamed) {
        if (c == 'p') c = 'u';
        else if (c == 'q') c = 'a';
        else if (c == 'f') c = 'z';
      }
      CHECK(isTautologyMB(parseFormula(text), spaceOf(mode)).tautology ==
            isTautologyMB(parseFormula(renamed), spaceOf(mode)).tautology);
    }
  }
}

TEST_CASE("idempotence fails in every mode") {
  for (MBMode mode : {MBMode::Free, MBMode::Pointwise, MBMode::Connective}) {
    auto w = findIdempotenceCounterexample(spaceOf(mode));
    REQUIRE(w);
    CHECK_FALSE(equivalent(w->first, w->second));
    CHECK(evalMB(parseFormula("[f]([f](p))"), w->valuation).value == w->first);
    CHECK(evalMB(parseFormula("[f](p)"), w->valuation).value == w->second);
  }
}

TEST_CASE("negation swap") {
  auto w = findNegSwapCounterexample(spaceOf(MBMode::Pointwise));
  REQUIRE(w);
  CHECK_FALSE(equivalent(w->first, w->second));
  CHECK(hneg(hv(1, 0)) == hv(2, 3));
  CHECK(contentNeg(hv(1, 0)) == hv(0, 1));

  MBSpace restricted = spaceOf(MBMode::Pointwise);
  restricted.candidateFilter = [](const HyperValue& h) { return h.onFalse() == complement(h.onTrue()); };
  CHECK_FALSE(findNegSwapCounterexample(restricted));
}

TEST_CASE("distinguishing formulas") {
  auto w = findDistinguishing(parseFormula("[f](p)"), parseFormula("[f](~~p)"), spaceOf(MBMode::Pointwise));
  CHECK_FALSE(w);
  auto d = findDistinguishing(parseFormula("[f](p)"), parseFormula("[f](q)"), spaceOf(MBMode::Pointwise));
  CHECK(d);
}

TEST_CASE("cyclic acts") {
  ParseResult r = parse("act x = [promise](~x);");
  const auto& b = k2();
  MBValuation v{.algebra = &b, .mode = MBMode::Pointwise};
  v.signatures.emplace("promise", hv(1, 2));
  for (const auto& seed : normals(b)) CHECK(unfoldCyclic(r.definitions, "x", 0, seed, v) == seed);
  CHECK(print(unfoldFormula(r.definitions, "x", 2)) == "[promise](~[promise](~x))");
  // Standard seeds are absorbed by the first step of the implication.
  CHECK(unfoldCyclic(r.definitions, "x", 4, star(0), v) == star(3));
  CHECK(unfoldCyclic(r.definitions, "x", 4, star(3), v) == star(3));
  CHECK(unfoldCyclic(r.definitions, "x", 4, hv(1, 0), v) == hv(3, 1));
  CHECK(unfoldCyclic(r.definitions, "x", 4, hv(0, 1), v) == star(3));

  ParseResult acyclic = parse("act y = [promise](p);");
  CHECK(kindOf([&] { unfoldCyclic(acyclic.definitions, "y", 2, star(0), v); }) == SemanticKind::NotCyclic);
  CHECK(kindOf([&] { unfoldFormula(acyclic.definitions, "y", 2); }) == SemanticKind::NotCyclic);
}

TEST_CASE("acts defined acyclically are inlined") {
  ParseResult r = parse("act y = [f](p); y -> p");
  auto res = isTautologyMB(*r.formula, spaceOf(MBMode::Pointwise), r.definitions);
  CHECK(res.tautology);
}

TEST_CASE("budget") {
  MBSpace s = spaceOf(MBMode::Free);
  s.search.budget = 1000;
  CHECK_THROWS_AS(isTautologyMB(parseFormula(kFormulas[4]), s), BudgetExceeded);
}

TEST_CASE("mode names") {
  for (MBMode m : {MBMode::Free, MBMode::Pointwise, MBMode::Connective}) CHECK(parseMode(to_string(m)) == m);
  CHECK_FALSE(parseMode("lazy"));
}
