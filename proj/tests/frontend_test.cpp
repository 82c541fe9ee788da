#include <doctest.h>

#include "support.hpp"

using namespace cplusmt;

namespace {

const char* kToyIncrement = R"(
:- constants
   c :: additiveFluent(real);
   P :: simpleFluent(boolean);
   a :: action(boolean);
   Dur :: action(realNonNeg).
:- variables t :: realNonNeg.
a increments c by 2*t if Dur=t.
inertial P.
exogenous a, Dur.
)";

int countLaws(const ActionDescription& d, LawKind kind) {
  int n = 0;
  for (const auto& law : d.laws) n += law.kind == kind;
  return n;
}

}  // namespace

TEST_CASE("parse: empty file gives an empty description") {
  ActionDescription d = parse("");
  CHECK(d.statements.empty());
  CHECK(d.constants.empty());
  CHECK_FALSE(d.query.present());
}

TEST_CASE("parse: exogenous list yields one abbreviation node with two constants") {
  ActionDescription d = parse(
      ":- constants Time :: simpleFluent(realNonNeg); Dur :: action(realNonNeg).\n"
      "exogenous Time, Dur.");
  REQUIRE(d.statements.size() == 1);
  CHECK(d.statements[0].kind == Statement::Kind::Exogenous);
  CHECK(d.statements[0].constants.size() == 2);
}

TEST_CASE("parse: increment law node") {
  ActionDescription d = parse(
      ":- sorts jet = {J1, J2}; axis = {X, Y, Z}.\n"
      ":- constants Vel(axis) :: additiveFluent(real);"
      "   Fire(jet) :: action(boolean); Force(jet, axis) :: action(real);"
      "   Dur :: action(realNonNeg).\n"
      ":- variables j :: jet; ax :: axis; n :: real; t :: realNonNeg.\n"
      ":- parameters Mass = 2.\n"
      "Fire(j) increments Vel(ax) by (n/Mass)*t if Force(j,ax)=n & Dur=t.");
  REQUIRE(d.statements.size() == 1);
  const Statement& st = d.statements[0];
  CHECK(st.kind == Statement::Kind::Increments);
  CHECK(st.trigger->name == "Fire");
  CHECK(st.target->name == "Vel");
  CHECK(printTerm(st.amount) == "(n/Mass)*t");
}

TEST_CASE("parse: errors carry line and column") {
  try {
    parse(":- constants Speed :: simpleFluent(realNonNeg).\ncaused Speed=v.", "f.cp");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.loc.line == 2);
    CHECK(std::string(e.what()).find("unknown name 'v'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse(":- constants X :: simpleFluent(boolean); X :: action(boolean)."),
                  ParseError);
  CHECK_THROWS_AS(parse(":- sorts s = {A, A}."), ParseError);
  CHECK_THROWS_AS(parse("caused ."), ParseError);
}

TEST_CASE("desugar: constraint after becomes a falsum-headed fluent dynamic law") {
  ActionDescription d = desugar(parse(
      ":- constants Time :: simpleFluent(realNonNeg); Dur :: action(realNonNeg).\n"
      ":- variables t, t1 :: realNonNeg.\n"
      "constraint Time=t+t1 after Time=t & Dur=t1."));
  REQUIRE(d.laws.size() == 1);
  const CausalLaw& law = d.laws[0];
  CHECK(law.kind == LawKind::FluentDynamic);
  CHECK(isFalsum(law.head));
  CHECK(printLaw(law) == "caused false if -(Time=t + t1) after Time=t & Dur=t1");
}

TEST_CASE("desugar: inertial and exogenous expansions") {
  ActionDescription d = desugar(parse(
      ":- constants Speed, Time :: simpleFluent(realNonNeg); a :: action(boolean).\n"
      "inertial Speed. exogenous Time. exogenous a."));
  REQUIRE(d.laws.size() == 3);
  CHECK(d.laws[0].kind == LawKind::FluentDynamic);
  CHECK(printLaw(d.laws[0]) == "caused Speed=v$0 if Speed=v$0 after Speed=v$0");
  CHECK(d.laws[1].kind == LawKind::Static);
  CHECK(printLaw(d.laws[1]) == "caused Time=v$1 if Time=v$1");
  CHECK(d.laws[2].kind == LawKind::ActionDynamic);

  CHECK_THROWS_AS(
      desugar(parse(":- constants a :: action(boolean).\ninertial a.")), ParseError);
}

TEST_CASE("desugar: causes splits heads by constant kind") {
  ActionDescription d = desugar(parse(
      ":- sorts tap = {T1}.\n"
      ":- constants On(tap) :: simpleFluent(boolean);"
      "   TurnOn(tap) :: action(boolean); Dur :: action(realNonNeg).\n"
      ":- variables x :: tap.\n"
      "TurnOn(x) causes On(x) & Dur=0."));
  REQUIRE(d.laws.size() == 2);
  CHECK(d.laws[0].kind == LawKind::FluentDynamic);
  CHECK(printLaw(d.laws[0]) == "caused On(x) after TurnOn(x)");
  CHECK(d.laws[1].kind == LawKind::ActionDynamic);
  CHECK(printLaw(d.laws[1]) == "caused Dur=0 if TurnOn(x)");
}

TEST_CASE("desugar: always becomes an action dynamic constraint") {
  ActionDescription d = desugar(parse(
      ":- constants F :: action(real); a :: action(boolean).\n"
      "always F=0 <-> -a."));
  REQUIRE(d.laws.size() == 1);
  CHECK(d.laws[0].kind == LawKind::ActionDynamic);
  CHECK(isFalsum(d.laws[0].head));
}

TEST_CASE("desugar: definiteness violations are rejected") {
  // Non-atomic head.
  CHECK_THROWS_AS(desugar(parse(":- constants P, Q :: simpleFluent(boolean).\n"
                                "caused P & Q if P.")),
                  ParseError);
  // Statically determined fluent in a fluent dynamic head.
  CHECK_THROWS_AS(desugar(parse(":- constants S :: sdFluent(boolean); a :: action(boolean).\n"
                                "caused S if true after a.")),
                  ParseError);
  // Action constant in a static law body.
  CHECK_THROWS_AS(desugar(parse(":- constants P :: simpleFluent(boolean); a :: action(boolean).\n"
                                "caused P if a.")),
                  ParseError);
  // Fluent or action constants in a head value.
  CHECK_THROWS_AS(desugar(parse(":- constants P, Q :: simpleFluent(real).\n"
                                "caused P=Q if true.")),
                  ParseError);
}

TEST_CASE("desugar and expandIncrements are idempotent") {
  ActionDescription d = desugar(parse(kToyIncrement));
  ActionDescription d2 = desugar(d);
  CHECK(d2.laws.size() == d.laws.size());
  ActionDescription e = expandIncrements(d);
  ActionDescription e2 = expandIncrements(e);
  CHECK(e2.laws.size() == e.laws.size());
  CHECK(e2.constants.size() == e.constants.size());
}

TEST_CASE("expandIncrements: no increment laws is the identity") {
  ActionDescription d = desugar(parse(
      ":- constants P :: simpleFluent(boolean); a :: action(boolean).\n"
      "inertial P. exogenous a."));
  ActionDescription e = expandIncrements(d);
  CHECK(e.laws.size() == d.laws.size());
  CHECK(e.constants.size() == d.constants.size());
}

TEST_CASE("expandIncrements: contribution constant plus three law kinds") {
  ActionDescription e = expandIncrements(desugar(parse(kToyIncrement)));
  CHECK(e.increments.empty());
  REQUIRE(e.findConstant("Contr(a,c)") != nullptr);
  CHECK(e.findConstant("Contr(a,c)")->kind == ConstKind::Action);
  // (a) caused Contr(a,c)=2*t if a & Dur=t
  // (b) caused Contr(a,c)=0 if -a
  // (c) caused c = v + w after c=v & Contr(a,c)=w
  int contrLaws = 0;
  bool sawDefaultZero = false, sawSum = false;
  for (const auto& law : e.laws) {
    std::string text = printLaw(law);
    if (text.find("Contr(a,c)") == std::string::npos) continue;
    ++contrLaws;
    sawDefaultZero |= text == "caused Contr(a,c)=0 if -a";
    sawSum |= law.kind == LawKind::FluentDynamic && !isFalsum(law.head) &&
              law.head->lhs->name == "c";
  }
  CHECK(contrLaws == 3);
  CHECK(sawDefaultZero);
  CHECK(sawSum);
}

TEST_CASE("expandIncrements: water tank sums one contribution per trigger") {
  ActionDescription e = expandIncrements(
      desugar(parse(testsupport::readFile(testsupport::domainPath("watertank.cp")),
                    "watertank.cp")));
  REQUIRE(e.findConstant("Contr(On(Tap1),Level)") != nullptr);
  REQUIRE(e.findConstant("Contr(On(Tap2),Level)") != nullptr);
  REQUIRE(e.findConstant("Contr(Leaking,Level)") != nullptr);
  for (const auto& law : e.laws) {
    if (law.kind != LawKind::FluentDynamic || isFalsum(law.head)) continue;
    if (law.head->lhs->kind == Term::Kind::Apply && law.head->lhs->name == "Level") {
      // Level = v + w0 + w1 + w2.
      CHECK(printTerm(law.head->rhs) == "v$sum + w$0 + w$1 + w$2");
      return;
    }
  }
  FAIL("summation law not found");
}

TEST_CASE("expandIncrements: rejects bad targets and conditions") {
  // Non-numeric target.
  CHECK_THROWS_AS(expandIncrements(desugar(parse(
                      ":- constants c :: simpleFluent(boolean); a :: action(boolean).\n"
                      "a increments c by 1."))),
                  ParseError);
  // Additive fluent in a fluent dynamic head.
  CHECK_THROWS_AS(expandIncrements(desugar(parse(
                      ":- constants c :: additiveFluent(real); a :: action(boolean).\n"
                      "a increments c by 1. inertial c."))),
                  ParseError);
  // Boolean action constant inside the condition.
  CHECK_THROWS_AS(expandIncrements(desugar(parse(
                      ":- constants c :: additiveFluent(real); a, b :: action(boolean).\n"
                      "a increments c by 1 if b."))),
                  ParseError);
  // Process fluent inside a process-triggered condition.
  CHECK_THROWS_AS(expandIncrements(desugar(parse(
                      ":- constants c :: additiveFluent(real);"
                      "   P, Q :: simpleFluent(boolean).\n"
                      "P increments c by 1. Q increments c by 2 if P."))),
                  ParseError);
}

TEST_CASE("groundLaws: finite sort variables are expanded, real ones kept") {
  LoadedDomain spacecraft = loadDomain(
      testsupport::readFile(testsupport::domainPath("spacecraft.cp")), "spacecraft.cp");
  const ActionDescription& g = spacecraft.ground;
  // Pos integration law: one instance per axis, still with real variables.
  int posLaws = 0;
  for (const auto& law : g.laws)
    if (!isFalsum(law.head) && law.head->lhs->kind == Term::Kind::Const &&
        g.groundSig.at(law.head->lhs->constId).baseName == "Pos" &&
        law.kind == LawKind::FluentDynamic)
      ++posLaws;
  CHECK(posLaws == 3);
  // The always-constraint grounds out over jets and axes: 6 instances.
  int alwaysLaws = 0;
  for (const auto& law : g.laws)
    if (isFalsum(law.head) && law.kind == LawKind::ActionDynamic) ++alwaysLaws;
  CHECK(alwaysLaws == 6);
  // Parameters are gone: Mass appears nowhere.
  for (const auto& law : g.laws) {
    std::vector<TermPtr> leftover;
    CHECK(printLaw(law, &g.groundSig).find("Mass") == std::string::npos);
  }
  // Grounding an already-ground description is the identity.
  ActionDescription again = groundLaws(g);
  CHECK(again.laws.size() == g.laws.size());
}

TEST_CASE("groundLaws: undefined parameter instance is an error") {
  CHECK_THROWS_AS(loadDomain(":- sorts tap = {T1, T2}.\n"
                             ":- constants L :: simpleFluent(real).\n"
                             ":- variables x :: tap.\n"
                             ":- parameters W(T1) = 2.\n"
                             "caused L=W(x) if L=W(x)."),
                  ParseError);
}

TEST_CASE("parse-print-parse round trip is the identity on the corpus") {
  for (const char* name : {"car.cp", "spacecraft.cp", "watertank.cp"}) {
    ActionDescription d1 = parse(testsupport::readFile(testsupport::domainPath(name)), name);
    std::string printed = printDescription(d1);
    ActionDescription d2 = parse(printed, name);
    std::string printed2 = printDescription(d2);
    CHECK(printed == printed2);
    REQUIRE(d1.statements.size() == d2.statements.size());
    for (std::size_t i = 0; i < d1.statements.size(); ++i) {
      const Statement& a = d1.statements[i];
      const Statement& b = d2.statements[i];
      CHECK(a.kind == b.kind);
      if (a.head) CHECK(formulaEquals(a.head, b.head));
      if (a.ifPart) CHECK(formulaEquals(a.ifPart, b.ifPart));
      if (a.afterPart) {
        REQUIRE(b.afterPart);
        CHECK(formulaEquals(a.afterPart, b.afterPart));
      }
      if (a.trigger) CHECK(termEquals(a.trigger, b.trigger));
      if (a.amount) CHECK(termEquals(a.amount, b.amount));
    }
  }
}

TEST_CASE("car description parses into the expected law multiset") {
  ActionDescription d =
      parse(testsupport::readFile(testsupport::domainPath("car.cp")), "car.cp");
  // Three caused laws, two constraints, one inertial, one exogenous list.
  int caused = 0, constraint = 0, inertial = 0, exogenous = 0;
  for (const auto& st : d.statements) {
    caused += st.kind == Statement::Kind::Caused;
    constraint += st.kind == Statement::Kind::Constraint;
    inertial += st.kind == Statement::Kind::Inertial;
    exogenous += st.kind == Statement::Kind::Exogenous;
  }
  CHECK(caused == 3);
  CHECK(constraint == 2);
  CHECK(inertial == 1);
  CHECK(exogenous == 1);

  ActionDescription ds = desugar(d);
  CHECK(countLaws(ds, LawKind::FluentDynamic) == 5);  // 3 effects + inertia + time
  CHECK(countLaws(ds, LawKind::Static) == 2);         // speed cap + exogenous Time
  CHECK(countLaws(ds, LawKind::ActionDynamic) == 3);  // exogenous actions
}

TEST_CASE("query section parses labels and ranges") {
  ActionDescription d = parse(
      ":- constants Speed :: simpleFluent(realNonNeg); Dur :: action(realNonNeg).\n"
      ":- query maxstep :: 0..5; 0: Speed=0; each: Dur=1; maxstep: Speed=4.");
  CHECK(d.query.minStep == 0);
  CHECK(d.query.maxStep == 5);
  REQUIRE(d.query.items.size() == 3);
  CHECK(d.query.items[0].at == QuerySpec::Item::At::Step);
  CHECK(d.query.items[1].at == QuerySpec::Item::At::Each);
  CHECK(d.query.items[2].at == QuerySpec::Item::At::MaxStep);
  // Variables in query constraints are rejected at grounding.
  CHECK_THROWS_AS(loadDomain(":- constants Speed :: simpleFluent(realNonNeg).\n"
                             ":- variables v :: realNonNeg.\n"
                             ":- query maxstep :: 1; 0: Speed=v."),
                  ParseError);
}
