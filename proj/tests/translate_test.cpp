#include <doctest.h>

#include "support.hpp"

using namespace cplusmt;

namespace {

LoadedDomain carDomain() {
  return loadDomain(testsupport::readFile(testsupport::domainPath("car.cp")), "car.cp");
}

int countRulesWithHead(const TimedProgram& p, const std::string& headConst) {
  int n = 0;
  for (const auto& r : p.rules)
    if (!isFalsum(r.head) && p.sig.at(r.head->lhs->constId).display == headConst) ++n;
  return n;
}

}  // namespace

TEST_CASE("translate: rule counts follow the step schema") {
  LoadedDomain car = carDomain();
  // car: 2 static, 3 action dynamic (exogenous actions), 5 fluent dynamic.
  for (int m : {0, 1, 3, 5}) {
    TimedProgram p = translate(car.ground, m);
    CHECK(static_cast<int>(p.rules.size()) == (m + 1) * 2 + m * 3 + m * 5);
  }
  CHECK_THROWS_AS(translate(car.ground, -1), Error);
}

TEST_CASE("translate: acceleration law at step 0 takes the normalized form") {
  LoadedDomain car = carDomain();
  TimedProgram p = translate(car.ground, 1);
  bool found = false;
  for (const auto& r : p.rules) {
    if (isFalsum(r.head)) continue;
    if (p.sig.at(r.head->lhs->constId).display != "1:Speed") continue;
    std::string body = printFormula(r.body, &p.sig);
    if (body.find("0:Accelerate") == std::string::npos) continue;
    found = true;
    // Head value is a fresh variable defined by an equation in the body,
    // and the 'after' part is not double-negated.
    CHECK(r.head->rhs->kind == Term::Kind::Var);
    CHECK(body == "x$=v + 3*t & (0:Accelerate & 0:Speed=v & 0:Dur=t)");
  }
  CHECK(found);
}

TEST_CASE("translate: inertia keeps the double negation on the if part") {
  LoadedDomain car = carDomain();
  TimedProgram p = translate(car.ground, 1);
  bool found = false;
  for (const auto& r : p.rules) {
    std::string rule = printFormula(r.formula(), &p.sig);
    if (rule == "-(-(1:Speed=v$0)) & 0:Speed=v$0 -> 1:Speed=v$0") found = true;
  }
  CHECK(found);
}

TEST_CASE("translate: time constraint becomes a falsum rule over two steps") {
  LoadedDomain car = carDomain();
  TimedProgram p = translate(car.ground, 1);
  bool found = false;
  for (const auto& r : p.rules) {
    if (!isFalsum(r.head)) continue;
    std::string body = printFormula(r.body, &p.sig);
    if (body == "-(-(-(1:Time=t + t1))) & (0:Time=t & 0:Dur=t1)") found = true;
  }
  CHECK(found);
}

TEST_CASE("translate: m=0 has static rules only and sd-fluent intensional set") {
  ActionDescription d = groundLaws(expandIncrements(desugar(parse(
      ":- constants P :: simpleFluent(boolean); S :: sdFluent(boolean);"
      "   a :: action(boolean).\n"
      "caused S if P. caused -S if -P. inertial P. exogenous a."))));
  TimedProgram p = translate(d, 0);
  CHECK(p.rules.size() == 2);  // the two static S laws at step 0
  REQUIRE(p.intensional.size() == 1);
  CHECK(p.sig.at(p.intensional[0]).display == "0:S");
  TimedProgram forStates = programForStates(d);
  CHECK(forStates.intensional == p.intensional);
  CHECK(forStates.rules.size() == p.rules.size());
}

TEST_CASE("translate: the intensional list follows the transition-path reading") {
  LoadedDomain car = carDomain();
  TimedProgram p = translate(car.ground, 2);
  std::vector<std::string> names;
  for (int id : p.intensional) names.push_back(p.sig.at(id).display);
  // No step-0 simple fluents; actions at steps 0 and 1; fluents at 1 and 2.
  for (const char* absent : {"0:Speed", "0:Distance", "0:Time"})
    CHECK(std::find(names.begin(), names.end(), absent) == names.end());
  for (const char* present : {"0:Accelerate", "1:Accelerate", "0:Dur", "1:Dur", "1:Speed",
                              "2:Speed", "1:Time", "2:Time", "1:Distance", "2:Distance"})
    CHECK(std::find(names.begin(), names.end(), present) != names.end());
  // Actions do not exist at the final step.
  CHECK(p.sig.find("2:Accelerate") == -1);
  CHECK(p.sig.find("2:Speed") != -1);
}

TEST_CASE("translate: timed constants keep the base value sort") {
  LoadedDomain car = carDomain();
  TimedProgram p = translate(car.ground, 1);
  for (int id = 0; id < p.sig.size(); ++id) {
    const GroundConstant& c = p.sig.at(id);
    int base = c.baseId;
    CHECK(c.valueSort == car.ground.groundSig.at(base).valueSort);
    CHECK(c.step >= 0);
  }
}

TEST_CASE("states: car states satisfy the speed cap") {
  LoadedDomain car = carDomain();
  TimedProgram p = programForStates(car.ground);
  CompletedFormula f = eliminateDefinitionalVariables(toClarkNormalForm(p));
  bool capPresent = false;
  for (const auto& [label, part] : f.parts)
    capPresent |= printFormula(part, &p.sig) == "0:Speed<=4";
  CHECK(capPresent);
}

TEST_CASE("states: without static laws every fluent interpretation is a state") {
  ActionDescription d = groundLaws(expandIncrements(desugar(parse(
      ":- constants P, Q :: simpleFluent(boolean); a :: action(boolean).\n"
      "inertial P, Q. exogenous a."))));
  TimedProgram p = programForStates(d);
  CHECK(p.intensional.empty());
  FiniteTheory t = makeFiniteTheory(p);
  CHECK(stableModels(t).size() == 4);
}

TEST_CASE("dumpRules shows intensional header and one line per rule") {
  LoadedDomain car = carDomain();
  TimedProgram p = translate(car.ground, 1);
  std::string dump = dumpRules(p);
  CHECK(dump.find("% intensional:") != std::string::npos);
  CHECK(dump.find("1:Speed=x$ <- x$=v + 3*t") != std::string::npos);
  int lines = 0;
  for (char c : dump) lines += c == '\n';
  CHECK(lines == 2 + static_cast<int>(p.rules.size()));
}
