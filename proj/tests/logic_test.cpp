#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace cplusmt;
using testsupport::TheoryConfig;

namespace {

// Example-1-style signature: Speed0, Speed1, Duration (nonneg reals) and
// Accelerate (Boolean).
Signature carSignature() {
  Signature sig;
  for (const char* name : {"Speed0", "Speed1", "Duration"}) {
    GroundConstant c;
    c.display = name;
    c.baseName = name;
    c.valueSort = Sort::nonNegReal();
    sig.add(std::move(c));
  }
  GroundConstant acc;
  acc.display = "Accelerate";
  acc.baseName = "Accelerate";
  acc.valueSort = Sort::boolean();
  sig.add(std::move(acc));
  return sig;
}

}  // namespace

TEST_CASE("evaluate: equality of equal speeds holds") {
  Signature sig = carSignature();
  Interpretation interp(sig);
  interp.set(0, Value::ofNum(1));
  interp.set(1, Value::ofNum(1));
  interp.set(2, Value::ofNum(Rational(3, 2)));
  interp.set(3, Value::ofBool(false));
  CHECK(evaluate(fEq(tConst(1), tConst(0)), interp));
  CHECK_FALSE(evaluate(falsum(), interp));
}

TEST_CASE("evaluate: effect equation with exact rational arithmetic") {
  Signature sig = carSignature();
  Interpretation interp(sig);
  interp.set(0, Value::ofNum(1));
  interp.set(1, Value::ofNum(Rational(11, 2)));  // 5.5
  interp.set(2, Value::ofNum(Rational(3, 2)));   // 1.5
  interp.set(3, Value::ofBool(true));
  // Speed1 = Speed0 + 3*Duration
  FormulaPtr f = fEq(tConst(1), tArith(ArithOp::Add, tConst(0),
                                       tArith(ArithOp::Mul, tNum(3), tConst(2))));
  CHECK(evaluate(f, interp));
  interp.set(1, Value::ofNum(6));
  CHECK_FALSE(evaluate(f, interp));
}

TEST_CASE("evaluate: tolerance relaxes numeric atoms only") {
  Signature sig = carSignature();
  Interpretation interp(sig);
  interp.set(0, Value::ofNum(Rational(1000000001, 1000000000)));
  interp.set(1, Value::ofNum(1));
  interp.set(2, Value::ofNum(0));
  interp.set(3, Value::ofBool(false));
  FormulaPtr f = fEq(tConst(0), tConst(1));
  CHECK_FALSE(evaluate(f, interp));
  EvalOptions tol;
  tol.tolerance = Rational(1, 100000000);
  CHECK(evaluate(f, interp, tol));
}

TEST_CASE("evaluate: errors on free variables and division by zero") {
  Signature sig = carSignature();
  Interpretation interp(sig);
  interp.set(0, Value::ofNum(0));
  interp.set(1, Value::ofNum(0));
  interp.set(2, Value::ofNum(0));
  interp.set(3, Value::ofBool(false));
  CHECK_THROWS_AS(evaluate(fEq(tVar("x", Sort::real()), tNum(1)), interp), EvalError);
  // Division by a symbolic zero denominator fails at evaluation time.
  FormulaPtr div = fEq(tArith(ArithOp::Div, tNum(1), tConst(2)), tNum(1));
  CHECK_THROWS_AS(evaluate(div, interp), EvalError);
  // Division by the literal 0 is rejected at construction.
  CHECK_THROWS_AS(tArith(ArithOp::Div, tNum(1), tNum(0)), SortError);
}

TEST_CASE("interpretation: sort checks on set") {
  Signature sig = carSignature();
  Interpretation interp(sig);
  CHECK_THROWS_AS(interp.set(0, Value::ofNum(-1)), SortError);  // NonNegReal
  CHECK_THROWS_AS(interp.set(3, Value::ofNum(1)), SortError);   // Boolean
}

TEST_CASE("sorts: enum validation and finite domains") {
  CHECK_THROWS_AS(Sort::enumeration("e", {}), SortError);
  CHECK_THROWS_AS(Sort::enumeration("e", {"a", "a"}), SortError);
  CHECK_THROWS_AS(Sort::intRange(2, 1), SortError);
  Sort b = Sort::boolean();
  REQUIRE(b.values().size() == 2);
  CHECK(b.values()[0] == Value::ofBool(false));
  Sort r = Sort::intRange(-1, 1);
  CHECK(r.values().size() == 3);
  CHECK_THROWS_AS(Sort::real().values(), SortError);
}

TEST_CASE("ground: finite quantifier expansion agrees with the quantified formula") {
  Sort axis = Sort::enumeration("axis", {"X", "Y", "Z"});
  Signature sig;
  for (const char* name : {"P(X)", "P(Y)", "P(Z)"}) {
    GroundConstant c;
    c.display = name;
    c.valueSort = Sort::boolean();
    sig.add(std::move(c));
  }
  // forall ax P(ax), with the application spelled as a case split.
  FormulaPtr body = fOr(
      fAnd(fEq(tVar("ax", axis), tSym("X")), fEq(tConst(0), tBool(true))),
      fOr(fAnd(fEq(tVar("ax", axis), tSym("Y")), fEq(tConst(1), tBool(true))),
          fAnd(fEq(tVar("ax", axis), tSym("Z")), fEq(tConst(2), tBool(true)))));
  FormulaPtr all = fForall("ax", axis, body);
  FormulaPtr grounded = ground(all);
  CHECK_FALSE(hasQuantifier(grounded));
  for (int mask = 0; mask < 8; ++mask) {
    Interpretation interp(sig);
    for (int i = 0; i < 3; ++i) interp.set(i, Value::ofBool((mask >> i) & 1));
    CHECK(evaluate(grounded, interp) == evaluate(all, interp));
  }

  // An existential over a finite sort becomes a disjunction.
  FormulaPtr ex = fExists("ax", axis, fEq(tVar("ax", axis), tSym("Y")));
  FormulaPtr exGround = ground(ex);
  std::vector<FormulaPtr> disjuncts;
  flattenOr(exGround, disjuncts);
  CHECK(disjuncts.size() == 3);

  // Quantifiers over Real sorts stay put; ground input is unchanged.
  FormulaPtr realQ =
      fExists("t", Sort::nonNegReal(), fEq(tVar("t", Sort::nonNegReal()), tNum(1)));
  CHECK(hasQuantifier(ground(realQ)));
  FormulaPtr plain = fEq(tConst(0), tBool(true));
  CHECK(formulaEquals(ground(plain), plain));
}

TEST_CASE("classical equivalences hold under evaluate (property)") {
  std::mt19937 rng(20240811);
  TheoryConfig cfg;
  for (int round = 0; round < 40; ++round) {
    TimedProgram prog = testsupport::randomTightTheory(rng, cfg);
    FiniteTheory all = makeFiniteTheory(prog);
    all.formula = truth();
    FormulaPtr a = testsupport::randomBody(rng, prog.sig, 2);
    FormulaPtr b = testsupport::randomBody(rng, prog.sig, 2);
    FormulaPtr deMorgan1 = fNot(fAnd(a, b));
    FormulaPtr deMorgan2 = fOr(fNot(a), fNot(b));
    FormulaPtr doubleNeg = fNot(fNot(a));
    int checked = 0;
    for (const Interpretation& interp : classicalModels(all)) {
      CHECK(evaluate(deMorgan1, interp) == evaluate(deMorgan2, interp));
      CHECK(evaluate(doubleNeg, interp) == evaluate(a, interp));
      if (++checked > 40) break;
    }
  }
}

TEST_CASE("printing round-trips through the term grammar") {
  Signature sig = carSignature();
  TermPtr t = tArith(ArithOp::Sub, tConst(0),
                     tArith(ArithOp::Mul, tNum(Rational(1, 2)),
                            tArith(ArithOp::Add, tConst(1), tConst(2))));
  CHECK(printTerm(t, &sig) == "Speed0 - 1/2*(Speed1 + Duration)");
  FormulaPtr f =
      fImplies(fEq(tConst(3), tBool(true)), fCmp(CmpOp::Le, tConst(0), tNum(4)));
  CHECK(printFormula(f, &sig) == "Accelerate -> Speed0<=4");
  // The c=false atom prints as -c; a genuine negation keeps its parens so
  // the two parse back to distinct trees.
  CHECK(printFormula(fEq(tConst(3), tBool(false)), &sig) == "-Accelerate");
  CHECK(printFormula(fNot(fEq(tConst(3), tBool(true))), &sig) == "-(Accelerate)");
}

TEST_CASE("rational helpers") {
  CHECK(parseRational("1.5") == Rational(3, 2));
  CHECK(parseRational("-0.25") == Rational(-1, 4));
  CHECK(parseRational("7/6") == Rational(7, 6));
  CHECK_THROWS(parseRational("1.2.3"));
  CHECK(decimalString(Rational(3, 2)) == "1.5");
  CHECK(decimalString(Rational(1, 3)) == "1/3");
  CHECK(ratioString(Rational(-7, 6)) == "-7/6");
}
