#pragma once

#include <string>
#include <vector>

#include "cplusmt/translate.hpp"

namespace cplusmt {

// One case of a constant's definition: the body already contains the
// defining equation on valueVar (the group's shared value variable).
struct DefinitionCase {
  std::vector<std::pair<std::string, Sort>> vars;  // case-local variables
  FormulaPtr body;
};

struct DefinitionGroup {
  int constantId = -1;
  std::string valueVar;
  Sort valueSort;
  std::vector<DefinitionCase> cases;
};

// A constraint is the universal closure of body -> head; head is falsum for
// rules with empty heads and a non-intensional atom for the program part
// split off by the no-strictly-positive-occurrence condition.
struct ConstraintItem {
  std::vector<std::pair<std::string, Sort>> vars;
  FormulaPtr body;
  FormulaPtr head;
  std::string label;
};

struct ClarkProgram {
  const Signature* sig = nullptr;
  std::vector<DefinitionGroup> groups;       // one per intensional constant
  std::vector<ConstraintItem> constraints;
};

// Groups the rules of a tight program into one definition per intensional
// constant (constants without rules get an empty, always-false definition)
// and a residual constraint list. Rules whose head constant is not
// intensional are only sound on the constraint side when no intensional
// constant occurs strictly positively in them; that is checked here.
ClarkProgram toClarkNormalForm(const TimedProgram& p);

// The completion sentence: for every group a biconditional
//   forall y ( c = y <-> case_1 | ... | case_k )
// with case-local variables existentially quantified, conjoined with the
// universal closures of the constraints. Double negations in bodies are
// kept; they are classically transparent.
FormulaPtr complete(const ClarkProgram& p);

struct CompletedFormula {
  std::vector<std::pair<std::string, FormulaPtr>> parts;  // label, formula
  bool quantifierFree = true;
  FormulaPtr conjunction() const;
};

// Substitutes away every definitional variable (bound by an equation v = e
// with v not in e) after dropping double negations. A fully definitional
// group becomes the implications body_i -> c = e_i plus the exhaustiveness
// disjunction of (c = e_i & body_i); trivially valid implications are
// dropped. Cases whose value variable cannot be solved stay quantified and
// clear the quantifierFree flag.
CompletedFormula eliminateDefinitionalVariables(const ClarkProgram& p);

// Recursively rewrites ((F -> false) -> false) to F.
FormulaPtr stripDoubleNegation(const FormulaPtr& f);

// Classical-equivalence-preserving cleanup: truth/falsum absorption,
// t = t to truth, duplicate conjunct/disjunct removal.
FormulaPtr simplify(const FormulaPtr& f);

}  // namespace cplusmt
