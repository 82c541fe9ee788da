#pragma once

#include <string>
#include <vector>

#include "cplusmt/cplus.hpp"
#include "cplusmt/logic.hpp"

namespace cplusmt {

// One time-stamped rule of the program D_m, kept in rule form. Variables of
// Real sorts are implicitly universally quantified at the rule level.
struct TimedRule {
  FormulaPtr head;  // falsum or Equal(timed constant, background value term)
  FormulaPtr body;  // truth() for unconditional rules
  std::vector<std::pair<std::string, Sort>> vars;
  std::string label;
  FormulaPtr formula() const;  // body -> head (quantifier-free; vars free)
};

struct TimedProgram {
  int horizon = 0;
  Signature sig;               // timed constants, step-major order
  std::vector<TimedRule> rules;
  std::vector<int> intensional;  // ids into sig, ascending

  bool isIntensional(int id) const;
  FormulaPtr conjunction() const;  // of all rule formulas
};

// Builds D_m: static laws at steps 0..m, action dynamic laws and fluent
// dynamic laws at steps 0..m-1, with the double negation on the if part
// only. Heads are normalized to c = x with the defining equation in the
// body. Intensional constants follow the transition-path reading:
// 0:sd-fluents, i:actions for i<m, i:fluents for 1<=i<=m.
TimedProgram translate(const ActionDescription& ground, int horizon);

// D_0 with the intensional set restricted to the statically determined
// fluents: its stable models are exactly the states.
TimedProgram programForStates(const ActionDescription& ground);

// Debug dump: intensional header, then one 'head <- body' line per rule.
std::string dumpRules(const TimedProgram& p);

}  // namespace cplusmt
