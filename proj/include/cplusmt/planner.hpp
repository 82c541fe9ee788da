#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cplusmt/cplus.hpp"
#include "cplusmt/smt.hpp"
#include "cplusmt/translate.hpp"

namespace cplusmt {

struct PlanStepValue {
  std::string constant;  // base constant display name
  ModelValue value;
};

struct PlanTrace {
  int horizon = 0;
  // states[i] covers all fluents at step i (0..m); events[i] covers all
  // action constants at step i (0..m-1), contribution constants included.
  std::vector<std::vector<PlanStepValue>> states;
  std::vector<std::vector<PlanStepValue>> events;
  bool approximate = false;

  const ModelValue* find(int step, bool action, const std::string& constant) const;
};

struct PlanOptions {
  std::string solverCmd;
  std::optional<int> minStep, maxStep;  // override the file's maxstep range
  bool strictModels = false;
  std::string dumpSmtPath;  // instance files written to PATH.m<k>.smt2
  EmitOptions emit;
  Rational verifyTolerance = Rational(1, 1000000000);  // for approximate models
};

struct PlanOutcome {
  enum class Kind { Found, NoPlan, Inconclusive };
  Kind kind = Kind::NoPlan;
  PlanTrace trace;      // Found only
  int horizon = -1;     // Found: plan length; Inconclusive: failing horizon
  int exploredUpTo = -1;
  std::vector<std::pair<int, SolveStatus>> log;  // per-horizon solver verdicts
};

// Timed constraint formulas for the query at horizon m: items at fixed
// steps, at maxstep, and 'each' items at every step (fluent formulas
// through step m, formulas mentioning actions through m-1). The query
// formulas are over the base signature; baseSig resolves them.
std::vector<std::pair<std::string, FormulaPtr>> stampQuery(const QuerySpec& q,
                                                           const TimedProgram& p,
                                                           const Signature& baseSig);

// Tries horizons in ascending order, returning the first SAT decode. The
// returned trace has passed verifyTrace. UNKNOWN surfaces as Inconclusive,
// never as NoPlan.
PlanOutcome plan(const ActionDescription& ground, const QuerySpec& query,
                 const PlanOptions& opts);

struct VerifyResult {
  bool ok = true;
  std::string violation;  // first failing definition/constraint, with step
};

// Re-verifies a decoded trace against the completed D_1 formula per
// transition (and the D_0 state condition at every state) under exact
// arithmetic, relaxed by the tolerance for approximate models.
VerifyResult verifyTrace(const ActionDescription& ground, const PlanTrace& trace,
                         const Rational& tolerance = 0);

PlanTrace decodeTrace(const TimedProgram& p, const SolverModel& model);

std::string formatTrace(const PlanTrace& trace);
std::string traceJson(const PlanTrace& trace, const std::vector<std::pair<int, SolveStatus>>& log);

}  // namespace cplusmt
