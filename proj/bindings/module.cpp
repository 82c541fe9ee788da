#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "cplusmt/oracle.hpp"
#include "cplusmt/planner.hpp"
#include "cplusmt/tightness.hpp"

namespace py = pybind11;
using namespace cplusmt;

namespace {

LoadedDomain load(const std::string& text, const std::string& filename) {
  return loadDomain(text, filename);
}

int horizonOf(const LoadedDomain& d, std::optional<int> maxstep) {
  if (maxstep) return *maxstep;
  if (d.ground.query.maxStep >= 0 && d.ground.query.maxStep == d.ground.query.minStep)
    return d.ground.query.maxStep;
  throw Error("no horizon: pass maxstep or fix 'maxstep :: N' in the query");
}

std::string compileSmt(const std::string& text, std::optional<int> maxstep,
                       const std::string& filename) {
  LoadedDomain d = load(text, filename);
  int m = horizonOf(d, maxstep);
  TimedProgram prog = translate(d.ground, m);
  TightnessResult tight = isTight(prog);
  if (!tight.tight)
    throw Error("program is not tight: " + tight.describeCycle(prog.sig));
  CompletedFormula completed = eliminateDefinitionalVariables(toClarkNormalForm(prog));
  SmtInstance inst = emit(completed, prog.sig, {},
                          stampQuery(d.ground.query, prog, d.ground.groundSig));
  return inst.text();
}

py::tuple checkTight(const std::string& text, std::optional<int> maxstep,
                     const std::string& filename) {
  LoadedDomain d = load(text, filename);
  int m = maxstep.value_or(d.ground.query.maxStep >= 0 ? d.ground.query.maxStep : 1);
  TimedProgram prog = translate(d.ground, m);
  TightnessResult tight = isTight(prog);
  std::vector<std::string> witness;
  for (int id : tight.tight ? tight.order : tight.cycle)
    witness.push_back(prog.sig.at(id).display);
  return py::make_tuple(tight.tight, witness);
}

std::vector<std::map<std::string, std::string>> oracleModels(const std::string& text,
                                                             std::optional<int> maxstep,
                                                             std::uint64_t bound,
                                                             const std::string& filename) {
  LoadedDomain d = load(text, filename);
  int m = maxstep.value_or(1);
  TimedProgram prog = translate(d.ground, m);
  FiniteTheory theory = makeFiniteTheory(prog, bound);
  std::vector<std::map<std::string, std::string>> out;
  for (const Interpretation& interp : stableModels(theory)) {
    std::map<std::string, std::string> row;
    for (int id = 0; id < prog.sig.size(); ++id)
      row[prog.sig.at(id).display] = interp.value(id).str();
    out.push_back(std::move(row));
  }
  return out;
}

std::optional<std::string> planJson(const std::string& text, const std::string& solver,
                                    std::optional<int> minStep, std::optional<int> maxStep,
                                    bool strict, const std::string& filename) {
  LoadedDomain d = load(text, filename);
  PlanOptions opts;
  opts.solverCmd = solver;
  opts.strictModels = strict;
  opts.minStep = minStep;
  opts.maxStep = maxStep;
  PlanOutcome outcome = plan(d.ground, d.ground.query, opts);
  switch (outcome.kind) {
    case PlanOutcome::Kind::Found: return traceJson(outcome.trace, outcome.log);
    case PlanOutcome::Kind::NoPlan: return std::nullopt;
    case PlanOutcome::Kind::Inconclusive:
      throw SolveError("solver returned unknown at maxstep " +
                       std::to_string(outcome.horizon));
  }
  return std::nullopt;
}

std::string dumpRulesText(const std::string& text, std::optional<int> maxstep,
                          const std::string& filename) {
  LoadedDomain d = load(text, filename);
  return dumpRules(translate(d.ground, horizonOf(d, maxstep)));
}

std::string dumpCompletionText(const std::string& text, std::optional<int> maxstep,
                               const std::string& filename) {
  LoadedDomain d = load(text, filename);
  TimedProgram prog = translate(d.ground, horizonOf(d, maxstep));
  CompletedFormula completed = eliminateDefinitionalVariables(toClarkNormalForm(prog));
  std::string out;
  for (const auto& [label, part] : completed.parts)
    out += "% " + label + "\n" + printFormula(part, &prog.sig) + "\n";
  return out;
}

std::string prettyPrint(const std::string& text, const std::string& filename) {
  return printDescription(parse(text, filename));
}

}  // namespace

PYBIND11_MODULE(_cplusmt, m) {
  m.doc() = "C+ action descriptions compiled to SMT via the stable model semantics";

  py::register_exception<ParseError>(m, "CplusParseError", PyExc_ValueError);
  py::register_exception<SolveError>(m, "CplusSolveError", PyExc_RuntimeError);
  py::register_exception<Error>(m, "CplusError", PyExc_RuntimeError);

  m.def("compile", &compileSmt, py::arg("text"), py::arg("maxstep") = std::nullopt,
        py::arg("filename") = "<python>",
        "Compile a description (plus its query) to an SMT-LIB2 instance.");
  m.def("check_tight", &checkTight, py::arg("text"), py::arg("maxstep") = std::nullopt,
        py::arg("filename") = "<python>",
        "Tightness of the translated program: (tight, order-or-cycle).");
  m.def("oracle_models", &oracleModels, py::arg("text"), py::arg("maxstep") = std::nullopt,
        py::arg("bound") = 1000000, py::arg("filename") = "<python>",
        "All stable models of the maxstep-m program (finite sorts only).");
  m.def("plan", &planJson, py::arg("text"), py::arg("solver"),
        py::arg("minstep") = std::nullopt, py::arg("maxstep") = std::nullopt,
        py::arg("strict") = false, py::arg("filename") = "<python>",
        "Run the planner; returns the plan as a JSON string, or None.");
  m.def("dump_rules", &dumpRulesText, py::arg("text"), py::arg("maxstep") = std::nullopt,
        py::arg("filename") = "<python>");
  m.def("dump_completion", &dumpCompletionText, py::arg("text"),
        py::arg("maxstep") = std::nullopt, py::arg("filename") = "<python>");
  m.def("pretty", &prettyPrint, py::arg("text"), py::arg("filename") = "<python>",
        "Round-trippable source form of a parsed description.");
}
