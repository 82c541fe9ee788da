#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cplusmt/oracle.hpp"
#include "cplusmt/planner.hpp"
#include "cplusmt/tightness.hpp"

namespace {

using namespace cplusmt;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // no plan / not tight
constexpr int kExitUsage = 2;     // usage or parse error
constexpr int kExitSolver = 3;    // solver failure or unknown

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(SourceLoc{path, 0, 0}, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct MaxstepRange {
  int lo = -1, hi = -1;
};

MaxstepRange parseMaxstep(const std::string& text) {
  MaxstepRange r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw Error("bad --maxstep '" + text + "' (expected N or A..B)");
  }
  if (r.lo < 0 || r.hi < r.lo) throw Error("bad --maxstep range '" + text + "'");
  return r;
}

std::vector<std::pair<std::string, std::string>> parseSmtOptions(
    const std::vector<std::string>& raw) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& kv : raw) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error("bad --smt-option '" + kv + "' (expected k=v)");
    out.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return out;
}

int fixedHorizon(const std::optional<std::string>& flag, const QuerySpec& query) {
  if (flag) {
    MaxstepRange r = parseMaxstep(*flag);
    if (r.lo != r.hi) throw Error("this command needs a single --maxstep, not a range");
    return r.lo;
  }
  if (query.maxStep >= 0 && query.maxStep == query.minStep) return query.maxStep;
  throw Error("no horizon: pass --maxstep N or fix 'maxstep :: N' in the query");
}

void dumpArtifacts(const LoadedDomain& domain, int m, bool dumpRulesFlag,
                   bool dumpCompletionFlag, bool allowQuantifiers) {
  if (dumpRulesFlag) {
    TimedProgram prog = translate(domain.ground, m);
    std::cout << dumpRules(prog);
  }
  if (dumpCompletionFlag) {
    TimedProgram prog = translate(domain.ground, m);
    CompletedFormula completed = eliminateDefinitionalVariables(toClarkNormalForm(prog));
    (void)allowQuantifiers;
    for (const auto& [label, part] : completed.parts)
      std::cout << "% " << label << "\n" << printFormula(part, &prog.sig) << "\n";
  }
}

int runCompile(const std::string& path, const std::optional<std::string>& maxstepFlag,
               const std::string& outPath, bool dumpRulesFlag, bool dumpCompletionFlag,
               bool allowQuantifiers, const std::vector<std::string>& smtOptions) {
  LoadedDomain domain = loadDomain(readFile(path), path);
  int m = fixedHorizon(maxstepFlag, domain.ground.query);
  dumpArtifacts(domain, m, dumpRulesFlag, dumpCompletionFlag, allowQuantifiers);

  TimedProgram prog = translate(domain.ground, m);
  TightnessResult tight = isTight(prog);
  if (!tight.tight) {
    std::cerr << "error: program is not tight: " << tight.describeCycle(prog.sig) << "\n";
    return kExitNegative;
  }
  CompletedFormula completed = eliminateDefinitionalVariables(toClarkNormalForm(prog));
  EmitOptions eopts;
  eopts.allowQuantifiers = allowQuantifiers;
  eopts.options = parseSmtOptions(smtOptions);
  SmtInstance inst =
      emit(completed, prog.sig, eopts, stampQuery(domain.ground.query, prog, domain.ground.groundSig));
  if (outPath.empty() || outPath == "-") {
    std::cout << inst.text();
  } else {
    std::ofstream out(outPath, std::ios::binary);
    if (!out) throw Error("cannot write '" + outPath + "'");
    out << inst.text();
  }
  return kExitOk;
}

int runSolve(const std::string& path, const std::optional<std::string>& maxstepFlag,
             std::string solverCmd, bool jsonOut, const std::string& dumpSmt,
             bool strictModels, bool dumpRulesFlag, bool dumpCompletionFlag,
             bool allowQuantifiers, const std::vector<std::string>& smtOptions) {
  LoadedDomain domain = loadDomain(readFile(path), path);
  if (solverCmd.empty()) {
    if (const char* env = std::getenv("ASPMT_SOLVER")) solverCmd = env;
  }
  PlanOptions opts;
  opts.solverCmd = solverCmd;
  opts.strictModels = strictModels;
  opts.dumpSmtPath = dumpSmt;
  opts.emit.allowQuantifiers = allowQuantifiers;
  opts.emit.options = parseSmtOptions(smtOptions);
  if (maxstepFlag) {
    MaxstepRange r = parseMaxstep(*maxstepFlag);
    opts.minStep = r.lo;
    opts.maxStep = r.hi;
  }
  if (dumpRulesFlag || dumpCompletionFlag) {
    int m = opts.maxStep.value_or(domain.ground.query.maxStep >= 0 ? domain.ground.query.maxStep : 1);
    dumpArtifacts(domain, m, dumpRulesFlag, dumpCompletionFlag, allowQuantifiers);
  }

  PlanOutcome outcome = plan(domain.ground, domain.ground.query, opts);
  switch (outcome.kind) {
    case PlanOutcome::Kind::Found:
      if (jsonOut) {
        std::cout << traceJson(outcome.trace, outcome.log) << "\n";
      } else {
        std::cout << "PLAN maxstep=" << outcome.horizon << "\n"
                  << formatTrace(outcome.trace);
      }
      return kExitOk;
    case PlanOutcome::Kind::NoPlan:
      if (jsonOut) {
        std::cout << "{\"plan\": null, \"exploredUpTo\": " << outcome.exploredUpTo << "}\n";
      } else {
        std::cout << "NO PLAN up to maxstep " << outcome.exploredUpTo << "\n";
      }
      return kExitNegative;
    case PlanOutcome::Kind::Inconclusive:
      std::cout << "INCONCLUSIVE at maxstep " << outcome.horizon
                << " (solver returned unknown)\n";
      return kExitSolver;
  }
  return kExitSolver;
}

int runCheck(const std::string& path, const std::optional<std::string>& maxstepFlag) {
  LoadedDomain domain = loadDomain(readFile(path), path);
  int m = 1;
  if (maxstepFlag) {
    m = parseMaxstep(*maxstepFlag).hi;
  } else if (domain.ground.query.maxStep >= 0) {
    m = domain.ground.query.maxStep;
  }
  TimedProgram prog = translate(domain.ground, m);
  TightnessResult tight = isTight(prog);
  if (tight.tight) {
    std::cout << "TIGHT\n";
    return kExitOk;
  }
  std::cout << "NOT TIGHT\ncycle: " << tight.describeCycle(prog.sig) << "\n";
  return kExitNegative;
}

int runOracle(const std::string& path, const std::optional<std::string>& maxstepFlag,
              std::uint64_t bound) {
  LoadedDomain domain = loadDomain(readFile(path), path);
  int m = 1;
  if (maxstepFlag) {
    MaxstepRange r = parseMaxstep(*maxstepFlag);
    if (r.lo != r.hi) throw Error("oracle needs a single --maxstep, not a range");
    m = r.lo;
  } else if (domain.ground.query.maxStep >= 0 &&
             domain.ground.query.maxStep == domain.ground.query.minStep) {
    m = domain.ground.query.maxStep;
  }
  TimedProgram prog = translate(domain.ground, m);
  FiniteTheory theory = makeFiniteTheory(prog, bound);
  std::vector<Interpretation> models = stableModels(theory);
  std::cout << models.size() << " stable model" << (models.size() == 1 ? "" : "s")
            << " of the maxstep-" << m << " program\n";
  for (const auto& interp : models) std::cout << interp.str() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"C+ action descriptions compiled to SMT via the stable model semantics"};
  app.require_subcommand(1);

  std::string file, outPath, solverCmd, dumpSmt;
  std::optional<std::string> maxstepFlag;
  bool jsonOut = false, strictModels = false;
  bool dumpRulesFlag = false, dumpCompletionFlag = false, allowQuantifiers = false;
  std::vector<std::string> smtOptions;
  std::uint64_t bound = 1000000;

  auto addCommon = [&](CLI::App* cmd, bool withSolverFlags) {
    cmd->add_option("file", file, "input description (.cp)")->required();
    cmd->add_option("--maxstep", [&maxstepFlag](const std::vector<std::string>& v) {
          maxstepFlag = v.front();
          return true;
        },
        "horizon N or range A..B");
    if (withSolverFlags) {
      cmd->add_flag("--dump-rules", dumpRulesFlag, "print the timed rules");
      cmd->add_flag("--dump-completion", dumpCompletionFlag, "print the completed formula");
      cmd->add_flag("--allow-quantifiers", allowQuantifiers,
                    "emit quantified SMT instead of failing");
      cmd->add_option("--smt-option", smtOptions, "extra (set-option :k v) pairs, k=v");
    }
  };

  CLI::App* compile = app.add_subcommand("compile", "emit an SMT-LIB2 instance");
  addCommon(compile, true);
  compile->add_option("-o,--output", outPath, "output path (default stdout)");

  CLI::App* solve = app.add_subcommand("solve", "search for a plan");
  addCommon(solve, true);
  solve->add_option("--solver", solverCmd, "solver command (default $ASPMT_SOLVER)");
  solve->add_flag("--json", jsonOut, "machine-readable plan output");
  solve->add_option("--dump-smt", dumpSmt, "write each probed instance to PATH.mK.smt2");
  solve->add_flag("--strict-models", strictModels, "reject approximate model values");

  CLI::App* check = app.add_subcommand("check", "tightness check");
  addCommon(check, false);

  CLI::App* oracle = app.add_subcommand("oracle", "enumerate stable models (finite sorts)");
  addCommon(oracle, false);
  oracle->add_option("--bound", bound, "enumeration bound (default 1e6)");

  try {
    app.parse(argc, argv);
    if (compile->parsed())
      return runCompile(file, maxstepFlag, outPath, dumpRulesFlag, dumpCompletionFlag,
                        allowQuantifiers, smtOptions);
    if (solve->parsed())
      return runSolve(file, maxstepFlag, solverCmd, jsonOut, dumpSmt, strictModels,
                      dumpRulesFlag, dumpCompletionFlag, allowQuantifiers, smtOptions);
    if (check->parsed()) return runCheck(file, maxstepFlag);
    if (oracle->parsed()) return runOracle(file, maxstepFlag, bound);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SolveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
