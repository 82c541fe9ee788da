#pragma once

// Shared helpers for the unit and acceptance suites: solver discovery,
// random ground theories for the completion/splitting checks, and random
// small action descriptions for the transition-path checks.

#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cplusmt/completion.hpp"
#include "cplusmt/cplus.hpp"
#include "cplusmt/oracle.hpp"
#include "cplusmt/planner.hpp"
#include "cplusmt/tightness.hpp"

namespace testsupport {

using namespace cplusmt;

inline std::string solverCommand() {
  if (const char* env = std::getenv("ASPMT_SOLVER")) return env;
#ifdef CPLUSMT_DEFAULT_SOLVER
  return CPLUSMT_DEFAULT_SOLVER;
#else
  return "";
#endif
}

inline std::string domainPath(const std::string& name) {
#ifdef CPLUSMT_DOMAIN_DIR
  return std::string(CPLUSMT_DOMAIN_DIR) + "/" + name;
#else
  return "domains/" + name;
#endif
}

inline std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// One cached availability probe so suites can skip solver-bound checks with
// a clear message instead of failing on environment setup.
inline bool solverAvailable() {
  static int cached = -1;
  if (cached >= 0) return cached == 1;
  try {
    Signature sig;
    GroundConstant c;
    c.display = "probe";
    c.valueSort = Sort::real();
    sig.add(c);
    CompletedFormula f;
    f.parts.emplace_back("probe", fEq(tConst(0), tNum(1)));
    SmtInstance inst = emit(f, sig);
    SolveResult r = solve(inst, solverCommand());
    cached = r.status == SolveStatus::Sat ? 1 : 0;
  } catch (const Error&) {
    cached = 0;
  }
  return cached == 1;
}

// ---------------------------------------------------------------------------
// Random ground rule theories (for the completion and splitting theorems)
// ---------------------------------------------------------------------------

struct TheoryConfig {
  int minConstants = 2;
  int maxConstants = 4;
  int maxDomain = 3;  // per-sort domain size, >= 2 for the completion theorem
  int maxRules = 6;
  int maxBodyDepth = 2;
};

inline Sort randomSort(std::mt19937& rng, const TheoryConfig& cfg, int tag) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> size(2, cfg.maxDomain);
  switch (pick(rng)) {
    case 0: return Sort::boolean();
    case 1: return Sort::intRange(0, size(rng) - 1);
    default: {
      int n = size(rng);
      std::vector<std::string> syms;
      for (int i = 0; i < n; ++i)
        syms.push_back("e" + std::to_string(tag) + "_" + std::to_string(i));
      return Sort::enumeration("enum" + std::to_string(tag), syms);
    }
  }
}

inline Value randomValue(std::mt19937& rng, const Sort& s) {
  auto vals = s.values();
  std::uniform_int_distribution<std::size_t> pick(0, vals.size() - 1);
  return vals[pick(rng)];
}

inline FormulaPtr randomBody(std::mt19937& rng, const Signature& sig, int depth) {
  std::uniform_int_distribution<int> shape(0, depth > 0 ? 6 : 2);
  std::uniform_int_distribution<int> constPick(0, sig.size() - 1);
  switch (shape(rng)) {
    case 0: {
      int c = constPick(rng);
      return fEq(tConst(c), tLit(randomValue(rng, sig.at(c).valueSort)));
    }
    case 1: {
      int c = constPick(rng);
      if (sig.at(c).valueSort.kind() == SortKind::IntRange)
        return fCmp(CmpOp::Le, tConst(c), tLit(randomValue(rng, sig.at(c).valueSort)));
      return fNot(fEq(tConst(c), tLit(randomValue(rng, sig.at(c).valueSort))));
    }
    case 2: return std::uniform_int_distribution<int>(0, 1)(rng) ? truth() : falsum();
    case 3: return fAnd(randomBody(rng, sig, depth - 1), randomBody(rng, sig, depth - 1));
    case 4: return fOr(randomBody(rng, sig, depth - 1), randomBody(rng, sig, depth - 1));
    case 5: return fNot(randomBody(rng, sig, depth - 1));
    default: return fNot(fNot(randomBody(rng, sig, depth - 1)));
  }
}

// A random ground rule theory as a horizon-0 timed program; regenerates
// until it is tight and in Clark-convertible shape.
inline TimedProgram randomTightTheory(std::mt19937& rng, const TheoryConfig& cfg = {}) {
  for (;;) {
    TimedProgram prog;
    prog.horizon = 0;
    std::uniform_int_distribution<int> nc(cfg.minConstants, cfg.maxConstants);
    int n = nc(rng);
    for (int i = 0; i < n; ++i) {
      GroundConstant c;
      c.display = "c" + std::to_string(i);
      c.baseName = c.display;
      c.valueSort = randomSort(rng, cfg, i);
      c.step = 0;
      c.baseId = i;
      prog.sig.add(std::move(c));
    }
    std::uniform_int_distribution<int> coin(0, 99);
    for (int i = 0; i < n; ++i)
      if (coin(rng) < 70 || (i == n - 1 && prog.intensional.empty()))
        prog.intensional.push_back(i);
    std::uniform_int_distribution<int> nr(0, cfg.maxRules);
    int rules = nr(rng);
    for (int k = 0; k < rules; ++k) {
      TimedRule r;
      r.label = "r" + std::to_string(k);
      if (coin(rng) < 15) {
        r.head = falsum();
      } else {
        std::uniform_int_distribution<int> constPick(0, prog.sig.size() - 1);
        int c = constPick(rng);
        r.head = fEq(tConst(c), tLit(randomValue(rng, prog.sig.at(c).valueSort)));
      }
      r.body = coin(rng) < 25 ? truth() : randomBody(rng, prog.sig, cfg.maxBodyDepth);
      prog.rules.push_back(std::move(r));
    }
    if (!isTight(prog).tight) continue;
    try {
      (void)toClarkNormalForm(prog);
    } catch (const Error&) {
      continue;  // non-intensional head supporting an intensional constant
    }
    return prog;
  }
}

// A constraint-like formula with no strictly positive occurrence of the
// program's intensional constants (for the splitting theorem).
inline FormulaPtr randomSplitFormula(std::mt19937& rng, const TimedProgram& prog) {
  for (;;) {
    FormulaPtr g = randomBody(rng, prog.sig, 2);
    if (std::uniform_int_distribution<int>(0, 1)(rng)) g = fNot(fNot(g));
    std::vector<int> sp = strictlyPositiveConstants(g);
    bool clean = true;
    for (int id : sp) clean &= !prog.isIntensional(id);
    if (clean) return g;
  }
}

inline std::string interpKey(const Interpretation& interp) { return interp.str(); }

inline std::set<std::string> modelKeys(const std::vector<Interpretation>& models) {
  std::set<std::string> out;
  for (const auto& m : models) out.insert(interpKey(m));
  return out;
}

// ---------------------------------------------------------------------------
// Random finite-domain action descriptions (Theorems on transition paths)
// ---------------------------------------------------------------------------

struct DomainConfig {
  bool small = false;  // 2 fluents / 1 action / Boolean-only, good up to m=3
};

inline ActionDescription randomDescription(std::mt19937& rng, const DomainConfig& cfg) {
  ActionDescription d;
  std::uniform_int_distribution<int> coin(0, 99);
  int fluents = cfg.small ? 2 : std::uniform_int_distribution<int>(2, 3)(rng);
  int actions = cfg.small ? 1 : std::uniform_int_distribution<int>(1, 2)(rng);

  auto smallSort = [&](int tag) -> Sort {
    if (cfg.small) return Sort::boolean();
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0: return Sort::boolean();
      case 1: return Sort::intRange(0, std::uniform_int_distribution<int>(1, 2)(rng));
      default: {
        int n = std::uniform_int_distribution<int>(2, 3)(rng);
        std::vector<std::string> syms;
        for (int i = 0; i < n; ++i)
          syms.push_back("s" + std::to_string(tag) + "_" + std::to_string(i));
        return Sort::enumeration("sort" + std::to_string(tag), syms);
      }
    }
  };

  std::vector<std::string> fluentNames, actionNames;
  bool sdUsed = false;
  for (int i = 0; i < fluents; ++i) {
    std::string name = "F" + std::to_string(i);
    bool sd = !cfg.small && !sdUsed && i == fluents - 1 && coin(rng) < 40;
    sdUsed |= sd;
    d.constants.push_back(
        {name, {}, smallSort(i), sd ? ConstKind::SdFluent : ConstKind::SimpleFluent, false});
    fluentNames.push_back(name);
  }
  for (int i = 0; i < actions; ++i) {
    std::string name = "A" + std::to_string(i);
    d.constants.push_back({name, {}, Sort::boolean(), ConstKind::Action, false});
    actionNames.push_back(name);
  }

  auto atomOf = [&](const std::string& name) {
    const ConstantDecl* c = d.findConstant(name);
    return fEq(tApply(name, {}), tLit(randomValue(rng, c->valueSort)));
  };
  auto fluentBody = [&](int depth) -> FormulaPtr {
    std::vector<std::string> simple;
    for (const auto& c : d.constants)
      if (c.kind == ConstKind::SimpleFluent) simple.push_back(c.name);
    std::function<FormulaPtr(int)> rec = [&](int dd) -> FormulaPtr {
      if (dd == 0 || coin(rng) < 50) {
        std::uniform_int_distribution<std::size_t> pick(0, simple.size() - 1);
        return atomOf(simple[pick(rng)]);
      }
      switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: return fAnd(rec(dd - 1), rec(dd - 1));
        case 1: return fOr(rec(dd - 1), rec(dd - 1));
        default: return fNot(rec(dd - 1));
      }
    };
    return rec(depth);
  };

  auto addStatement = [&](Statement st) { d.statements.push_back(std::move(st)); };

  for (const auto& a : actionNames) {
    Statement st;
    st.kind = Statement::Kind::Exogenous;
    st.constants.push_back(tApply(a, {}));
    addStatement(std::move(st));
  }
  for (const auto& c : d.constants) {
    if (c.kind == ConstKind::SimpleFluent) {
      Statement st;
      st.kind = coin(rng) < 70 ? Statement::Kind::Inertial : Statement::Kind::Exogenous;
      st.constants.push_back(tApply(c.name, {}));
      addStatement(std::move(st));
    } else if (c.kind == ConstKind::SdFluent) {
      if (coin(rng) < 30) {
        Statement st;
        st.kind = Statement::Kind::Exogenous;
        st.constants.push_back(tApply(c.name, {}));
        addStatement(std::move(st));
      } else {
        // A total definition: one value under B, another under -B.
        FormulaPtr b = fluentBody(1);
        auto vals = c.valueSort.values();
        Statement st1;
        st1.kind = Statement::Kind::Caused;
        st1.head = fEq(tApply(c.name, {}), tLit(vals.front()));
        st1.ifPart = b;
        addStatement(std::move(st1));
        Statement st2;
        st2.kind = Statement::Kind::Caused;
        st2.head = fEq(tApply(c.name, {}), tLit(vals.back()));
        st2.ifPart = fNot(b);
        addStatement(std::move(st2));
      }
    }
  }
  // A few effect laws and maybe a state constraint.
  int effects = std::uniform_int_distribution<int>(1, cfg.small ? 2 : 3)(rng);
  std::vector<std::string> simpleFluents;
  for (const auto& c : d.constants)
    if (c.kind == ConstKind::SimpleFluent) simpleFluents.push_back(c.name);
  for (int k = 0; k < effects; ++k) {
    std::uniform_int_distribution<std::size_t> pickF(0, simpleFluents.size() - 1);
    std::uniform_int_distribution<std::size_t> pickA(0, actionNames.size() - 1);
    Statement st;
    st.kind = Statement::Kind::Caused;
    st.head = atomOf(simpleFluents[pickF(rng)]);
    st.ifPart = truth();
    FormulaPtr after = fEq(tApply(actionNames[pickA(rng)], {}), tBool(true));
    if (coin(rng) < 40) after = fAnd(after, fluentBody(1));
    st.afterPart = after;
    addStatement(std::move(st));
  }
  if (coin(rng) < 25) {
    Statement st;
    st.kind = Statement::Kind::Constraint;
    st.head = fluentBody(1);
    addStatement(std::move(st));
  }
  return d;
}

// Canonical key of the step-i fluent (or action) slice of a timed
// interpretation; the base-constant ordering makes keys comparable across
// programs of different horizons.
inline std::string sliceKey(const TimedProgram& prog, const Interpretation& interp, int step,
                            bool actions) {
  std::ostringstream os;
  for (int id = 0; id < prog.sig.size(); ++id) {
    const GroundConstant& c = prog.sig.at(id);
    if (c.step != step) continue;
    if ((c.kind == ConstKind::Action) != actions) continue;
    os << c.baseId << "=" << interp.value(id).str() << "|";
  }
  return os.str();
}

}  // namespace testsupport
