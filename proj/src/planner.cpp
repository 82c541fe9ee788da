#include "cplusmt/planner.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cplusmt/tightness.hpp"

namespace cplusmt {

namespace {

using nlohmann::json;

// timedId[step][baseId], rebuilt from the timed signature.
std::vector<std::vector<int>> timedIndex(const TimedProgram& p, int baseCount) {
  std::vector<std::vector<int>> idx(
      static_cast<std::size_t>(p.horizon) + 1,
      std::vector<int>(static_cast<std::size_t>(baseCount), -1));
  for (int id = 0; id < p.sig.size(); ++id) {
    const GroundConstant& c = p.sig.at(id);
    idx.at(static_cast<std::size_t>(c.step)).at(static_cast<std::size_t>(c.baseId)) = id;
  }
  return idx;
}

FormulaPtr stampAt(const FormulaPtr& f, const std::vector<std::vector<int>>& idx, int step,
                   const Signature& baseSig) {
  return mapConstants(f, [&](int baseId) {
    int timed = idx.at(static_cast<std::size_t>(step)).at(static_cast<std::size_t>(baseId));
    if (timed < 0)
      throw Error("constant '" + baseSig.at(baseId).display + "' has no step-" +
                  std::to_string(step) + " instance (actions stop at the horizon)");
    return tConst(timed);
  });
}

bool mentionsAction(const FormulaPtr& f, const Signature& baseSig) {
  std::vector<int> cs;
  collectConstants(f, cs);
  for (int id : cs)
    if (baseSig.at(id).kind == ConstKind::Action) return true;
  return false;
}

std::string valueDisplay(const ModelValue& mv) {
  std::string s = mv.value.kind == Value::Kind::Num ? decimalString(mv.value.num, 30)
                                                    : mv.value.str();
  if (!mv.exact) s += "~";
  return s;
}

json valueJson(const ModelValue& mv) {
  json j;
  j["value"] = mv.value.kind == Value::Kind::Num ? ratioString(mv.value.num) : mv.value.str();
  if (mv.value.kind == Value::Kind::Num) j["approx"] = toDouble(mv.value.num);
  if (mv.value.kind == Value::Kind::Bool) j["approx"] = mv.value.boolean;
  j["exact"] = mv.exact;
  return j;
}

}  // namespace

const ModelValue* PlanTrace::find(int step, bool action, const std::string& constant) const {
  const auto& rows = action ? events : states;
  if (step < 0 || step >= static_cast<int>(rows.size())) return nullptr;
  for (const auto& sv : rows[static_cast<std::size_t>(step)])
    if (sv.constant == constant) return &sv.value;
  return nullptr;
}

std::vector<std::pair<std::string, FormulaPtr>> stampQuery(const QuerySpec& q,
                                                           const TimedProgram& p,
                                                           const Signature& baseSig) {
  auto idx = timedIndex(p, baseSig.size());
  std::vector<std::pair<std::string, FormulaPtr>> out;
  int m = p.horizon;
  for (const auto& item : q.items) {
    switch (item.at) {
      case QuerySpec::Item::At::Step: {
        if (item.step > m)
          throw Error("query step " + std::to_string(item.step) + " exceeds horizon " +
                      std::to_string(m));
        if (item.step == m && mentionsAction(item.formula, baseSig))
          throw Error("query constraint at the final step cannot mention actions");
        out.emplace_back("query @" + std::to_string(item.step),
                         stampAt(item.formula, idx, item.step, baseSig));
        break;
      }
      case QuerySpec::Item::At::MaxStep: {
        if (mentionsAction(item.formula, baseSig))
          throw Error("goal constraints cannot mention actions");
        out.emplace_back("query @maxstep", stampAt(item.formula, idx, m, baseSig));
        break;
      }
      case QuerySpec::Item::At::Each: {
        int last = mentionsAction(item.formula, baseSig) ? m - 1 : m;
        for (int i = 0; i <= last; ++i)
          out.emplace_back("query @each " + std::to_string(i),
                           stampAt(item.formula, idx, i, baseSig));
        break;
      }
    }
  }
  return out;
}

PlanTrace decodeTrace(const TimedProgram& p, const SolverModel& model) {
  PlanTrace trace;
  trace.horizon = p.horizon;
  trace.approximate = model.approximate;
  trace.states.resize(static_cast<std::size_t>(p.horizon) + 1);
  trace.events.resize(static_cast<std::size_t>(std::max(p.horizon, 0)));
  for (int id = 0; id < p.sig.size(); ++id) {
    const GroundConstant& c = p.sig.at(id);
    auto it = model.values.find(id);
    if (it == model.values.end())
      throw SolveError("model misses a value for '" + c.display + "'");
    PlanStepValue sv{c.display.substr(c.display.find(':') + 1), it->second};
    if (c.kind == ConstKind::Action)
      trace.events.at(static_cast<std::size_t>(c.step)).push_back(std::move(sv));
    else
      trace.states.at(static_cast<std::size_t>(c.step)).push_back(std::move(sv));
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Verification against the completed D_0 / D_1 formulas
// ---------------------------------------------------------------------------

namespace {

struct Verifier {
  const ActionDescription* ground;
  TimedProgram d1;
  CompletedFormula f1;
  TimedProgram d0;
  CompletedFormula f0;

  explicit Verifier(const ActionDescription& g) : ground(&g) {
    d1 = translate(g, 1);
    f1 = eliminateDefinitionalVariables(toClarkNormalForm(d1));
    d0 = programForStates(g);
    f0 = eliminateDefinitionalVariables(toClarkNormalForm(d0));
  }

  static void fill(Interpretation& interp, const Signature& timedSig, int step,
                   const std::vector<PlanStepValue>& values, bool actions) {
    for (const auto& sv : values) {
      int id = timedSig.find(std::to_string(step) + ":" + sv.constant);
      if (id < 0) continue;
      bool isAction = timedSig.at(id).kind == ConstKind::Action;
      if (isAction != actions) continue;
      interp.set(id, sv.value.value);
    }
  }

  std::optional<std::string> checkParts(const CompletedFormula& f, const Interpretation& i,
                                        const EvalOptions& opts) {
    for (const auto& [label, part] : f.parts)
      if (!evaluate(part, i, opts)) return label;
    return std::nullopt;
  }
};

}  // namespace

VerifyResult verifyTrace(const ActionDescription& ground, const PlanTrace& trace,
                         const Rational& tolerance) {
  VerifyResult res;
  Verifier v(ground);
  EvalOptions opts;
  opts.tolerance = tolerance;

  // Every state satisfies the D_0 state condition (the transition check
  // makes all but the first redundant, but per-state reports are clearer).
  for (int i = 0; i <= trace.horizon; ++i) {
    Interpretation interp(v.d0.sig);
    Verifier::fill(interp, v.d0.sig, 0, trace.states.at(static_cast<std::size_t>(i)), false);
    if (!interp.total()) {
      res.ok = false;
      res.violation = "state " + std::to_string(i) + " is missing fluent values";
      return res;
    }
    if (auto bad = v.checkParts(v.f0, interp, opts)) {
      res.ok = false;
      res.violation = "state " + std::to_string(i) + " violates " + *bad;
      return res;
    }
  }
  for (int i = 0; i < trace.horizon; ++i) {
    Interpretation interp(v.d1.sig);
    Verifier::fill(interp, v.d1.sig, 0, trace.states.at(static_cast<std::size_t>(i)), false);
    Verifier::fill(interp, v.d1.sig, 0, trace.events.at(static_cast<std::size_t>(i)), true);
    Verifier::fill(interp, v.d1.sig, 1, trace.states.at(static_cast<std::size_t>(i + 1)),
                   false);
    if (!interp.total()) {
      res.ok = false;
      res.violation = "transition " + std::to_string(i) + " is missing values";
      return res;
    }
    if (auto bad = v.checkParts(v.f1, interp, opts)) {
      res.ok = false;
      res.violation = "transition " + std::to_string(i) + " -> " + std::to_string(i + 1) +
                      " violates " + *bad;
      return res;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Horizon search
// ---------------------------------------------------------------------------

PlanOutcome plan(const ActionDescription& ground, const QuerySpec& query,
                 const PlanOptions& opts) {
  int lo = opts.minStep.value_or(query.minStep >= 0 ? query.minStep : 0);
  int hi = opts.maxStep.value_or(query.maxStep >= 0 ? query.maxStep : lo);
  if (lo < 0 || hi < lo) throw Error("bad horizon range");

  PlanOutcome outcome;
  outcome.exploredUpTo = hi;
  for (int m = lo; m <= hi; ++m) {
    TimedProgram prog = translate(ground, m);
    TightnessResult tight = isTight(prog);
    if (!tight.tight)
      throw Error("translated program is not tight: cycle " +
                  tight.describeCycle(prog.sig));
    CompletedFormula completed = eliminateDefinitionalVariables(toClarkNormalForm(prog));
    auto queryParts = stampQuery(query, prog, ground.groundSig);
    SmtInstance inst = emit(completed, prog.sig, opts.emit, queryParts);
    SolveOptions sopts;
    sopts.strictModels = opts.strictModels;
    if (!opts.dumpSmtPath.empty())
      sopts.dumpPath = opts.dumpSmtPath + ".m" + std::to_string(m) + ".smt2";
    SolveResult r = solve(inst, opts.solverCmd, sopts);
    outcome.log.emplace_back(m, r.status);
    if (r.status == SolveStatus::Unknown) {
      outcome.kind = PlanOutcome::Kind::Inconclusive;
      outcome.horizon = m;
      return outcome;
    }
    if (r.status == SolveStatus::Sat) {
      PlanTrace trace = decodeTrace(prog, r.model);
      Rational tol = trace.approximate ? opts.verifyTolerance : Rational(0);
      VerifyResult check = verifyTrace(ground, trace, tol);
      if (!check.ok)
        throw Error("decoded plan fails re-verification: " + check.violation);
      outcome.kind = PlanOutcome::Kind::Found;
      outcome.horizon = m;
      outcome.trace = std::move(trace);
      return outcome;
    }
  }
  outcome.kind = PlanOutcome::Kind::NoPlan;
  return outcome;
}

// ---------------------------------------------------------------------------
// Output formatting
// ---------------------------------------------------------------------------

std::string formatTrace(const PlanTrace& trace) {
  std::ostringstream os;
  for (int i = 0; i <= trace.horizon; ++i) {
    os << i << ": {";
    const auto& st = trace.states.at(static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < st.size(); ++k) {
      if (k) os << ", ";
      os << st[k].constant << "=" << valueDisplay(st[k].value);
    }
    os << "}";
    if (i < trace.horizon) {
      os << "  |  action={";
      const auto& ev = trace.events.at(static_cast<std::size_t>(i));
      for (std::size_t k = 0; k < ev.size(); ++k) {
        if (k) os << ", ";
        os << ev[k].constant << "=" << valueDisplay(ev[k].value);
      }
      os << "}";
    }
    os << "\n";
  }
  return os.str();
}

std::string traceJson(const PlanTrace& trace,
                      const std::vector<std::pair<int, SolveStatus>>& log) {
  json j;
  j["horizon"] = trace.horizon;
  j["approximate"] = trace.approximate;
  j["states"] = json::array();
  for (const auto& st : trace.states) {
    json row = json::object();
    for (const auto& sv : st) row[sv.constant] = valueJson(sv.value);
    j["states"].push_back(std::move(row));
  }
  j["events"] = json::array();
  for (const auto& ev : trace.events) {
    json row = json::object();
    for (const auto& sv : ev) row[sv.constant] = valueJson(sv.value);
    j["events"].push_back(std::move(row));
  }
  j["horizonLog"] = json::array();
  for (const auto& [m, status] : log) {
    j["horizonLog"].push_back({{"maxstep", m},
                               {"status", status == SolveStatus::Sat     ? "sat"
                                          : status == SolveStatus::Unsat ? "unsat"
                                                                         : "unknown"}});
  }
  return j.dump(2);
}

}  // namespace cplusmt
