#include "cplusmt/translate.hpp"

#include <algorithm>
#include <sstream>

namespace cplusmt {

FormulaPtr TimedRule::formula() const {
  if (isTruth(body)) return head;
  return fImplies(body, head);
}

bool TimedProgram::isIntensional(int id) const {
  return std::binary_search(intensional.begin(), intensional.end(), id);
}

FormulaPtr TimedProgram::conjunction() const {
  std::vector<FormulaPtr> fs;
  for (const TimedRule& r : rules) fs.push_back(r.formula());
  return conjoin(fs);
}

namespace {

struct Stamper {
  const Signature* base;
  Signature* timed;
  // timedId[step][baseId]
  std::vector<std::vector<int>> ids;

  int at(int step, int baseId) const {
    int id = ids.at(static_cast<std::size_t>(step)).at(static_cast<std::size_t>(baseId));
    if (id < 0)
      throw Error("constant '" + base->at(baseId).display + "' has no step-" +
                  std::to_string(step) + " instance");
    return id;
  }

  FormulaPtr stamp(const FormulaPtr& f, int step) const {
    return mapConstants(f, [&](int baseId) { return tConst(at(step, baseId)); });
  }
};

// The timed signature is step-major: all fluents and (below the horizon)
// actions of step i precede those of step i+1.
Stamper buildSignature(const ActionDescription& ground, int horizon, TimedProgram& out) {
  Stamper st;
  st.base = &ground.groundSig;
  st.timed = &out.sig;
  st.ids.assign(static_cast<std::size_t>(horizon) + 1,
                std::vector<int>(static_cast<std::size_t>(ground.groundSig.size()), -1));
  for (int i = 0; i <= horizon; ++i) {
    for (int b = 0; b < ground.groundSig.size(); ++b) {
      const GroundConstant& c = ground.groundSig.at(b);
      if (c.kind == ConstKind::Action && i == horizon) continue;
      GroundConstant timed = c;
      timed.step = i;
      timed.baseId = b;
      timed.display = std::to_string(i) + ":" + c.display;
      st.ids[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] =
          out.sig.add(std::move(timed));
    }
  }
  return st;
}

void intensionalSet(const ActionDescription& ground, int horizon, const Stamper& st,
                    TimedProgram& out) {
  for (int b = 0; b < ground.groundSig.size(); ++b) {
    const GroundConstant& c = ground.groundSig.at(b);
    if (c.kind == ConstKind::SdFluent) out.intensional.push_back(st.at(0, b));
    for (int i = 0; i < horizon; ++i) {
      if (c.kind == ConstKind::Action) out.intensional.push_back(st.at(i, b));
      if (isFluentKind(c.kind)) out.intensional.push_back(st.at(i + 1, b));
    }
  }
  std::sort(out.intensional.begin(), out.intensional.end());
}

// Normalizes 'head c = e' to 'c = x' with x = e prepended to the body, as in
// the Clark-normal-form-ready presentation of D_m; heads whose value is
// already a variable are left alone.
void pushRule(TimedProgram& out, const Stamper& st, const CausalLaw& law, int headStep,
              FormulaPtr body, const std::string& label) {
  TimedRule rule;
  rule.label = label;
  if (isFalsum(law.head)) {
    rule.head = falsum();
  } else {
    FormulaPtr head = st.stamp(law.head, headStep);
    if (head->rhs->kind != Term::Kind::Var) {
      TermPtr x = tVar("x$", head->lhs->kind == Term::Kind::Const
                                 ? st.timed->at(head->lhs->constId).valueSort
                                 : Sort::real());
      FormulaPtr eqn = fEq(x, head->rhs);
      body = isTruth(body) ? eqn : fAnd(eqn, body);
      head = fEq(head->lhs, x);
    }
    rule.head = head;
  }
  rule.body = body;
  FormulaPtr asFormula = rule.formula();
  for (const auto& v : freeVars(asFormula)) rule.vars.push_back(v);
  out.rules.push_back(std::move(rule));
}

FormulaPtr negneg(const FormulaPtr& f) { return fNot(fNot(f)); }

std::string lawLabel(const CausalLaw& law, const Signature& baseSig, int step) {
  return printLaw(law, &baseSig) + " @" + std::to_string(step);
}

}  // namespace

TimedProgram translate(const ActionDescription& ground, int horizon) {
  if (!ground.grounded) throw Error("translate needs a ground description");
  if (horizon < 0) throw Error("negative horizon");
  TimedProgram out;
  out.horizon = horizon;
  Stamper st = buildSignature(ground, horizon, out);
  intensionalSet(ground, horizon, st, out);

  const Signature& base = ground.groundSig;
  for (const CausalLaw& law : ground.laws) {
    switch (law.kind) {
      case LawKind::Static:
        for (int i = 0; i <= horizon; ++i) {
          FormulaPtr body = isTruth(law.ifPart) ? truth() : negneg(st.stamp(law.ifPart, i));
          pushRule(out, st, law, i, body, lawLabel(law, base, i));
        }
        break;
      case LawKind::ActionDynamic:
        for (int i = 0; i < horizon; ++i) {
          FormulaPtr body = isTruth(law.ifPart) ? truth() : negneg(st.stamp(law.ifPart, i));
          pushRule(out, st, law, i, body, lawLabel(law, base, i));
        }
        break;
      case LawKind::FluentDynamic:
        for (int i = 0; i < horizon; ++i) {
          std::vector<FormulaPtr> parts;
          if (!isTruth(law.ifPart)) parts.push_back(negneg(st.stamp(law.ifPart, i + 1)));
          if (!isTruth(law.afterPart)) parts.push_back(st.stamp(law.afterPart, i));
          pushRule(out, st, law, i + 1, conjoin(parts), lawLabel(law, base, i));
        }
        break;
    }
  }
  return out;
}

TimedProgram programForStates(const ActionDescription& ground) {
  TimedProgram p = translate(ground, 0);
  std::vector<int> sd;
  for (int id : p.intensional)
    if (p.sig.at(id).kind == ConstKind::SdFluent) sd.push_back(id);
  p.intensional = std::move(sd);
  return p;
}

std::string dumpRules(const TimedProgram& p) {
  std::ostringstream os;
  os << "% horizon " << p.horizon << "\n% intensional:";
  for (int id : p.intensional) os << " " << p.sig.at(id).display;
  os << "\n";
  for (const TimedRule& r : p.rules) {
    os << printFormula(r.head, &p.sig);
    if (!isTruth(r.body)) os << " <- " << printFormula(r.body, &p.sig);
    os << "\n";
  }
  return os.str();
}

}  // namespace cplusmt
