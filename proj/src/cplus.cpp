#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cplusmt/cplus.hpp"

namespace cplusmt {

namespace {

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

void collectApplies(const TermPtr& t, std::vector<TermPtr>& out) {
  switch (t->kind) {
    case Term::Kind::Apply: out.push_back(t); break;
    case Term::Kind::Arith:
      collectApplies(t->lhs, out);
      collectApplies(t->rhs, out);
      break;
    case Term::Kind::Param:
      for (const auto& a : t->args) collectApplies(a, out);
      break;
    default: break;
  }
}

void collectApplies(const FormulaPtr& f, std::vector<TermPtr>& out) {
  switch (f->kind) {
    case Formula::Kind::Falsum: break;
    case Formula::Kind::Equal:
    case Formula::Kind::Cmp:
      collectApplies(f->lhs, out);
      collectApplies(f->rhs, out);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collectApplies(f->f, out);
      collectApplies(f->g, out);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: collectApplies(f->f, out); break;
  }
}

const ConstantDecl& declOf(const ActionDescription& d, const TermPtr& apply,
                           const SourceLoc& loc) {
  const ConstantDecl* c = d.findConstant(apply->name);
  if (!c) throw ParseError(loc, "undeclared constant '" + apply->name + "'");
  return *c;
}

std::string applyDisplay(const TermPtr& apply) {
  std::string s = apply->name;
  if (!apply->args.empty()) {
    s += "(";
    for (std::size_t i = 0; i < apply->args.size(); ++i) {
      if (i) s += ",";
      if (apply->args[i]->kind != Term::Kind::Literal)
        throw Error("constant '" + apply->name + "' is not ground");
      s += apply->args[i]->lit.str();
    }
    s += ")";
  }
  return s;
}

bool isGroundApply(const TermPtr& t) {
  if (t->kind != Term::Kind::Apply) return false;
  for (const auto& a : t->args)
    if (a->kind != Term::Kind::Literal) return false;
  return true;
}

// Enumerates assignments for the finite-sorted variables among vars,
// invoking fn with each substitution map.
void forEachFiniteAssignment(
    const std::vector<std::pair<std::string, Sort>>& vars,
    const std::function<void(const std::map<std::string, TermPtr>&)>& fn) {
  std::vector<std::pair<std::string, std::vector<Value>>> finite;
  for (const auto& [name, sort] : vars)
    if (sort.finite()) finite.emplace_back(name, sort.values());
  std::map<std::string, TermPtr> subst;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == finite.size()) {
      fn(subst);
      return;
    }
    for (const Value& v : finite[i].second) {
      subst[finite[i].first] = tLit(v);
      rec(i + 1);
    }
    subst.erase(finite[i].first);
  };
  rec(0);
}

FormulaPtr substituteVars(FormulaPtr f, const std::map<std::string, TermPtr>& subst) {
  for (const auto& [name, repl] : subst) f = substituteVar(f, name, repl);
  return f;
}

TermPtr substituteVars(TermPtr t, const std::map<std::string, TermPtr>& subst) {
  for (const auto& [name, repl] : subst) t = substituteVar(t, name, repl);
  return t;
}

std::vector<std::pair<std::string, Sort>> lawVars(const CausalLaw& law) {
  auto vars = freeVars(law.head);
  for (const auto& v : freeVars(law.ifPart))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  for (const auto& v : freeVars(law.afterPart))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  return vars;
}

// ---------------------------------------------------------------------------
// Law validation (definiteness and law-kind restrictions)
// ---------------------------------------------------------------------------

void checkFluentFormula(const ActionDescription& d, const FormulaPtr& f, const SourceLoc& loc,
                        const char* where) {
  std::vector<TermPtr> applies;
  collectApplies(f, applies);
  for (const auto& a : applies) {
    const ConstantDecl& c = declOf(d, a, loc);
    if (c.kind == ConstKind::Action)
      throw ParseError(loc, std::string(where) + " must be a fluent formula, but mentions "
                                "action constant '" + c.name + "'");
  }
}

void checkDefiniteLaw(const ActionDescription& d, const CausalLaw& law) {
  if (!isFalsum(law.head)) {
    if (law.head->kind != Formula::Kind::Equal || law.head->lhs->kind != Term::Kind::Apply)
      throw ParseError(law.loc, "law head must be an atom c(...)=v or false");
    const ConstantDecl& c = declOf(d, law.head->lhs, law.loc);
    std::vector<TermPtr> valueApplies;
    collectApplies(law.head->rhs, valueApplies);
    if (!valueApplies.empty())
      throw ParseError(law.loc, "head value of '" + c.name +
                                    "' must be a background term (no fluent or "
                                    "action constants)");
    switch (law.kind) {
      case LawKind::Static:
        if (!isFluentKind(c.kind))
          throw ParseError(law.loc, "head of a static law must be a fluent constant");
        break;
      case LawKind::ActionDynamic:
        if (c.kind != ConstKind::Action)
          throw ParseError(law.loc, "head of an action dynamic law must be an action constant");
        break;
      case LawKind::FluentDynamic:
        if (c.kind != ConstKind::SimpleFluent)
          throw ParseError(law.loc,
                           "head of a fluent dynamic law must be a simple fluent constant");
        break;
    }
  }
  if (law.kind == LawKind::Static || law.kind == LawKind::FluentDynamic)
    checkFluentFormula(d, law.ifPart, law.loc, "the if part");
}

void validateLaws(const ActionDescription& d) {
  for (const CausalLaw& law : d.laws) checkDefiniteLaw(d, law);
  // Declared additive fluents stay out of static/fluent dynamic heads; the
  // summation laws added by expandIncrements are exempt (they run before
  // this check is repeated).
  if (!d.incrementsExpanded) {
    for (const CausalLaw& law : d.laws) {
      if (isFalsum(law.head)) continue;
      const ConstantDecl& c = declOf(d, law.head->lhs, law.loc);
      if (c.additive && law.kind != LawKind::ActionDynamic)
        throw ParseError(law.loc, "additive fluent '" + c.name +
                                      "' cannot appear in the head of a static or "
                                      "fluent dynamic law");
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// desugar
// ---------------------------------------------------------------------------

ActionDescription desugar(const ActionDescription& in) {
  if (in.desugared) return in;
  ActionDescription d = in;
  d.laws.clear();
  d.increments.clear();
  // Internal variables are named v$N; the lexer restricts user names to
  // [A-Za-z0-9_], so no clash is possible.
  int fresh = 0;

  auto boolAtom = [](const TermPtr& c, bool v) { return fEq(c, tBool(v)); };

  for (const Statement& st : d.statements) {
    switch (st.kind) {
      case Statement::Kind::Caused: {
        CausalLaw law;
        law.loc = st.loc;
        law.head = st.head;
        law.ifPart = st.ifPart;
        if (st.afterPart) {
          law.kind = LawKind::FluentDynamic;
          law.afterPart = st.afterPart;
        } else {
          law.afterPart = truth();
          // Classify by the head constant; bare 'caused false if G' is an
          // action dynamic constraint when G mentions actions.
          bool actionHead = false;
          if (!isFalsum(st.head) && st.head->kind == Formula::Kind::Equal &&
              st.head->lhs->kind == Term::Kind::Apply) {
            actionHead = declOf(d, st.head->lhs, st.loc).kind == ConstKind::Action;
          } else if (isFalsum(st.head)) {
            std::vector<TermPtr> applies;
            collectApplies(st.ifPart, applies);
            for (const auto& a : applies)
              actionHead |= declOf(d, a, st.loc).kind == ConstKind::Action;
          }
          law.kind = actionHead ? LawKind::ActionDynamic : LawKind::Static;
        }
        d.laws.push_back(std::move(law));
        break;
      }
      case Statement::Kind::Constraint: {
        CausalLaw law;
        law.loc = st.loc;
        law.head = falsum();
        law.ifPart = fNot(st.head);
        if (st.afterPart) {
          law.kind = LawKind::FluentDynamic;
          law.afterPart = st.afterPart;
        } else {
          law.kind = LawKind::Static;
          law.afterPart = truth();
        }
        d.laws.push_back(std::move(law));
        break;
      }
      case Statement::Kind::Always: {
        CausalLaw law;
        law.loc = st.loc;
        law.kind = LawKind::ActionDynamic;
        law.head = falsum();
        law.ifPart = fNot(st.head);
        law.afterPart = truth();
        d.laws.push_back(std::move(law));
        break;
      }
      case Statement::Kind::Default: {
        if (st.defaultAtom->kind != Formula::Kind::Equal ||
            st.defaultAtom->lhs->kind != Term::Kind::Apply)
          throw ParseError(st.loc, "default expects an atom c=v");
        const ConstantDecl& c = declOf(d, st.defaultAtom->lhs, st.loc);
        CausalLaw law;
        law.loc = st.loc;
        law.kind = c.kind == ConstKind::Action ? LawKind::ActionDynamic : LawKind::Static;
        law.head = st.defaultAtom;
        law.ifPart = st.defaultAtom;
        law.afterPart = truth();
        d.laws.push_back(std::move(law));
        break;
      }
      case Statement::Kind::Inertial: {
        for (const TermPtr& c : st.constants) {
          const ConstantDecl& decl = declOf(d, c, st.loc);
          if (decl.kind != ConstKind::SimpleFluent)
            throw ParseError(st.loc, "inertial applies to simple fluents only");
          TermPtr v = tVar("v$" + std::to_string(fresh++), decl.valueSort);
          FormulaPtr atom = fEq(c, v);
          d.laws.push_back({LawKind::FluentDynamic, atom, atom, atom, st.loc});
        }
        break;
      }
      case Statement::Kind::Exogenous: {
        for (const TermPtr& c : st.constants) {
          const ConstantDecl& decl = declOf(d, c, st.loc);
          TermPtr v = tVar("v$" + std::to_string(fresh++), decl.valueSort);
          FormulaPtr atom = fEq(c, v);
          LawKind kind =
              decl.kind == ConstKind::Action ? LawKind::ActionDynamic : LawKind::Static;
          d.laws.push_back({kind, atom, atom, truth(), st.loc});
        }
        break;
      }
      case Statement::Kind::Causes: {
        const ConstantDecl& trig = declOf(d, st.trigger, st.loc);
        if (trig.kind != ConstKind::Action || trig.valueSort.kind() != SortKind::Boolean)
          throw ParseError(st.loc, "trigger of a causes law must be a Boolean action");
        FormulaPtr trigAtom = boolAtom(st.trigger, true);
        std::vector<FormulaPtr> conjuncts;
        flattenAnd(st.head, conjuncts);
        for (const FormulaPtr& conj : conjuncts) {
          if (isTruth(conj)) continue;
          if (isFalsum(conj)) {
            d.laws.push_back({LawKind::FluentDynamic, falsum(), truth(), trigAtom, st.loc});
            continue;
          }
          if (conj->kind != Formula::Kind::Equal || conj->lhs->kind != Term::Kind::Apply)
            throw ParseError(st.loc, "effects of a causes law must be atoms");
          const ConstantDecl& c = declOf(d, conj->lhs, st.loc);
          if (c.kind == ConstKind::Action) {
            // e.g. 'TurnOn(x) causes On(x) & Dur=0': the Dur=0 conjunct is an
            // action dynamic law of its own.
            d.laws.push_back({LawKind::ActionDynamic, conj, trigAtom, truth(), st.loc});
          } else {
            d.laws.push_back({LawKind::FluentDynamic, conj, truth(), trigAtom, st.loc});
          }
        }
        break;
      }
      case Statement::Kind::Increments: {
        IncrementLaw law;
        law.loc = st.loc;
        law.trigger = st.trigger;
        law.target = st.target;
        law.amount = st.amount;
        law.cond = st.ifPart;
        d.increments.push_back(std::move(law));
        break;
      }
    }
  }
  d.statements.clear();
  d.desugared = true;
  validateLaws(d);
  return d;
}

// ---------------------------------------------------------------------------
// expandIncrements
// ---------------------------------------------------------------------------

std::vector<std::string> processFluents(const ActionDescription& d) {
  std::vector<std::string> out;
  for (const IncrementLaw& inc : d.increments) {
    const ConstantDecl* c = d.findConstant(inc.trigger->name);
    if (!c || !isFluentKind(c->kind)) continue;
    auto vars = freeVars(inc.trigger);
    forEachFiniteAssignment(vars, [&](const std::map<std::string, TermPtr>& subst) {
      std::string disp = applyDisplay(substituteVars(inc.trigger, subst));
      if (std::find(out.begin(), out.end(), disp) == out.end()) out.push_back(disp);
    });
  }
  return out;
}

ActionDescription expandIncrements(const ActionDescription& in) {
  if (!in.desugared) throw Error("expandIncrements needs a desugared description");
  if (in.incrementsExpanded) return in;
  ActionDescription d = in;
  d.incrementsExpanded = true;
  if (d.increments.empty()) return d;

  struct GroundInc {
    TermPtr trigger, target, amount;
    FormulaPtr cond;
    SourceLoc loc;
  };
  std::vector<GroundInc> instances;
  for (const IncrementLaw& inc : d.increments) {
    const ConstantDecl& trig = declOf(d, inc.trigger, inc.loc);
    const ConstantDecl& targ = declOf(d, inc.target, inc.loc);
    if (trig.valueSort.kind() != SortKind::Boolean ||
        (trig.kind != ConstKind::Action && trig.kind != ConstKind::SimpleFluent))
      throw ParseError(inc.loc,
                       "increment trigger must be a Boolean action or a Boolean simple fluent");
    if (!targ.valueSort.numeric() || targ.kind != ConstKind::SimpleFluent)
      throw ParseError(inc.loc, "increment target must be a numeric simple fluent");
    auto vars = freeVars(inc.trigger);
    for (const auto& v : freeVars(inc.target))
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    for (const auto& v : freeVars(inc.amount))
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    for (const auto& v : freeVars(inc.cond))
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    forEachFiniteAssignment(vars, [&](const std::map<std::string, TermPtr>& subst) {
      instances.push_back({substituteVars(inc.trigger, subst),
                           substituteVars(inc.target, subst),
                           substituteVars(inc.amount, subst),
                           substituteVars(inc.cond, subst), inc.loc});
    });
  }

  // Which ground Boolean fluents drive increments (process fluents).
  std::vector<std::string> procs = processFluents(d);
  auto isProcess = [&](const std::string& disp) {
    return std::find(procs.begin(), procs.end(), disp) != procs.end();
  };

  // Increment targets, whether declared additive or not, stay out of
  // the heads of the user's static and fluent dynamic laws.
  std::set<std::string> targets;
  for (const GroundInc& gi : instances) targets.insert(applyDisplay(gi.target));
  for (const CausalLaw& law : d.laws) {
    if (isFalsum(law.head) || law.kind == LawKind::ActionDynamic) continue;
    auto headVars = freeVars(law.head->lhs);
    forEachFiniteAssignment(headVars, [&](const std::map<std::string, TermPtr>& subst) {
      std::string disp = applyDisplay(substituteVars(law.head->lhs, subst));
      if (targets.count(disp))
        throw ParseError(law.loc, "additive fluent '" + disp +
                                      "' cannot appear in the head of a static or "
                                      "fluent dynamic law");
    });
  }

  // Validate conditions: no Boolean action constants anywhere; no process
  // fluents when the trigger is itself a process fluent.
  for (const GroundInc& gi : instances) {
    std::vector<TermPtr> applies;
    collectApplies(gi.cond, applies);
    bool processTrigger = isFluentKind(declOf(d, gi.trigger, gi.loc).kind);
    for (const auto& a : applies) {
      const ConstantDecl& c = declOf(d, a, gi.loc);
      if (c.kind == ConstKind::Action && c.valueSort.kind() == SortKind::Boolean)
        throw ParseError(gi.loc,
                         "increment condition cannot mention Boolean action constants");
      if (processTrigger && isGroundApply(a) && isProcess(applyDisplay(a)))
        throw ParseError(gi.loc, "increment condition cannot mention process fluents");
    }
  }

  // Contribution constants, one per (trigger, target) pair.
  struct Pair {
    std::string name;  // Contr(p,c)
    TermPtr trigger, target;
  };
  std::vector<Pair> pairs;
  std::vector<std::string> targetOrder;
  auto pairName = [](const std::string& p, const std::string& c) {
    return "Contr(" + p + "," + c + ")";
  };
  for (const GroundInc& gi : instances) {
    std::string p = applyDisplay(gi.trigger);
    std::string c = applyDisplay(gi.target);
    std::string name = pairName(p, c);
    if (std::find_if(pairs.begin(), pairs.end(),
                     [&](const Pair& q) { return q.name == name; }) == pairs.end()) {
      pairs.push_back({name, gi.trigger, gi.target});
      const ConstantDecl& targ = declOf(d, gi.target, gi.loc);
      d.constants.push_back({name, {}, targ.valueSort, ConstKind::Action, false});
    }
    if (std::find(targetOrder.begin(), targetOrder.end(), c) == targetOrder.end())
      targetOrder.push_back(c);
  }

  // (a) one action dynamic law per ground increment law instance:
  //     caused Contr(p,c)=f if p & G
  for (const GroundInc& gi : instances) {
    std::string name = pairName(applyDisplay(gi.trigger), applyDisplay(gi.target));
    FormulaPtr cond = fEq(gi.trigger, tBool(true));
    if (!isTruth(gi.cond)) cond = fAnd(cond, gi.cond);
    d.laws.push_back(
        {LawKind::ActionDynamic, fEq(tApply(name, {}), gi.amount), cond, truth(), gi.loc});
  }
  // (b) caused Contr(p,c)=0 if -p
  for (const Pair& pr : pairs) {
    d.laws.push_back({LawKind::ActionDynamic, fEq(tApply(pr.name, {}), tNum(0)),
                      fEq(pr.trigger, tBool(false)), truth(), SourceLoc{}});
  }
  // (c) one summation law per target:
  //     caused c = v + w1 + ... + wk after c=v & Contr(p1,c)=w1 & ...
  for (const std::string& targetDisp : targetOrder) {
    TermPtr target;
    std::vector<const Pair*> contribs;
    for (const Pair& pr : pairs)
      if (applyDisplay(pr.target) == targetDisp) {
        contribs.push_back(&pr);
        target = pr.target;
      }
    const ConstantDecl& targ = declOf(d, target, SourceLoc{});
    TermPtr v = tVar("v$sum", targ.valueSort);
    TermPtr sum = v;
    FormulaPtr after = fEq(target, v);
    for (std::size_t i = 0; i < contribs.size(); ++i) {
      TermPtr w = tVar("w$" + std::to_string(i), targ.valueSort);
      sum = tArith(ArithOp::Add, sum, w);
      after = fAnd(after, fEq(tApply(contribs[i]->name, {}), w));
    }
    d.laws.push_back(
        {LawKind::FluentDynamic, fEq(target, sum), truth(), after, SourceLoc{}});
  }
  d.increments.clear();
  validateLaws(d);
  return d;
}

// ---------------------------------------------------------------------------
// groundLaws
// ---------------------------------------------------------------------------

namespace {

TermPtr resolveTerm(const ActionDescription& d, const Signature& sig, const TermPtr& t,
                    const SourceLoc& loc);

FormulaPtr resolveFormula(const ActionDescription& d, const Signature& sig,
                          const FormulaPtr& f, const SourceLoc& loc) {
  switch (f->kind) {
    case Formula::Kind::Falsum: return f;
    case Formula::Kind::Equal:
      return fEq(resolveTerm(d, sig, f->lhs, loc), resolveTerm(d, sig, f->rhs, loc));
    case Formula::Kind::Cmp:
      return fCmp(f->cmp, resolveTerm(d, sig, f->lhs, loc), resolveTerm(d, sig, f->rhs, loc));
    case Formula::Kind::And:
      return fAnd(resolveFormula(d, sig, f->f, loc), resolveFormula(d, sig, f->g, loc));
    case Formula::Kind::Or:
      return fOr(resolveFormula(d, sig, f->f, loc), resolveFormula(d, sig, f->g, loc));
    case Formula::Kind::Implies:
      return fImplies(resolveFormula(d, sig, f->f, loc), resolveFormula(d, sig, f->g, loc));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      throw ParseError(loc, "quantifiers are not allowed in laws");
  }
  return f;
}

TermPtr resolveTerm(const ActionDescription& d, const Signature& sig, const TermPtr& t,
                    const SourceLoc& loc) {
  switch (t->kind) {
    case Term::Kind::Apply: {
      std::string disp = applyDisplay(t);
      return tConst(sig.require(disp));
    }
    case Term::Kind::Param: {
      std::vector<Value> args;
      for (const auto& a : t->args) {
        if (a->kind != Term::Kind::Literal)
          throw ParseError(loc, "parameter '" + t->name + "' has a non-ground argument");
        args.push_back(a->lit);
      }
      const ParamDef* def = d.findParameter(t->name, args);
      if (!def) {
        std::string disp = t->name;
        if (!args.empty()) {
          disp += "(";
          for (std::size_t i = 0; i < args.size(); ++i)
            disp += (i ? "," : "") + args[i].str();
          disp += ")";
        }
        throw ParseError(loc, "parameter '" + disp + "' has no definition");
      }
      return tNum(def->value);
    }
    case Term::Kind::Arith:
      return tArith(t->op, resolveTerm(d, sig, t->lhs, loc), resolveTerm(d, sig, t->rhs, loc));
    default: return t;
  }
}

}  // namespace

ActionDescription groundLaws(const ActionDescription& in) {
  if (!in.desugared || !in.incrementsExpanded)
    throw Error("groundLaws needs a desugared, increment-expanded description");
  if (in.grounded) return in;
  ActionDescription d = in;

  // Ground signature: declaration-major, argument tuples in domain order.
  for (const ConstantDecl& c : d.constants) {
    std::vector<std::vector<Value>> domains;
    for (const Sort& s : c.argSorts) domains.push_back(s.values());
    std::vector<Value> tuple(domains.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == domains.size()) {
        GroundConstant gc;
        gc.baseName = c.name;
        gc.args = tuple;
        gc.valueSort = c.valueSort;
        gc.kind = c.kind;
        gc.display = c.name;
        if (!tuple.empty()) {
          gc.display += "(";
          for (std::size_t k = 0; k < tuple.size(); ++k)
            gc.display += (k ? "," : "") + tuple[k].str();
          gc.display += ")";
        }
        d.groundSig.add(std::move(gc));
        return;
      }
      for (const Value& v : domains[i]) {
        tuple[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }

  std::vector<CausalLaw> groundLawsOut;
  for (const CausalLaw& law : d.laws) {
    auto vars = lawVars(law);
    forEachFiniteAssignment(vars, [&](const std::map<std::string, TermPtr>& subst) {
      CausalLaw g = law;
      g.head = resolveFormula(d, d.groundSig, substituteVars(law.head, subst), law.loc);
      g.ifPart = resolveFormula(d, d.groundSig, substituteVars(law.ifPart, subst), law.loc);
      g.afterPart =
          resolveFormula(d, d.groundSig, substituteVars(law.afterPart, subst), law.loc);
      groundLawsOut.push_back(std::move(g));
    });
  }
  d.laws = std::move(groundLawsOut);

  // Query formulas are resolved against the same signature; they must be
  // variable-free.
  for (auto& item : d.query.items) {
    if (!freeVars(item.formula).empty())
      throw ParseError(item.loc, "query constraints must not contain variables");
    item.formula = resolveFormula(d, d.groundSig, item.formula, item.loc);
  }

  d.grounded = true;
  return d;
}

LoadedDomain loadDomain(const std::string& text, const std::string& filename) {
  LoadedDomain out;
  out.parsed = parse(text, filename);
  out.ground = groundLaws(expandIncrements(desugar(out.parsed)));
  return out;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

std::string sortRefName(const Sort& s) { return s.name(); }

}  // namespace

std::string printLaw(const CausalLaw& law, const Signature* sig) {
  std::ostringstream os;
  os << "caused " << printFormula(law.head, sig);
  if (!isTruth(law.ifPart)) os << " if " << printFormula(law.ifPart, sig);
  if (law.kind == LawKind::FluentDynamic)
    os << " after " << printFormula(law.afterPart, sig);
  return os.str();
}

std::string printDescription(const ActionDescription& d) {
  std::ostringstream os;
  for (const SortDecl& s : d.sorts) {
    os << ":- sorts " << s.name << " = {";
    for (std::size_t i = 0; i < s.symbols.size(); ++i) os << (i ? "," : "") << s.symbols[i];
    os << "}.\n";
  }
  for (const ConstantDecl& c : d.constants) {
    os << ":- constants " << c.name;
    if (!c.argSorts.empty()) {
      os << "(";
      for (std::size_t i = 0; i < c.argSorts.size(); ++i)
        os << (i ? "," : "") << sortRefName(c.argSorts[i]);
      os << ")";
    }
    os << " :: ";
    switch (c.kind) {
      case ConstKind::SimpleFluent: os << (c.additive ? "additiveFluent" : "simpleFluent"); break;
      case ConstKind::SdFluent: os << "sdFluent"; break;
      case ConstKind::Action: os << "action"; break;
      case ConstKind::Rigid: os << "rigid"; break;
    }
    os << "(" << sortRefName(c.valueSort) << ").\n";
  }
  for (const VarDecl& v : d.variables)
    os << ":- variables " << v.name << " :: " << sortRefName(v.sort) << ".\n";
  for (const ParamDef& p : d.parameters) {
    os << ":- parameters " << p.name;
    if (!p.args.empty()) {
      os << "(";
      for (std::size_t i = 0; i < p.args.size(); ++i) os << (i ? "," : "") << p.args[i].str();
      os << ")";
    }
    os << " = " << decimalString(p.value, 40) << ".\n";
  }
  for (const Statement& st : d.statements) {
    switch (st.kind) {
      case Statement::Kind::Caused:
        os << "caused " << printFormula(st.head);
        if (!isTruth(st.ifPart)) os << " if " << printFormula(st.ifPart);
        if (st.afterPart) os << " after " << printFormula(st.afterPart);
        break;
      case Statement::Kind::Constraint:
        os << "constraint " << printFormula(st.head);
        if (st.afterPart) os << " after " << printFormula(st.afterPart);
        break;
      case Statement::Kind::Always: os << "always " << printFormula(st.head); break;
      case Statement::Kind::Default: os << "default " << printFormula(st.defaultAtom); break;
      case Statement::Kind::Inertial:
      case Statement::Kind::Exogenous:
        os << (st.kind == Statement::Kind::Inertial ? "inertial " : "exogenous ");
        for (std::size_t i = 0; i < st.constants.size(); ++i)
          os << (i ? ", " : "") << printTerm(st.constants[i]);
        break;
      case Statement::Kind::Causes:
        os << printTerm(st.trigger) << " causes " << printFormula(st.head);
        break;
      case Statement::Kind::Increments:
        os << printTerm(st.trigger) << " increments " << printTerm(st.target) << " by "
           << printTerm(st.amount);
        if (!isTruth(st.ifPart)) os << " if " << printFormula(st.ifPart);
        break;
    }
    os << ".\n";
  }
  // Post-desugar descriptions print their laws in the caused form.
  for (const CausalLaw& law : d.laws)
    os << printLaw(law, d.grounded ? &d.groundSig : nullptr) << ".\n";
  for (const IncrementLaw& inc : d.increments) {
    os << printTerm(inc.trigger) << " increments " << printTerm(inc.target) << " by "
       << printTerm(inc.amount);
    if (!isTruth(inc.cond)) os << " if " << printFormula(inc.cond);
    os << ".\n";
  }
  if (d.query.present()) {
    os << ":- query";
    bool first = true;
    auto sep = [&]() -> std::ostringstream& {
      os << (first ? " " : ";\n   ");
      first = false;
      return os;
    };
    if (d.query.maxStep >= 0) {
      sep() << "maxstep :: " << d.query.minStep;
      if (d.query.maxStep != d.query.minStep) os << ".." << d.query.maxStep;
    }
    for (const auto& item : d.query.items) {
      switch (item.at) {
        case QuerySpec::Item::At::Step: sep() << item.step << ": "; break;
        case QuerySpec::Item::At::MaxStep: sep() << "maxstep: "; break;
        case QuerySpec::Item::At::Each: sep() << "each: "; break;
      }
      os << printFormula(item.formula, d.grounded ? &d.groundSig : nullptr);
    }
    os << ".\n";
  }
  return os.str();
}

}  // namespace cplusmt
