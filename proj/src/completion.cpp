#include "cplusmt/completion.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cplusmt/tightness.hpp"

namespace cplusmt {

// ---------------------------------------------------------------------------
// Formula cleanup
// ---------------------------------------------------------------------------

FormulaPtr stripDoubleNegation(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Falsum:
    case Formula::Kind::Equal:
    case Formula::Kind::Cmp: return f;
    case Formula::Kind::And: return fAnd(stripDoubleNegation(f->f), stripDoubleNegation(f->g));
    case Formula::Kind::Or: return fOr(stripDoubleNegation(f->f), stripDoubleNegation(f->g));
    case Formula::Kind::Implies: {
      FormulaPtr inner, inner2;
      if (isNegation(f, &inner) && isNegation(inner, &inner2) && !isFalsum(inner2))
        return stripDoubleNegation(inner2);
      return fImplies(stripDoubleNegation(f->f), stripDoubleNegation(f->g));
    }
    case Formula::Kind::Forall:
      return fForall(f->var, f->varSort, stripDoubleNegation(f->f));
    case Formula::Kind::Exists:
      return fExists(f->var, f->varSort, stripDoubleNegation(f->f));
  }
  return f;
}

FormulaPtr simplify(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Falsum: return f;
    case Formula::Kind::Equal:
      if (termEquals(f->lhs, f->rhs)) return truth();
      return f;
    case Formula::Kind::Cmp: return f;
    case Formula::Kind::And: {
      std::vector<FormulaPtr> parts;
      flattenAnd(f, parts);
      std::vector<FormulaPtr> kept;
      for (auto& p : parts) {
        FormulaPtr s = simplify(p);
        if (isTruth(s)) continue;
        if (isFalsum(s)) return falsum();
        bool dup = false;
        for (const auto& k : kept) dup |= formulaEquals(k, s);
        if (!dup) kept.push_back(s);
      }
      return conjoin(kept);
    }
    case Formula::Kind::Or: {
      std::vector<FormulaPtr> parts;
      flattenOr(f, parts);
      std::vector<FormulaPtr> kept;
      for (auto& p : parts) {
        FormulaPtr s = simplify(p);
        if (isFalsum(s)) continue;
        if (isTruth(s)) return truth();
        bool dup = false;
        for (const auto& k : kept) dup |= formulaEquals(k, s);
        if (!dup) kept.push_back(s);
      }
      return disjoin(kept);
    }
    case Formula::Kind::Implies: {
      if (isTruth(f)) return f;
      FormulaPtr a = simplify(f->f);
      FormulaPtr b = simplify(f->g);
      if (isFalsum(a)) return truth();
      if (isTruth(a)) return b;
      if (isTruth(b)) return truth();
      if (formulaEquals(a, b)) return truth();
      return fImplies(a, b);
    }
    case Formula::Kind::Forall: {
      FormulaPtr b = simplify(f->f);
      if (!mentionsVar(b, f->var)) return b;
      return fForall(f->var, f->varSort, b);
    }
    case Formula::Kind::Exists: {
      FormulaPtr b = simplify(f->f);
      if (!mentionsVar(b, f->var)) return b;
      return fExists(f->var, f->varSort, b);
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Clark normal form
// ---------------------------------------------------------------------------

namespace {

std::string freshVarName(const std::string& base, const std::vector<std::string>& taken) {
  if (std::find(taken.begin(), taken.end(), base) == taken.end()) return base;
  for (int i = 0;; ++i) {
    std::string cand = base + std::to_string(i);
    if (std::find(taken.begin(), taken.end(), cand) == taken.end()) return cand;
  }
}

}  // namespace

ClarkProgram toClarkNormalForm(const TimedProgram& p) {
  ClarkProgram out;
  out.sig = &p.sig;
  std::map<int, std::size_t> groupIndex;
  for (int id : p.intensional) {
    groupIndex[id] = out.groups.size();
    DefinitionGroup g;
    g.constantId = id;
    g.valueSort = p.sig.at(id).valueSort;
    std::vector<std::string> taken;
    g.valueVar = "x";  // renamed per case below when clashing
    out.groups.push_back(std::move(g));
  }

  for (const TimedRule& r : p.rules) {
    if (isFalsum(r.head)) {
      out.constraints.push_back({r.vars, r.body, falsum(), r.label});
      continue;
    }
    int c = r.head->lhs->constId;
    auto it = groupIndex.find(c);
    if (it == groupIndex.end()) {
      // Head constant is not intensional: the rule is a classical conjunct
      // (splitting condition) and must not support any intensional constant.
      std::vector<int> sp = strictlyPositiveConstants(r.formula());
      for (int id : sp)
        if (p.isIntensional(id))
          throw Error("rule '" + r.label +
                      "' has a non-intensional head but a strictly positive "
                      "occurrence of intensional constant " + p.sig.at(id).display);
      out.constraints.push_back({r.vars, r.body, r.head, r.label});
      continue;
    }
    DefinitionGroup& g = out.groups[it->second];
    DefinitionCase cs;
    // Rename the head value variable to the group variable; the remaining
    // rule variables become case-local.
    std::vector<std::string> names;
    for (const auto& [n, s] : r.vars) names.push_back(n);
    std::string y = freshVarName("x", names);
    if (g.cases.empty()) g.valueVar = y;
    y = g.valueVar;

    FormulaPtr body = r.body;
    TermPtr value = r.head->rhs;  // a variable or a background term
    if (value->kind == Term::Kind::Var) {
      body = substituteVar(body, value->name, tVar(y, g.valueSort));
      for (const auto& [n, s] : r.vars)
        if (n != value->name) cs.vars.emplace_back(n, s);
    } else {
      body = isTruth(body) ? fEq(tVar(y, g.valueSort), value)
                           : fAnd(fEq(tVar(y, g.valueSort), value), body);
      cs.vars = r.vars;
    }
    cs.body = body;
    g.cases.push_back(std::move(cs));
  }
  return out;
}

namespace {

// Caveat: valueVar is chosen per group before the cases are seen, so make
// sure no case-local variable shadows it.
void renameClashes(ClarkProgram& p) {
  for (DefinitionGroup& g : p.groups) {
    for (DefinitionCase& cs : g.cases) {
      for (auto& [name, sort] : cs.vars) {
        if (name != g.valueVar) continue;
        std::vector<std::string> taken{g.valueVar};
        for (const auto& [n, s] : cs.vars) taken.push_back(n);
        std::string fresh = freshVarName(name + "'", taken);
        cs.body = substituteVar(cs.body, name, tVar(fresh, sort));
        name = fresh;
      }
    }
  }
}

}  // namespace

FormulaPtr complete(const ClarkProgram& p) {
  std::vector<FormulaPtr> parts;
  for (const DefinitionGroup& g : p.groups) {
    std::vector<FormulaPtr> cases;
    for (const DefinitionCase& cs : g.cases) {
      FormulaPtr body = cs.body;
      for (auto it = cs.vars.rbegin(); it != cs.vars.rend(); ++it)
        body = fExists(it->first, it->second, body);
      cases.push_back(body);
    }
    FormulaPtr lhs = fEq(tConst(g.constantId), tVar(g.valueVar, g.valueSort));
    parts.push_back(fForall(g.valueVar, g.valueSort, fIff(lhs, disjoin(cases))));
  }
  for (const ConstraintItem& c : p.constraints) {
    FormulaPtr body = isFalsum(c.head) ? fNot(c.body) : fImplies(c.body, c.head);
    if (isTruth(c.body) && !isFalsum(c.head)) body = c.head;
    for (auto it = c.vars.rbegin(); it != c.vars.rend(); ++it)
      body = fForall(it->first, it->second, body);
    parts.push_back(body);
  }
  return conjoin(parts);
}

// ---------------------------------------------------------------------------
// Definitional variable elimination
// ---------------------------------------------------------------------------

namespace {

struct CaseShape {
  bool solved = false;
  TermPtr value;      // e with y = e, free of y
  FormulaPtr rest;    // remaining body, y substituted away
  FormulaPtr residual;  // non-definitional leftover (quantified), when !solved
  std::vector<std::pair<std::string, Sort>> residualVars;
};

// Left-to-right fixpoint: find a conjunct v = e or e = v with v an
// eliminable variable not occurring in e, substitute everywhere (including
// the carried formula, when given), drop the conjunct, repeat.
std::vector<FormulaPtr> eliminateVars(std::vector<FormulaPtr> conjs,
                                      std::vector<std::pair<std::string, Sort>>& vars,
                                      FormulaPtr* carried = nullptr) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < conjs.size() && !changed; ++i) {
      const FormulaPtr& cj = conjs[i];
      if (cj->kind != Formula::Kind::Equal) continue;
      for (int side = 0; side < 2 && !changed; ++side) {
        const TermPtr& l = side == 0 ? cj->lhs : cj->rhs;
        const TermPtr& r = side == 0 ? cj->rhs : cj->lhs;
        if (l->kind != Term::Kind::Var) continue;
        auto vit = std::find_if(vars.begin(), vars.end(),
                                [&](const auto& v) { return v.first == l->name; });
        if (vit == vars.end()) continue;
        if (mentionsVar(r, l->name)) continue;
        std::string name = l->name;
        TermPtr repl = r;
        vars.erase(vit);
        std::vector<FormulaPtr> next;
        for (std::size_t k = 0; k < conjs.size(); ++k) {
          if (k == i) continue;
          next.push_back(substituteVar(conjs[k], name, repl));
        }
        conjs = std::move(next);
        if (carried) *carried = substituteVar(*carried, name, repl);
        changed = true;
      }
    }
  }
  return conjs;
}

CaseShape analyzeCase(const DefinitionGroup& g, const DefinitionCase& cs) {
  CaseShape shape;
  FormulaPtr body = simplify(stripDoubleNegation(cs.body));
  std::vector<FormulaPtr> conjs;
  if (!isTruth(body)) flattenAnd(body, conjs);
  std::vector<std::pair<std::string, Sort>> vars = cs.vars;
  conjs = eliminateVars(conjs, vars);

  // Solve for the group value variable itself.
  for (std::size_t i = 0; i < conjs.size(); ++i) {
    const FormulaPtr& cj = conjs[i];
    if (cj->kind != Formula::Kind::Equal) continue;
    for (int side = 0; side < 2; ++side) {
      const TermPtr& l = side == 0 ? cj->lhs : cj->rhs;
      const TermPtr& r = side == 0 ? cj->rhs : cj->lhs;
      if (l->kind != Term::Kind::Var || l->name != g.valueVar) continue;
      if (mentionsVar(r, g.valueVar)) continue;
      shape.solved = true;
      shape.value = r;
      std::vector<FormulaPtr> rest;
      for (std::size_t k = 0; k < conjs.size(); ++k) {
        if (k == i) continue;
        rest.push_back(substituteVar(conjs[k], g.valueVar, r));
      }
      // Leftover case variables stay existential inside the rest.
      FormulaPtr restF = simplify(conjoin(rest.empty() ? std::vector<FormulaPtr>{truth()}
                                                       : rest));
      for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        if (mentionsVar(restF, it->first)) restF = fExists(it->first, it->second, restF);
      shape.rest = restF;
      return shape;
    }
    if (shape.solved) break;
  }
  shape.residual = simplify(conjoin(conjs.empty() ? std::vector<FormulaPtr>{truth()} : conjs));
  shape.residualVars = vars;
  return shape;
}

bool bodyEntailsAtom(const FormulaPtr& body, const FormulaPtr& atom) {
  // Syntactic check: the head atom (modulo equation orientation) appears as
  // a conjunct of the body, making the implication trivially valid.
  std::vector<FormulaPtr> conjs;
  flattenAnd(body, conjs);
  for (const auto& cj : conjs) {
    if (formulaEquals(cj, atom)) return true;
    if (cj->kind == Formula::Kind::Equal && atom->kind == Formula::Kind::Equal &&
        termEquals(cj->lhs, atom->rhs) && termEquals(cj->rhs, atom->lhs))
      return true;
  }
  return false;
}

}  // namespace

FormulaPtr CompletedFormula::conjunction() const {
  std::vector<FormulaPtr> fs;
  for (const auto& [label, f] : parts) fs.push_back(f);
  return conjoin(fs);
}

CompletedFormula eliminateDefinitionalVariables(const ClarkProgram& cp) {
  ClarkProgram p = cp;
  renameClashes(p);
  CompletedFormula out;
  for (const DefinitionGroup& g : p.groups) {
    const std::string label = "definition of " + p.sig->at(g.constantId).display;
    std::vector<CaseShape> shapes;
    bool allSolved = true;
    for (const DefinitionCase& cs : g.cases) {
      shapes.push_back(analyzeCase(g, cs));
      allSolved &= shapes.back().solved;
    }
    if (!allSolved) {
      // Fall back to the quantified biconditional for this group.
      ClarkProgram single;
      single.sig = p.sig;
      single.groups.push_back(g);
      out.parts.emplace_back(label, simplify(stripDoubleNegation(complete(single))));
      out.quantifierFree = false;
      continue;
    }
    TermPtr c = tConst(g.constantId);
    std::vector<FormulaPtr> parts;
    std::vector<FormulaPtr> exhaustive;
    for (const CaseShape& s : shapes) {
      FormulaPtr headAtom = fEq(c, s.value);
      if (!isTruth(s.rest) && !bodyEntailsAtom(s.rest, headAtom))
        parts.push_back(simplify(fImplies(s.rest, headAtom)));
      else if (isTruth(s.rest))
        parts.push_back(headAtom);  // unconditional case
      exhaustive.push_back(simplify(isTruth(s.rest) ? headAtom : fAnd(headAtom, s.rest)));
      if (hasQuantifier(s.rest)) out.quantifierFree = false;
    }
    parts.push_back(disjoin(exhaustive));
    out.parts.emplace_back(label, simplify(conjoin(parts)));
  }
  for (const ConstraintItem& cst : p.constraints) {
    std::vector<std::pair<std::string, Sort>> vars = cst.vars;
    FormulaPtr body = simplify(stripDoubleNegation(cst.body));
    std::vector<FormulaPtr> conjs;
    if (!isTruth(body)) flattenAnd(body, conjs);
    FormulaPtr headOut = cst.head;
    conjs = eliminateVars(conjs, vars, &headOut);
    FormulaPtr bodyOut = simplify(conjoin(conjs));
    FormulaPtr formula;
    if (isFalsum(headOut))
      formula = simplify(stripDoubleNegation(fNot(bodyOut)));
    else
      formula = simplify(isTruth(bodyOut) ? headOut : fImplies(bodyOut, headOut));
    // Unbound universals stay quantified.
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      if (mentionsVar(formula, it->first)) {
        formula = fForall(it->first, it->second, formula);
        out.quantifierFree = false;
      }
    out.parts.emplace_back(cst.label, formula);
  }
  return out;
}

}  // namespace cplusmt
