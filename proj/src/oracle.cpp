#include "cplusmt/oracle.hpp"

#include <algorithm>
#include <functional>

namespace cplusmt {

namespace {

std::uint64_t domainProduct(const std::vector<std::vector<Value>>& domains,
                            const std::vector<int>& subset, std::uint64_t bound) {
  std::uint64_t prod = 1;
  for (int id : subset) {
    prod *= domains.at(static_cast<std::size_t>(id)).size();
    if (prod > bound) throw EvalError("enumeration bound exceeded");
  }
  return prod;
}

void checkTheory(const FiniteTheory& t) {
  if (!t.sig) throw EvalError("finite theory without a signature");
  if (static_cast<int>(t.domains.size()) != t.sig->size())
    throw EvalError("finite theory needs one domain per constant");
  for (int id = 0; id < t.sig->size(); ++id) {
    if (t.domains[static_cast<std::size_t>(id)].empty())
      throw EvalError("empty domain for constant '" + t.sig->at(id).display + "'");
    for (const Value& v : t.domains[static_cast<std::size_t>(id)])
      if (!t.sig->at(id).valueSort.admits(v))
        throw EvalError("domain value " + v.str() + " outside the sort of '" +
                        t.sig->at(id).display + "'");
  }
  for (int id : t.intensional)
    if (id < 0 || id >= t.sig->size()) throw EvalError("bad intensional constant id");
}

// Enumerates total interpretations in lexicographic domain order.
void forEachInterpretation(const FiniteTheory& t,
                           const std::function<void(const Interpretation&)>& fn) {
  domainProduct(t.domains, [&] {
    std::vector<int> all;
    for (int id = 0; id < t.sig->size(); ++id) all.push_back(id);
    return all;
  }(), t.enumerationBound);
  Interpretation interp(*t.sig);
  std::function<void(int)> rec = [&](int id) {
    if (id == t.sig->size()) {
      fn(interp);
      return;
    }
    for (const Value& v : t.domains[static_cast<std::size_t>(id)]) {
      interp.set(id, v);
      rec(id + 1);
    }
  };
  rec(0);
}

// Evaluates F*(candidate) under interp without materializing the transform:
//   atom*  = atom[c -> candidate(c)] && atom
//   (G -> H)* = (G* -> H*) && (G -> H)
// with conjunction, disjunction and quantifiers applied componentwise.
class StarEvaluator {
 public:
  StarEvaluator(const Interpretation& interp, const std::map<int, Value>& candidate)
      : interp_(interp), candidate_(candidate) {}

  bool evalStar(const FormulaPtr& f) {
    switch (f->kind) {
      case Formula::Kind::Falsum: return false;
      case Formula::Kind::Equal:
      case Formula::Kind::Cmp: return evalAtom(f, true) && evalAtom(f, false);
      case Formula::Kind::And: return evalStar(f->f) && evalStar(f->g);
      case Formula::Kind::Or: return evalStar(f->f) || evalStar(f->g);
      case Formula::Kind::Implies:
        return (!evalStar(f->f) || evalStar(f->g)) && (!evalPlain(f->f) || evalPlain(f->g));
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        if (!f->varSort.finite())
          throw EvalError("cannot enumerate quantifier over sort '" + f->varSort.name() + "'");
        bool forall = f->kind == Formula::Kind::Forall;
        for (const Value& v : f->varSort.values()) {
          bool inst = evalStar(substituteVar(f->f, f->var, tLit(v)));
          if (forall && !inst) return false;
          if (!forall && inst) return true;
        }
        return forall;
      }
    }
    throw EvalError("malformed formula");
  }

  bool evalPlain(const FormulaPtr& f) { return evaluate(f, interp_); }

 private:
  Value evalTermHat(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::Const: {
        auto it = candidate_.find(t->constId);
        return it == candidate_.end() ? interp_.value(t->constId) : it->second;
      }
      case Term::Kind::Arith: {
        Value l = evalTermHat(t->lhs);
        Value r = evalTermHat(t->rhs);
        if (l.kind != Value::Kind::Num || r.kind != Value::Kind::Num)
          throw EvalError("arithmetic on non-numeric value");
        switch (t->op) {
          case ArithOp::Add: return Value::ofNum(l.num + r.num);
          case ArithOp::Sub: return Value::ofNum(l.num - r.num);
          case ArithOp::Mul: return Value::ofNum(l.num * r.num);
          case ArithOp::Div:
            if (r.num == 0) throw EvalError("division by zero");
            return Value::ofNum(l.num / r.num);
        }
        break;
      }
      default: return evalTerm(t, interp_);
    }
    throw EvalError("malformed term");
  }

  bool evalAtom(const FormulaPtr& f, bool hat) {
    Value l = hat ? evalTermHat(f->lhs) : evalTerm(f->lhs, interp_);
    Value r = hat ? evalTermHat(f->rhs) : evalTerm(f->rhs, interp_);
    if (f->kind == Formula::Kind::Equal) return l == r;
    if (l.kind != Value::Kind::Num || r.kind != Value::Kind::Num)
      throw EvalError("comparison on non-numeric value");
    switch (f->cmp) {
      case CmpOp::Lt: return l.num < r.num;
      case CmpOp::Le: return l.num <= r.num;
      case CmpOp::Gt: return l.num > r.num;
      case CmpOp::Ge: return l.num >= r.num;
    }
    return false;
  }

  const Interpretation& interp_;
  const std::map<int, Value>& candidate_;
};

// Enumerates candidate assignments v with v < c relative to interp:
// predicate-like constants range over values <= their current one in the
// false<true order, function constants over their whole domain, and the
// all-equal assignment is skipped.
void forEachSmallerCandidate(const FiniteTheory& t, const Interpretation& interp,
                             const std::function<bool(const std::map<int, Value>&)>& fn) {
  domainProduct(t.domains, t.intensional, t.enumerationBound);
  std::map<int, Value> candidate;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    if (k == t.intensional.size()) {
      bool allEqual = true;
      for (const auto& [id, v] : candidate) allEqual &= v == interp.value(id);
      if (!allEqual && fn(candidate)) stop = true;
      return;
    }
    int id = t.intensional[k];
    bool predLike = id < static_cast<int>(t.predicateLike.size()) &&
                    t.predicateLike[static_cast<std::size_t>(id)];
    for (const Value& v : t.domains[static_cast<std::size_t>(id)]) {
      if (predLike && v.kind == Value::Kind::Bool && v.boolean &&
          !(interp.value(id).kind == Value::Kind::Bool && interp.value(id).boolean))
        continue;  // candidate true only where the current value is true
      candidate[id] = v;
      rec(k + 1);
      if (stop) return;
    }
    candidate.erase(id);
  };
  rec(0);
}

}  // namespace

FiniteTheory makeFiniteTheory(const TimedProgram& p, std::uint64_t bound) {
  FiniteTheory t;
  t.sig = &p.sig;
  t.formula = p.conjunction();
  t.intensional = p.intensional;
  t.enumerationBound = bound;
  for (int id = 0; id < p.sig.size(); ++id) {
    const Sort& s = p.sig.at(id).valueSort;
    if (!s.finite())
      throw EvalError("constant '" + p.sig.at(id).display +
                      "' has an infinite sort; the oracle needs finite domains");
    t.domains.push_back(s.values());
  }
  if (!freeVars(t.formula).empty())
    throw EvalError("oracle formula must be ground (did groundLaws run?)");
  return t;
}

FormulaPtr star(const FormulaPtr& f, const std::map<int, Value>& candidate) {
  auto hat = [&](const FormulaPtr& atom) {
    return mapConstants(atom, [&](int id) -> TermPtr {
      auto it = candidate.find(id);
      return it == candidate.end() ? tConst(id) : tLit(it->second);
    });
  };
  switch (f->kind) {
    case Formula::Kind::Falsum: return f;
    case Formula::Kind::Equal:
    case Formula::Kind::Cmp: return fAnd(hat(f), f);
    case Formula::Kind::And: return fAnd(star(f->f, candidate), star(f->g, candidate));
    case Formula::Kind::Or: return fOr(star(f->f, candidate), star(f->g, candidate));
    case Formula::Kind::Implies:
      return fAnd(fImplies(star(f->f, candidate), star(f->g, candidate)), f);
    case Formula::Kind::Forall:
      return fForall(f->var, f->varSort, star(f->f, candidate));
    case Formula::Kind::Exists:
      return fExists(f->var, f->varSort, star(f->f, candidate));
  }
  return f;
}

std::vector<Interpretation> classicalModels(const FiniteTheory& t) {
  checkTheory(t);
  std::vector<Interpretation> out;
  forEachInterpretation(t, [&](const Interpretation& interp) {
    if (evaluate(t.formula, interp)) out.push_back(interp);
  });
  return out;
}

std::vector<Interpretation> stableModels(const FiniteTheory& t) {
  checkTheory(t);
  std::vector<Interpretation> out;
  forEachInterpretation(t, [&](const Interpretation& interp) {
    if (!evaluate(t.formula, interp)) return;
    bool destabilized = false;
    forEachSmallerCandidate(t, interp, [&](const std::map<int, Value>& candidate) {
      StarEvaluator ev(interp, candidate);
      destabilized = ev.evalStar(t.formula);
      return destabilized;  // stop at the first witness
    });
    if (!destabilized) out.push_back(interp);
  });
  return out;
}

namespace {

void checkBooleanTheory(const FiniteTheory& t, const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Falsum: break;
    case Formula::Kind::Equal: {
      if (f->lhs->kind != Term::Kind::Const || f->rhs->kind != Term::Kind::Literal ||
          f->rhs->lit.kind != Value::Kind::Bool || !f->rhs->lit.boolean)
        throw EvalError("the propositional checker needs atoms of the form c=true");
      break;
    }
    case Formula::Kind::Cmp:
      throw EvalError("the propositional checker does not handle comparisons");
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      checkBooleanTheory(t, f->f);
      checkBooleanTheory(t, f->g);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      throw EvalError("the propositional checker needs a quantifier-free formula");
  }
}

// Replaces every maximal subformula not satisfied by interp with falsum.
FormulaPtr reduct(const FormulaPtr& f, const Interpretation& interp) {
  if (!evaluate(f, interp)) return falsum();
  switch (f->kind) {
    case Formula::Kind::And: return fAnd(reduct(f->f, interp), reduct(f->g, interp));
    case Formula::Kind::Or: return fOr(reduct(f->f, interp), reduct(f->g, interp));
    case Formula::Kind::Implies: return fImplies(reduct(f->f, interp), reduct(f->g, interp));
    default: return f;
  }
}

}  // namespace

std::vector<Interpretation> ferrarisStableModels(const FiniteTheory& t) {
  checkTheory(t);
  checkBooleanTheory(t, t.formula);
  for (int id = 0; id < t.sig->size(); ++id)
    if (t.sig->at(id).valueSort.kind() != SortKind::Boolean)
      throw EvalError("the propositional checker needs Boolean constants only");

  std::vector<Interpretation> out;
  forEachInterpretation(t, [&](const Interpretation& interp) {
    if (!evaluate(t.formula, interp)) return;
    FormulaPtr red = reduct(t.formula, interp);
    // Any interpretation below interp on the intensional atoms (strictly,
    // subset-style) that satisfies the reduct refutes stability.
    bool destabilized = false;
    std::vector<int> trueOnes;
    for (int id : t.intensional)
      if (interp.value(id).boolean) trueOnes.push_back(id);
    std::uint64_t subsets = 1;
    for (std::size_t i = 0; i < trueOnes.size(); ++i) {
      subsets *= 2;
      if (subsets > t.enumerationBound) throw EvalError("enumeration bound exceeded");
    }
    for (std::uint64_t mask = 0; mask + 1 < subsets && !destabilized; ++mask) {
      Interpretation smaller = interp;
      for (std::size_t i = 0; i < trueOnes.size(); ++i)
        smaller.set(trueOnes[i], Value::ofBool((mask >> i) & 1));
      destabilized = evaluate(red, smaller);
    }
    if (!destabilized) out.push_back(interp);
  });
  return out;
}

}  // namespace cplusmt
