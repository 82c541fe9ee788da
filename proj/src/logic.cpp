#include "cplusmt/logic.hpp"

#include <algorithm>
#include <sstream>

namespace cplusmt {

// ---------------------------------------------------------------------------
// Values
// ---------------------------------------------------------------------------

Value Value::ofBool(bool b) {
  Value v;
  v.kind = Kind::Bool;
  v.boolean = b;
  return v;
}

Value Value::ofNum(Rational q) {
  Value v;
  v.kind = Kind::Num;
  v.num = std::move(q);
  return v;
}

Value Value::ofSym(std::string s) {
  Value v;
  v.kind = Kind::Sym;
  v.sym = std::move(s);
  return v;
}

bool Value::operator==(const Value& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Bool: return boolean == o.boolean;
    case Kind::Num: return num == o.num;
    case Kind::Sym: return sym == o.sym;
  }
  return false;
}

bool Value::operator<(const Value& o) const {
  if (kind != o.kind) return kind < o.kind;
  switch (kind) {
    case Kind::Bool: return boolean < o.boolean;
    case Kind::Num: return num < o.num;
    case Kind::Sym: return sym < o.sym;
  }
  return false;
}

std::string Value::str() const {
  switch (kind) {
    case Kind::Bool: return boolean ? "true" : "false";
    case Kind::Num: return ratioString(num);
    case Kind::Sym: return sym;
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Sorts
// ---------------------------------------------------------------------------

Sort Sort::boolean() {
  Sort s;
  s.kind_ = SortKind::Boolean;
  s.name_ = "boolean";
  return s;
}

Sort Sort::real() {
  Sort s;
  s.kind_ = SortKind::Real;
  s.name_ = "real";
  return s;
}

Sort Sort::nonNegReal() {
  Sort s;
  s.kind_ = SortKind::NonNegReal;
  s.name_ = "realNonNeg";
  return s;
}

Sort Sort::intRange(long lo, long hi) {
  if (lo > hi) throw SortError("integer range with lo > hi");
  Sort s;
  s.kind_ = SortKind::IntRange;
  s.lo_ = lo;
  s.hi_ = hi;
  s.name_ = std::to_string(lo) + ".." + std::to_string(hi);
  return s;
}

Sort Sort::enumeration(std::string name, std::vector<std::string> symbols) {
  if (symbols.empty()) throw SortError("enum sort '" + name + "' has no symbols");
  for (std::size_t i = 0; i < symbols.size(); ++i)
    for (std::size_t j = i + 1; j < symbols.size(); ++j)
      if (symbols[i] == symbols[j])
        throw SortError("enum sort '" + name + "' repeats symbol " + symbols[i]);
  Sort s;
  s.kind_ = SortKind::Enum;
  s.name_ = std::move(name);
  s.symbols_ = std::make_shared<const std::vector<std::string>>(std::move(symbols));
  return s;
}

bool Sort::finite() const {
  return kind_ == SortKind::Boolean || kind_ == SortKind::Enum || kind_ == SortKind::IntRange;
}

bool Sort::numeric() const {
  return kind_ == SortKind::Real || kind_ == SortKind::NonNegReal || kind_ == SortKind::IntRange;
}

const std::vector<std::string>& Sort::symbols() const {
  static const std::vector<std::string> kEmpty;
  return symbols_ ? *symbols_ : kEmpty;
}

std::vector<Value> Sort::values() const {
  switch (kind_) {
    case SortKind::Boolean: return {Value::ofBool(false), Value::ofBool(true)};
    case SortKind::Enum: {
      std::vector<Value> out;
      for (const auto& s : symbols()) out.push_back(Value::ofSym(s));
      return out;
    }
    case SortKind::IntRange: {
      std::vector<Value> out;
      for (long v = lo_; v <= hi_; ++v) out.push_back(Value::ofNum(Rational(v)));
      return out;
    }
    default: throw SortError("sort '" + name_ + "' is not finite");
  }
}

bool Sort::admits(const Value& v) const {
  switch (kind_) {
    case SortKind::Boolean: return v.kind == Value::Kind::Bool;
    case SortKind::Enum:
      return v.kind == Value::Kind::Sym &&
             std::find(symbols().begin(), symbols().end(), v.sym) != symbols().end();
    case SortKind::Real: return v.kind == Value::Kind::Num;
    case SortKind::NonNegReal: return v.kind == Value::Kind::Num && v.num >= 0;
    case SortKind::IntRange:
      return v.kind == Value::Kind::Num && denominator(v.num) == 1 && v.num >= lo_ &&
             v.num <= hi_;
  }
  return false;
}

bool Sort::operator==(const Sort& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case SortKind::Enum: return name_ == o.name_ && symbols() == o.symbols();
    case SortKind::IntRange: return lo_ == o.lo_ && hi_ == o.hi_;
    default: return true;
  }
}

// ---------------------------------------------------------------------------
// Signature
// ---------------------------------------------------------------------------

bool isFluentKind(ConstKind k) {
  return k == ConstKind::SimpleFluent || k == ConstKind::SdFluent;
}

int Signature::add(GroundConstant c) {
  if (index_.count(c.display))
    throw DeclError("constant '" + c.display + "' declared twice");
  int id = static_cast<int>(consts_.size());
  index_[c.display] = id;
  consts_.push_back(std::move(c));
  return id;
}

int Signature::find(const std::string& display) const {
  auto it = index_.find(display);
  return it == index_.end() ? -1 : it->second;
}

int Signature::require(const std::string& display) const {
  int id = find(display);
  if (id < 0) throw DeclError("undeclared constant '" + display + "'");
  return id;
}

// ---------------------------------------------------------------------------
// Term builders
// ---------------------------------------------------------------------------

TermPtr tLit(Value v) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Literal;
  t->lit = std::move(v);
  return t;
}

TermPtr tNum(Rational q) { return tLit(Value::ofNum(std::move(q))); }
TermPtr tBool(bool b) { return tLit(Value::ofBool(b)); }
TermPtr tSym(std::string s) { return tLit(Value::ofSym(std::move(s))); }

TermPtr tVar(std::string name, Sort sort) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Var;
  t->name = std::move(name);
  t->varSort = std::move(sort);
  return t;
}

TermPtr tConst(int id) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Const;
  t->constId = id;
  return t;
}

TermPtr tApply(std::string name, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Apply;
  t->name = std::move(name);
  t->args = std::move(args);
  return t;
}

TermPtr tParam(std::string name, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Param;
  t->name = std::move(name);
  t->args = std::move(args);
  return t;
}

TermPtr tArith(ArithOp op, TermPtr lhs, TermPtr rhs) {
  if (op == ArithOp::Div && rhs->kind == Term::Kind::Literal &&
      rhs->lit.kind == Value::Kind::Num && rhs->lit.num == 0)
    throw SortError("division by the literal 0");
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Arith;
  t->op = op;
  t->lhs = std::move(lhs);
  t->rhs = std::move(rhs);
  return t;
}

// ---------------------------------------------------------------------------
// Formula builders
// ---------------------------------------------------------------------------

FormulaPtr falsum() {
  static const FormulaPtr kFalsum = [] {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Falsum;
    return f;
  }();
  return kFalsum;
}

FormulaPtr fImplies(FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Implies;
  f->f = std::move(a);
  f->g = std::move(b);
  return f;
}

FormulaPtr truth() {
  static const FormulaPtr kTruth = fImplies(falsum(), falsum());
  return kTruth;
}

FormulaPtr fEq(TermPtr l, TermPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Equal;
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

FormulaPtr fCmp(CmpOp op, TermPtr l, TermPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Cmp;
  f->cmp = op;
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

FormulaPtr fAnd(FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::And;
  f->f = std::move(a);
  f->g = std::move(b);
  return f;
}

FormulaPtr fOr(FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Or;
  f->f = std::move(a);
  f->g = std::move(b);
  return f;
}

FormulaPtr fNot(FormulaPtr a) { return fImplies(std::move(a), falsum()); }

FormulaPtr fIff(FormulaPtr a, FormulaPtr b) {
  return fAnd(fImplies(a, b), fImplies(b, a));
}

FormulaPtr fForall(std::string var, Sort sort, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Forall;
  f->var = std::move(var);
  f->varSort = std::move(sort);
  f->f = std::move(body);
  return f;
}

FormulaPtr fExists(std::string var, Sort sort, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Exists;
  f->var = std::move(var);
  f->varSort = std::move(sort);
  f->f = std::move(body);
  return f;
}

FormulaPtr conjoin(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return truth();
  FormulaPtr acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = fAnd(acc, fs[i]);
  return acc;
}

FormulaPtr disjoin(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return falsum();
  FormulaPtr acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = fOr(acc, fs[i]);
  return acc;
}

bool isFalsum(const FormulaPtr& f) { return f->kind == Formula::Kind::Falsum; }

bool isNegation(const FormulaPtr& f, FormulaPtr* inner) {
  if (f->kind != Formula::Kind::Implies || !isFalsum(f->g)) return false;
  if (inner) *inner = f->f;
  return true;
}

bool isTruth(const FormulaPtr& f) {
  FormulaPtr inner;
  return isNegation(f, &inner) && isFalsum(inner);
}

// ---------------------------------------------------------------------------
// Structural equality
// ---------------------------------------------------------------------------

bool termEquals(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Literal: return a->lit == b->lit;
    case Term::Kind::Var: return a->name == b->name;
    case Term::Kind::Const: return a->constId == b->constId;
    case Term::Kind::Arith:
      return a->op == b->op && termEquals(a->lhs, b->lhs) && termEquals(a->rhs, b->rhs);
    case Term::Kind::Apply:
    case Term::Kind::Param: {
      if (a->name != b->name || a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!termEquals(a->args[i], b->args[i])) return false;
      return true;
    }
  }
  return false;
}

bool formulaEquals(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Falsum: return true;
    case Formula::Kind::Equal: return termEquals(a->lhs, b->lhs) && termEquals(a->rhs, b->rhs);
    case Formula::Kind::Cmp:
      return a->cmp == b->cmp && termEquals(a->lhs, b->lhs) && termEquals(a->rhs, b->rhs);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return formulaEquals(a->f, b->f) && formulaEquals(a->g, b->g);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return a->var == b->var && a->varSort == b->varSort && formulaEquals(a->f, b->f);
  }
  return false;
}

void flattenAnd(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (f->kind == Formula::Kind::And) {
    flattenAnd(f->f, out);
    flattenAnd(f->g, out);
  } else {
    out.push_back(f);
  }
}

void flattenOr(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (f->kind == Formula::Kind::Or) {
    flattenOr(f->f, out);
    flattenOr(f->g, out);
  } else {
    out.push_back(f);
  }
}

// ---------------------------------------------------------------------------
// Variables, substitution, constant mapping
// ---------------------------------------------------------------------------

namespace {

void freeVarsTerm(const TermPtr& t, std::vector<std::pair<std::string, Sort>>& out,
                  std::vector<std::string>& bound) {
  switch (t->kind) {
    case Term::Kind::Var:
      if (std::find(bound.begin(), bound.end(), t->name) == bound.end() &&
          std::find_if(out.begin(), out.end(),
                       [&](const auto& p) { return p.first == t->name; }) == out.end())
        out.emplace_back(t->name, t->varSort);
      break;
    case Term::Kind::Arith:
      freeVarsTerm(t->lhs, out, bound);
      freeVarsTerm(t->rhs, out, bound);
      break;
    case Term::Kind::Apply:
    case Term::Kind::Param:
      for (const auto& a : t->args) freeVarsTerm(a, out, bound);
      break;
    default: break;
  }
}

void freeVarsFormula(const FormulaPtr& f, std::vector<std::pair<std::string, Sort>>& out,
                     std::vector<std::string>& bound) {
  switch (f->kind) {
    case Formula::Kind::Falsum: break;
    case Formula::Kind::Equal:
    case Formula::Kind::Cmp:
      freeVarsTerm(f->lhs, out, bound);
      freeVarsTerm(f->rhs, out, bound);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      freeVarsFormula(f->f, out, bound);
      freeVarsFormula(f->g, out, bound);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      bound.push_back(f->var);
      freeVarsFormula(f->f, out, bound);
      bound.pop_back();
      break;
  }
}

}  // namespace

std::vector<std::pair<std::string, Sort>> freeVars(const FormulaPtr& f) {
  std::vector<std::pair<std::string, Sort>> out;
  std::vector<std::string> bound;
  freeVarsFormula(f, out, bound);
  return out;
}

std::vector<std::pair<std::string, Sort>> freeVars(const TermPtr& t) {
  std::vector<std::pair<std::string, Sort>> out;
  std::vector<std::string> bound;
  freeVarsTerm(t, out, bound);
  return out;
}

bool mentionsVar(const TermPtr& t, const std::string& var) {
  for (const auto& [name, sort] : freeVars(t))
    if (name == var) return true;
  return false;
}

bool mentionsVar(const FormulaPtr& f, const std::string& var) {
  for (const auto& [name, sort] : freeVars(f))
    if (name == var) return true;
  return false;
}

TermPtr substituteVar(const TermPtr& t, const std::string& var, const TermPtr& repl) {
  switch (t->kind) {
    case Term::Kind::Var: return t->name == var ? repl : t;
    case Term::Kind::Arith: {
      auto l = substituteVar(t->lhs, var, repl);
      auto r = substituteVar(t->rhs, var, repl);
      if (l == t->lhs && r == t->rhs) return t;
      return tArith(t->op, l, r);
    }
    case Term::Kind::Apply:
    case Term::Kind::Param: {
      std::vector<TermPtr> args;
      bool changed = false;
      for (const auto& a : t->args) {
        args.push_back(substituteVar(a, var, repl));
        changed |= args.back() != a;
      }
      if (!changed) return t;
      return t->kind == Term::Kind::Apply ? tApply(t->name, std::move(args))
                                          : tParam(t->name, std::move(args));
    }
    default: return t;
  }
}

FormulaPtr substituteVar(const FormulaPtr& f, const std::string& var, const TermPtr& repl) {
  switch (f->kind) {
    case Formula::Kind::Falsum: return f;
    case Formula::Kind::Equal:
    case Formula::Kind::Cmp: {
      auto l = substituteVar(f->lhs, var, repl);
      auto r = substituteVar(f->rhs, var, repl);
      if (l == f->lhs && r == f->rhs) return f;
      return f->kind == Formula::Kind::Equal ? fEq(l, r) : fCmp(f->cmp, l, r);
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      auto a = substituteVar(f->f, var, repl);
      auto b = substituteVar(f->g, var, repl);
      if (a == f->f && b == f->g) return f;
      if (f->kind == Formula::Kind::And) return fAnd(a, b);
      if (f->kind == Formula::Kind::Or) return fOr(a, b);
      return fImplies(a, b);
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (f->var == var) return f;  // shadowed
      auto b = substituteVar(f->f, var, repl);
      if (b == f->f) return f;
      return f->kind == Formula::Kind::Forall ? fForall(f->var, f->varSort, b)
                                              : fExists(f->var, f->varSort, b);
    }
  }
  return f;
}

TermPtr mapConstants(const TermPtr& t, const std::function<TermPtr(int)>& fn) {
  switch (t->kind) {
    case Term::Kind::Const: return fn(t->constId);
    case Term::Kind::Arith:
      return tArith(t->op, mapConstants(t->lhs, fn), mapConstants(t->rhs, fn));
    case Term::Kind::Apply:
    case Term::Kind::Param: {
      std::vector<TermPtr> args;
      for (const auto& a : t->args) args.push_back(mapConstants(a, fn));
      return t->kind == Term::Kind::Apply ? tApply(t->name, std::move(args))
                                          : tParam(t->name, std::move(args));
    }
    default: return t;
  }
}

FormulaPtr mapConstants(const FormulaPtr& f, const std::function<TermPtr(int)>& fn) {
  switch (f->kind) {
    case Formula::Kind::Falsum: return f;
    case Formula::Kind::Equal: return fEq(mapConstants(f->lhs, fn), mapConstants(f->rhs, fn));
    case Formula::Kind::Cmp:
      return fCmp(f->cmp, mapConstants(f->lhs, fn), mapConstants(f->rhs, fn));
    case Formula::Kind::And: return fAnd(mapConstants(f->f, fn), mapConstants(f->g, fn));
    case Formula::Kind::Or: return fOr(mapConstants(f->f, fn), mapConstants(f->g, fn));
    case Formula::Kind::Implies:
      return fImplies(mapConstants(f->f, fn), mapConstants(f->g, fn));
    case Formula::Kind::Forall:
      return fForall(f->var, f->varSort, mapConstants(f->f, fn));
    case Formula::Kind::Exists:
      return fExists(f->var, f->varSort, mapConstants(f->f, fn));
  }
  return f;
}

void collectConstants(const TermPtr& t, std::vector<int>& out) {
  switch (t->kind) {
    case Term::Kind::Const: out.push_back(t->constId); break;
    case Term::Kind::Arith:
      collectConstants(t->lhs, out);
      collectConstants(t->rhs, out);
      break;
    case Term::Kind::Apply:
    case Term::Kind::Param:
      for (const auto& a : t->args) collectConstants(a, out);
      break;
    default: break;
  }
}

void collectConstants(const FormulaPtr& f, std::vector<int>& out) {
  switch (f->kind) {
    case Formula::Kind::Falsum: break;
    case Formula::Kind::Equal:
    case Formula::Kind::Cmp:
      collectConstants(f->lhs, out);
      collectConstants(f->rhs, out);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collectConstants(f->f, out);
      collectConstants(f->g, out);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: collectConstants(f->f, out); break;
  }
}

// ---------------------------------------------------------------------------
// Interpretations
// ---------------------------------------------------------------------------

Interpretation::Interpretation(const Signature& sig)
    : sig_(&sig), vals_(static_cast<std::size_t>(sig.size())) {}

void Interpretation::set(int id, Value v) {
  const GroundConstant& c = sig_->at(id);
  if (!c.valueSort.admits(v))
    throw SortError("value " + v.str() + " not in the domain of " + c.display);
  vals_.at(static_cast<std::size_t>(id)) = std::move(v);
}

bool Interpretation::has(int id) const {
  return vals_.at(static_cast<std::size_t>(id)).has_value();
}

const Value& Interpretation::value(int id) const {
  const auto& slot = vals_.at(static_cast<std::size_t>(id));
  if (!slot) throw EvalError("no value for constant '" + sig_->at(id).display + "'");
  return *slot;
}

bool Interpretation::total() const {
  for (const auto& v : vals_)
    if (!v) return false;
  return true;
}

bool Interpretation::operator<(const Interpretation& o) const {
  for (std::size_t i = 0; i < vals_.size() && i < o.vals_.size(); ++i) {
    const bool hb = vals_[i].has_value(), ob = o.vals_[i].has_value();
    if (hb != ob) return ob;
    if (hb && !(*vals_[i] == *o.vals_[i])) return *vals_[i] < *o.vals_[i];
  }
  return vals_.size() < o.vals_.size();
}

std::string Interpretation::str() const {
  std::ostringstream os;
  os << "{";
  for (int i = 0; i < sig_->size(); ++i) {
    if (i) os << ", ";
    os << sig_->at(i).display << "=" << (has(i) ? value(i).str() : "?");
  }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

Value evalTerm(const TermPtr& t, const Interpretation& interp) {
  switch (t->kind) {
    case Term::Kind::Literal: return t->lit;
    case Term::Kind::Const: return interp.value(t->constId);
    case Term::Kind::Var: throw EvalError("free variable '" + t->name + "' in evaluation");
    case Term::Kind::Apply:
      throw EvalError("unresolved constant application '" + t->name + "'");
    case Term::Kind::Param: throw EvalError("unresolved parameter '" + t->name + "'");
    case Term::Kind::Arith: {
      Value l = evalTerm(t->lhs, interp);
      Value r = evalTerm(t->rhs, interp);
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
    }
  }
  throw EvalError("malformed term");
}

namespace {

bool valueEq(const Value& l, const Value& r, const Rational& tol) {
  if (l.kind == Value::Kind::Num && r.kind == Value::Kind::Num) {
    Rational d = l.num - r.num;
    if (d < 0) d = -d;
    return d <= tol;
  }
  return l == r;
}

}  // namespace

bool evaluate(const FormulaPtr& f, const Interpretation& interp, const EvalOptions& opts) {
  switch (f->kind) {
    case Formula::Kind::Falsum: return false;
    case Formula::Kind::Equal:
      return valueEq(evalTerm(f->lhs, interp), evalTerm(f->rhs, interp), opts.tolerance);
    case Formula::Kind::Cmp: {
      Value l = evalTerm(f->lhs, interp);
      Value r = evalTerm(f->rhs, interp);
      if (l.kind != Value::Kind::Num || r.kind != Value::Kind::Num)
        throw EvalError("comparison on non-numeric value");
      switch (f->cmp) {
        case CmpOp::Lt: return l.num < r.num + opts.tolerance;
        case CmpOp::Le: return l.num <= r.num + opts.tolerance;
        case CmpOp::Gt: return l.num + opts.tolerance > r.num;
        case CmpOp::Ge: return l.num + opts.tolerance >= r.num;
      }
      return false;
    }
    case Formula::Kind::And: return evaluate(f->f, interp, opts) && evaluate(f->g, interp, opts);
    case Formula::Kind::Or: return evaluate(f->f, interp, opts) || evaluate(f->g, interp, opts);
    case Formula::Kind::Implies:
      return !evaluate(f->f, interp, opts) || evaluate(f->g, interp, opts);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (!f->varSort.finite())
        throw EvalError("cannot evaluate quantifier over infinite sort '" +
                        f->varSort.name() + "'");
      bool forall = f->kind == Formula::Kind::Forall;
      for (const Value& v : f->varSort.values()) {
        bool inst = evaluate(substituteVar(f->f, f->var, tLit(v)), interp, opts);
        if (forall && !inst) return false;
        if (!forall && inst) return true;
      }
      return forall;
    }
  }
  throw EvalError("malformed formula");
}

// ---------------------------------------------------------------------------
// Grounding
// ---------------------------------------------------------------------------

SortEnv defaultSortEnv() {
  return [](const Sort& s) -> std::optional<std::vector<Value>> {
    if (s.finite()) return s.values();
    return std::nullopt;
  };
}

FormulaPtr ground(const FormulaPtr& f, const SortEnv& env) {
  switch (f->kind) {
    case Formula::Kind::Falsum:
    case Formula::Kind::Equal:
    case Formula::Kind::Cmp: return f;
    case Formula::Kind::And: return fAnd(ground(f->f, env), ground(f->g, env));
    case Formula::Kind::Or: return fOr(ground(f->f, env), ground(f->g, env));
    case Formula::Kind::Implies: return fImplies(ground(f->f, env), ground(f->g, env));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      auto domain = env(f->varSort);
      if (!domain) {
        // Infinite sort: keep the quantifier, ground underneath it.
        auto body = ground(f->f, env);
        return f->kind == Formula::Kind::Forall ? fForall(f->var, f->varSort, body)
                                                : fExists(f->var, f->varSort, body);
      }
      std::vector<FormulaPtr> insts;
      for (const Value& v : *domain)
        insts.push_back(ground(substituteVar(f->f, f->var, tLit(v)), env));
      return f->kind == Formula::Kind::Forall ? conjoin(insts) : disjoin(insts);
    }
  }
  return f;
}

FormulaPtr ground(const FormulaPtr& f) { return ground(f, defaultSortEnv()); }

bool hasQuantifier(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: return hasQuantifier(f->f) || hasQuantifier(f->g);
    default: return false;
  }
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

// Term precedence: 0 additive, 1 multiplicative, 2 primary.
void printTermPrec(std::ostringstream& os, const TermPtr& t, const Signature* sig, int prec) {
  switch (t->kind) {
    case Term::Kind::Literal: {
      if (t->lit.kind == Value::Kind::Num && t->lit.num < 0) {
        if (prec > 1) os << "(";
        os << ratioString(t->lit.num);
        if (prec > 1) os << ")";
      } else {
        os << t->lit.str();
      }
      break;
    }
    case Term::Kind::Var: os << t->name; break;
    case Term::Kind::Const:
      os << (sig ? sig->at(t->constId).display : "#" + std::to_string(t->constId));
      break;
    case Term::Kind::Apply:
    case Term::Kind::Param: {
      os << t->name;
      if (!t->args.empty()) {
        os << "(";
        for (std::size_t i = 0; i < t->args.size(); ++i) {
          if (i) os << ",";
          printTermPrec(os, t->args[i], sig, 0);
        }
        os << ")";
      }
      break;
    }
    case Term::Kind::Arith: {
      bool additive = t->op == ArithOp::Add || t->op == ArithOp::Sub;
      int myPrec = additive ? 0 : 1;
      if (prec > myPrec) os << "(";
      printTermPrec(os, t->lhs, sig, myPrec);
      switch (t->op) {
        case ArithOp::Add: os << " + "; break;
        case ArithOp::Sub: os << " - "; break;
        case ArithOp::Mul: os << "*"; break;
        case ArithOp::Div: os << "/"; break;
      }
      // Right operand needs one more level to keep - and / left-associative.
      printTermPrec(os, t->rhs, sig, myPrec + 1);
      if (prec > myPrec) os << ")";
      break;
    }
  }
}

// Formula precedence: 0 ->, 1 |, 2 &, 3 unary/atom.
void printFormulaPrec(std::ostringstream& os, const FormulaPtr& f, const Signature* sig,
                      int prec) {
  if (isTruth(f)) {
    os << "true";
    return;
  }
  FormulaPtr inner;
  if (isNegation(f, &inner)) {
    // '-c' only abbreviates c=false on Boolean atoms; every other negated
    // operand is parenthesized so the output reparses unambiguously.
    os << "-(";
    printFormulaPrec(os, inner, sig, 0);
    os << ")";
    return;
  }
  switch (f->kind) {
    case Formula::Kind::Falsum: os << "false"; break;
    case Formula::Kind::Equal: {
      // Boolean constant atoms print bare: c / -c handled by negation above.
      if (f->rhs->kind == Term::Kind::Literal && f->rhs->lit.kind == Value::Kind::Bool &&
          (f->lhs->kind == Term::Kind::Const || f->lhs->kind == Term::Kind::Apply)) {
        if (!f->rhs->lit.boolean) os << "-";
        printTermPrec(os, f->lhs, sig, 2);
        break;
      }
      printTermPrec(os, f->lhs, sig, 0);
      os << "=";
      printTermPrec(os, f->rhs, sig, 0);
      break;
    }
    case Formula::Kind::Cmp: {
      printTermPrec(os, f->lhs, sig, 0);
      switch (f->cmp) {
        case CmpOp::Lt: os << "<"; break;
        case CmpOp::Le: os << "<="; break;
        case CmpOp::Gt: os << ">"; break;
        case CmpOp::Ge: os << ">="; break;
      }
      printTermPrec(os, f->rhs, sig, 0);
      break;
    }
    case Formula::Kind::And:
      if (prec > 2) os << "(";
      printFormulaPrec(os, f->f, sig, 2);
      os << " & ";
      printFormulaPrec(os, f->g, sig, 3);
      if (prec > 2) os << ")";
      break;
    case Formula::Kind::Or:
      if (prec > 1) os << "(";
      printFormulaPrec(os, f->f, sig, 1);
      os << " | ";
      printFormulaPrec(os, f->g, sig, 2);
      if (prec > 1) os << ")";
      break;
    case Formula::Kind::Implies:
      if (prec > 0) os << "(";
      printFormulaPrec(os, f->f, sig, 1);
      os << " -> ";
      printFormulaPrec(os, f->g, sig, 0);
      if (prec > 0) os << ")";
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      os << (f->kind == Formula::Kind::Forall ? "forall " : "exists ");
      os << f->var << ":" << f->varSort.name() << " ";
      printFormulaPrec(os, f->f, sig, 3);
      break;
  }
}

}  // namespace

std::string printTerm(const TermPtr& t, const Signature* sig) {
  std::ostringstream os;
  printTermPrec(os, t, sig, 0);
  return os.str();
}

std::string printFormula(const FormulaPtr& f, const Signature* sig) {
  std::ostringstream os;
  printFormulaPrec(os, f, sig, 0);
  return os.str();
}

}  // namespace cplusmt
