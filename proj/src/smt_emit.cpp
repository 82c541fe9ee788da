#include <algorithm>
#include <sstream>

#include "cplusmt/smt.hpp"

namespace cplusmt {

namespace {

std::string quoted(const std::string& name) { return "|" + name + "|"; }

std::string smtSortName(const Sort& s) {
  switch (s.kind()) {
    case SortKind::Boolean: return "Bool";
    case SortKind::Real:
    case SortKind::NonNegReal: return "Real";
    case SortKind::IntRange:
    case SortKind::Enum: return "Int";
  }
  return "Real";
}

bool isIntSort(const Sort& s) {
  return s.kind() == SortKind::IntRange || s.kind() == SortKind::Enum;
}

std::string intLiteral(const BigInt& n) {
  return n < 0 ? "(- " + BigInt(-n).str() + ")" : n.str();
}

std::string realLiteral(const Rational& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  bool neg = num < 0;
  if (neg) num = -num;
  std::string body =
      den == 1 ? num.str() + ".0" : "(/ " + num.str() + ".0 " + den.str() + ".0)";
  return neg ? "(- " + body + ")" : body;
}

struct Emitter {
  const Signature* sig;
  bool allowQuantifiers;
  bool nonlinear = false;

  bool termMentionsConst(const TermPtr& t) const {
    std::vector<int> cs;
    collectConstants(t, cs);
    if (!cs.empty()) return true;
    // Quantified or head variables count as non-constant factors too.
    return !freeVars(t).empty();
  }

  // True when the term must be emitted in Real arithmetic.
  bool termNeedsReal(const TermPtr& t) const {
    switch (t->kind) {
      case Term::Kind::Literal:
        return t->lit.kind == Value::Kind::Num && denominator(t->lit.num) != 1;
      case Term::Kind::Var: return !isIntSort(t->varSort);
      case Term::Kind::Const: return !isIntSort(sig->at(t->constId).valueSort);
      case Term::Kind::Arith:
        if (t->op == ArithOp::Div) return true;
        return termNeedsReal(t->lhs) || termNeedsReal(t->rhs);
      default: throw SolveError("unresolved term in SMT emission");
    }
  }

  // real=true: coerce Int-sorted constants with to_real.
  std::string term(const TermPtr& t, bool real) {
    switch (t->kind) {
      case Term::Kind::Literal:
        switch (t->lit.kind) {
          case Value::Kind::Bool: return t->lit.boolean ? "true" : "false";
          case Value::Kind::Num:
            return real ? realLiteral(t->lit.num) : intLiteral(numerator(t->lit.num));
          case Value::Kind::Sym:
            throw SolveError("enum symbol '" + t->lit.sym + "' outside an equality");
        }
        break;
      case Term::Kind::Var: {
        bool intVar = isIntSort(t->varSort);
        std::string name = quoted(t->name);
        return real && intVar ? "(to_real " + name + ")" : name;
      }
      case Term::Kind::Const: {
        const GroundConstant& c = sig->at(t->constId);
        std::string name = quoted(c.display);
        return real && isIntSort(c.valueSort) ? "(to_real " + name + ")" : name;
      }
      case Term::Kind::Arith: {
        if (t->op == ArithOp::Mul && termMentionsConst(t->lhs) && termMentionsConst(t->rhs))
          nonlinear = true;
        if (t->op == ArithOp::Div && termMentionsConst(t->rhs)) nonlinear = true;
        const char* op = t->op == ArithOp::Add   ? "+"
                         : t->op == ArithOp::Sub ? "-"
                         : t->op == ArithOp::Mul ? "*"
                                                 : "/";
        return std::string("(") + op + " " + term(t->lhs, real) + " " + term(t->rhs, real) +
               ")";
      }
      default: break;
    }
    throw SolveError("unresolved term in SMT emission");
  }

  // Sort of a (possibly literal) equality side, preferring declared sorts.
  std::optional<Sort> declaredSort(const TermPtr& t) const {
    if (t->kind == Term::Kind::Const) return sig->at(t->constId).valueSort;
    if (t->kind == Term::Kind::Var) return t->varSort;
    return std::nullopt;
  }

  std::string equal(const TermPtr& lhs, const TermPtr& rhs) {
    auto ls = declaredSort(lhs);
    auto rs = declaredSort(rhs);
    Sort anchor = ls ? *ls : rs ? *rs : Sort::real();
    if (anchor.kind() == SortKind::Boolean) {
      // Bare/negated Boolean atoms.
      if (rhs->kind == Term::Kind::Literal)
        return rhs->lit.boolean ? term(lhs, false) : "(not " + term(lhs, false) + ")";
      if (lhs->kind == Term::Kind::Literal)
        return lhs->lit.boolean ? term(rhs, false) : "(not " + term(rhs, false) + ")";
      return "(= " + term(lhs, false) + " " + term(rhs, false) + ")";
    }
    if (anchor.kind() == SortKind::Enum) {
      auto enumSide = [&](const TermPtr& t) -> std::string {
        if (t->kind == Term::Kind::Literal) {
          const auto& syms = anchor.symbols();
          auto it = std::find(syms.begin(), syms.end(), t->lit.sym);
          if (it == syms.end())
            throw SolveError("symbol '" + t->lit.sym + "' not in sort '" + anchor.name() +
                             "'");
          return std::to_string(it - syms.begin());
        }
        return term(t, false);
      };
      return "(= " + enumSide(lhs) + " " + enumSide(rhs) + ")";
    }
    bool real = termNeedsReal(lhs) || termNeedsReal(rhs);
    return "(= " + term(lhs, real) + " " + term(rhs, real) + ")";
  }

  std::string formula(const FormulaPtr& f) {
    if (isTruth(f)) return "true";
    FormulaPtr inner;
    if (isNegation(f, &inner)) return "(not " + formula(inner) + ")";
    switch (f->kind) {
      case Formula::Kind::Falsum: return "false";
      case Formula::Kind::Equal: return equal(f->lhs, f->rhs);
      case Formula::Kind::Cmp: {
        bool real = termNeedsReal(f->lhs) || termNeedsReal(f->rhs);
        const char* op = f->cmp == CmpOp::Lt   ? "<"
                         : f->cmp == CmpOp::Le ? "<="
                         : f->cmp == CmpOp::Gt ? ">"
                                               : ">=";
        return std::string("(") + op + " " + term(f->lhs, real) + " " + term(f->rhs, real) +
               ")";
      }
      case Formula::Kind::And: {
        std::vector<FormulaPtr> parts;
        flattenAnd(f, parts);
        std::string out = "(and";
        for (const auto& p : parts) out += " " + formula(p);
        return out + ")";
      }
      case Formula::Kind::Or: {
        std::vector<FormulaPtr> parts;
        flattenOr(f, parts);
        std::string out = "(or";
        for (const auto& p : parts) out += " " + formula(p);
        return out + ")";
      }
      case Formula::Kind::Implies:
        return "(=> " + formula(f->f) + " " + formula(f->g) + ")";
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        if (!allowQuantifiers)
          throw SolveError(
              "quantified completion; re-run with --allow-quantifiers to emit "
              "quantified SMT");
        std::string binder = f->kind == Formula::Kind::Forall ? "forall" : "exists";
        std::string body = formula(f->f);
        std::string decl =
            "((" + quoted(f->var) + " " + smtSortName(f->varSort) + "))";
        std::string guard;
        if (f->varSort.kind() == SortKind::NonNegReal)
          guard = "(>= " + quoted(f->var) + " 0.0)";
        if (!guard.empty())
          body = f->kind == Formula::Kind::Forall ? "(=> " + guard + " " + body + ")"
                                                  : "(and " + guard + " " + body + ")";
        return "(" + binder + " " + decl + " " + body + ")";
      }
    }
    throw SolveError("malformed formula in SMT emission");
  }
};

}  // namespace

std::string SmtInstance::text() const {
  std::ostringstream os;
  for (const auto& [key, value] : options) os << "(set-option :" << key << " " << value << ")\n";
  os << "(set-logic " << logic << ")\n";
  for (const auto& d : declarations) os << d << "\n";
  for (const auto& b : sortBounds) os << b << "\n";
  for (const auto& [label, body] : asserts) {
    if (!label.empty()) os << "; " << label << "\n";
    os << "(assert " << body << ")\n";
  }
  os << "(check-sat)\n(get-model)\n";
  return os.str();
}

SmtInstance emit(const CompletedFormula& f, const Signature& sig, const EmitOptions& opts,
                 const std::vector<std::pair<std::string, FormulaPtr>>& extraAsserts) {
  SmtInstance inst;
  inst.sig = &sig;
  inst.options = opts.options;

  bool hasInt = false, hasReal = false;
  for (int id = 0; id < sig.size(); ++id) {
    const GroundConstant& c = sig.at(id);
    inst.declarations.push_back("(declare-fun " + quoted(c.display) + " () " +
                                smtSortName(c.valueSort) + ")");
    switch (c.valueSort.kind()) {
      case SortKind::Boolean: break;
      case SortKind::Real: hasReal = true; break;
      case SortKind::NonNegReal:
        hasReal = true;
        inst.sortBounds.push_back("(assert (>= " + quoted(c.display) + " 0.0))");
        break;
      case SortKind::IntRange:
        hasInt = true;
        inst.sortBounds.push_back("(assert (and (<= " + intLiteral(BigInt(c.valueSort.lo())) +
                                  " " + quoted(c.display) + ") (<= " + quoted(c.display) +
                                  " " + intLiteral(BigInt(c.valueSort.hi())) + ")))");
        break;
      case SortKind::Enum:
        hasInt = true;
        inst.sortBounds.push_back(
            "(assert (and (<= 0 " + quoted(c.display) + ") (<= " + quoted(c.display) + " " +
            std::to_string(c.valueSort.symbols().size() - 1) + ")))");
        break;
    }
  }

  Emitter em{&sig, opts.allowQuantifiers};
  bool quantified = false;
  for (const auto& [label, part] : f.parts) {
    if (isTruth(part)) continue;
    quantified |= hasQuantifier(part);
    inst.asserts.emplace_back(label, em.formula(part));
  }
  for (const auto& [label, part] : extraAsserts) {
    if (isTruth(part)) continue;
    quantified |= hasQuantifier(part);
    inst.asserts.emplace_back(label, em.formula(part));
  }

  if (quantified) {
    inst.logic = "ALL";
  } else if (hasInt && hasReal) {
    inst.logic = em.nonlinear ? "QF_NIRA" : "QF_LIRA";
  } else if (hasInt) {
    inst.logic = em.nonlinear ? "QF_NIA" : "QF_LIA";
  } else if (hasReal) {
    inst.logic = em.nonlinear ? "QF_NRA" : "QF_LRA";
  } else {
    inst.logic = "QF_UF";
  }
  return inst;
}

}  // namespace cplusmt
