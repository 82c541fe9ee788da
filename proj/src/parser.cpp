#include <algorithm>
#include <cctype>
#include <sstream>

#include "cplusmt/cplus.hpp"

namespace cplusmt {

std::string SourceLoc::str() const {
  std::ostringstream os;
  os << file << ":" << line << ":" << col;
  return os.str();
}

ParseError::ParseError(const SourceLoc& l, const std::string& msg)
    : Error(l.str() + ": " + msg), loc(l) {}

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

struct Token {
  enum class Kind { End, Ident, Number, Punct };
  Kind kind = Kind::End;
  std::string text;
  SourceLoc loc;
};

class Lexer {
 public:
  Lexer(const std::string& text, const std::string& file) : text_(text) {
    loc_.file = file;
    loc_.line = 1;
    loc_.col = 1;
  }

  Token next() {
    skipSpace();
    Token t;
    t.loc = loc_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        t.text += take();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::Number;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        t.text += take();
      if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        t.text += take();
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          t.text += take();
      }
      return t;
    }
    t.kind = Token::Kind::Punct;
    if (pos_ + 2 < text_.size() && text_.substr(pos_, 3) == "<->") {
      t.text = "<->";
      take();
      take();
      take();
      return t;
    }
    if (pos_ + 1 < text_.size()) {
      auto two = text_.substr(pos_, 2);
      if (two == ":-" || two == "::" || two == "<=" || two == ">=" || two == "->" ||
          two == "..") {
        t.text = two;
        take();
        take();
        return t;
      }
    }
    static const std::string kSingles = ".,;:(){}=<>+-*/&|";
    if (kSingles.find(c) != std::string::npos) {
      t.text = std::string(1, take());
      return t;
    }
    throw ParseError(t.loc, std::string("unexpected character '") + c + "'");
  }

 private:
  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++loc_.line;
      loc_.col = 1;
    } else {
      ++loc_.col;
    }
    return c;
  }

  void skipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  SourceLoc loc_;
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

// Unified expression node: exactly one of term/formula is set.
// Classification to the required side happens where the grammar demands it.
struct Expr {
  TermPtr term;
  FormulaPtr formula;
  SourceLoc loc;
};

class Parser {
 public:
  Parser(const std::string& text, const std::string& file) : lexer_(text, file) {
    cur_ = lexer_.next();
  }

  ActionDescription parseFile() {
    while (cur_.kind != Token::Kind::End) {
      if (isPunct(":-")) {
        advance();
        parseDirective();
      } else {
        d_.statements.push_back(parseLaw());
      }
      expectPunct(".");
    }
    return std::move(d_);
  }

 private:
  // --- token helpers ---
  void advance() { cur_ = lexer_.next(); }
  bool isPunct(const std::string& p) const {
    return cur_.kind == Token::Kind::Punct && cur_.text == p;
  }
  bool isIdent(const std::string& w) const {
    return cur_.kind == Token::Kind::Ident && cur_.text == w;
  }
  bool acceptPunct(const std::string& p) {
    if (!isPunct(p)) return false;
    advance();
    return true;
  }
  bool acceptIdent(const std::string& w) {
    if (!isIdent(w)) return false;
    advance();
    return true;
  }
  void expectPunct(const std::string& p) {
    if (!acceptPunct(p)) fail("expected '" + p + "'");
  }
  std::string expectIdent(const char* what) {
    if (cur_.kind != Token::Kind::Ident) fail(std::string("expected ") + what);
    std::string s = cur_.text;
    advance();
    return s;
  }
  long expectInt(const char* what) {
    if (cur_.kind != Token::Kind::Number || cur_.text.find('.') != std::string::npos)
      fail(std::string("expected ") + what);
    long v = std::stol(cur_.text);
    advance();
    return v;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(cur_.loc, msg + (cur_.text.empty() ? " at end of input"
                                                        : " before '" + cur_.text + "'"));
  }

  // --- directives ---
  void parseDirective() {
    std::string word = expectIdent("directive name after ':-'");
    if (word == "sorts") {
      do parseSortDecl();
      while (acceptPunct(";"));
    } else if (word == "constants") {
      do parseConstDecl();
      while (acceptPunct(";"));
    } else if (word == "variables") {
      do parseVarDecl();
      while (acceptPunct(";"));
    } else if (word == "parameters") {
      do parseParamDef();
      while (acceptPunct(";"));
    } else if (word == "query") {
      do parseQueryItem();
      while (acceptPunct(";"));
    } else {
      fail("unknown directive ':- " + word + "'");
    }
  }

  void parseSortDecl() {
    SortDecl decl;
    decl.name = expectIdent("sort name");
    if (d_.findSort(decl.name) || builtinSort(decl.name))
      fail("sort '" + decl.name + "' is already defined");
    expectPunct("=");
    expectPunct("{");
    do {
      std::string sym = expectIdent("enum symbol");
      if (symbolSort(sym)) fail("symbol '" + sym + "' already belongs to another sort");
      decl.symbols.push_back(sym);
    } while (acceptPunct(","));
    expectPunct("}");
    Sort::enumeration(decl.name, decl.symbols);  // validates non-empty, duplicate-free
    d_.sorts.push_back(std::move(decl));
  }

  std::optional<Sort> builtinSort(const std::string& name) const {
    if (name == "boolean") return Sort::boolean();
    if (name == "real") return Sort::real();
    if (name == "realNonNeg") return Sort::nonNegReal();
    return std::nullopt;
  }

  const SortDecl* symbolSort(const std::string& sym) const {
    for (const auto& s : d_.sorts)
      if (std::find(s.symbols.begin(), s.symbols.end(), sym) != s.symbols.end()) return &s;
    return nullptr;
  }

  Sort parseSortRef() {
    if (cur_.kind == Token::Kind::Number) {
      long lo = expectInt("integer range bound");
      expectPunct("..");
      long hi = expectInt("integer range bound");
      if (lo > hi) fail("integer range with lo > hi");
      return Sort::intRange(lo, hi);
    }
    std::string name = expectIdent("sort name");
    if (auto b = builtinSort(name)) return *b;
    if (const SortDecl* s = d_.findSort(name)) return Sort::enumeration(s->name, s->symbols);
    fail("unknown sort '" + name + "'");
  }

  void checkFreshName(const std::string& name) {
    if (d_.findConstant(name) || d_.findVariable(name) || symbolSort(name) ||
        hasParameter(name))
      fail("'" + name + "' is already declared");
  }

  void parseConstDecl() {
    struct Proto {
      std::string name;
      std::vector<Sort> argSorts;
    };
    std::vector<Proto> protos;
    do {
      Proto p;
      p.name = expectIdent("constant name");
      if (acceptPunct("(")) {
        do p.argSorts.push_back(parseSortRef());
        while (acceptPunct(","));
        expectPunct(")");
      }
      for (const Sort& s : p.argSorts)
        if (!s.finite()) fail("argument sorts of '" + p.name + "' must be finite");
      protos.push_back(std::move(p));
    } while (acceptPunct(","));
    expectPunct("::");
    std::string kindWord = expectIdent("constant kind");
    ConstKind kind;
    bool additive = false;
    if (kindWord == "simpleFluent") {
      kind = ConstKind::SimpleFluent;
    } else if (kindWord == "sdFluent") {
      kind = ConstKind::SdFluent;
    } else if (kindWord == "additiveFluent") {
      kind = ConstKind::SimpleFluent;
      additive = true;
    } else if (kindWord == "action") {
      kind = ConstKind::Action;
    } else {
      fail("unknown constant kind '" + kindWord + "'");
    }
    expectPunct("(");
    Sort valueSort = parseSortRef();
    expectPunct(")");
    if (additive && !valueSort.numeric()) fail("additive fluent must have a numeric value sort");
    for (auto& p : protos) {
      checkFreshName(p.name);
      d_.constants.push_back({p.name, std::move(p.argSorts), valueSort, kind, additive});
    }
  }

  void parseVarDecl() {
    std::vector<std::string> names;
    do names.push_back(expectIdent("variable name"));
    while (acceptPunct(","));
    expectPunct("::");
    Sort sort = parseSortRef();
    for (auto& n : names) {
      checkFreshName(n);
      d_.variables.push_back({std::move(n), sort});
    }
  }

  void parseParamDef() {
    ParamDef def;
    def.name = expectIdent("parameter name");
    if (d_.findConstant(def.name) || d_.findVariable(def.name) || symbolSort(def.name))
      fail("'" + def.name + "' is already declared");
    if (acceptPunct("(")) {
      do {
        if (cur_.kind == Token::Kind::Number) {
          def.args.push_back(Value::ofNum(Rational(expectInt("argument"))));
        } else {
          std::string sym = expectIdent("parameter argument");
          if (!symbolSort(sym)) fail("unknown symbol '" + sym + "'");
          def.args.push_back(Value::ofSym(sym));
        }
      } while (acceptPunct(","));
      expectPunct(")");
    }
    expectPunct("=");
    bool neg = acceptPunct("-");
    if (cur_.kind != Token::Kind::Number) fail("expected numeral");
    def.value = parseRational(cur_.text);
    if (neg) def.value = -def.value;
    advance();
    if (d_.findParameter(def.name, def.args)) fail("parameter '" + def.name + "' redefined");
    d_.parameters.push_back(std::move(def));
  }

  void parseQueryItem() {
    if (isIdent("maxstep") && peekIsPunct("::")) {
      advance();
      expectPunct("::");
      long lo = expectInt("horizon");
      long hi = lo;
      if (acceptPunct("..")) hi = expectInt("horizon");
      if (lo < 0 || hi < lo) fail("bad horizon range");
      d_.query.minStep = static_cast<int>(lo);
      d_.query.maxStep = static_cast<int>(hi);
      return;
    }
    QuerySpec::Item item;
    item.loc = cur_.loc;
    if (cur_.kind == Token::Kind::Number) {
      item.at = QuerySpec::Item::At::Step;
      item.step = static_cast<int>(expectInt("step"));
    } else if (acceptIdent("maxstep")) {
      item.at = QuerySpec::Item::At::MaxStep;
    } else if (acceptIdent("each")) {
      item.at = QuerySpec::Item::At::Each;
    } else {
      fail("expected step label");
    }
    expectPunct(":");
    item.formula = requireFormula(parseExpr(), "query constraint");
    d_.query.items.push_back(std::move(item));
  }

  bool peekIsPunct(const std::string& p) {
    Lexer copy = lexer_;
    Token t = copy.next();
    return t.kind == Token::Kind::Punct && t.text == p;
  }

  // --- laws ---
  Statement parseLaw() {
    Statement st;
    st.loc = cur_.loc;
    if (acceptIdent("caused")) {
      st.kind = Statement::Kind::Caused;
      st.head = requireFormula(parseExpr(), "law head");
      st.ifPart = acceptIdent("if") ? requireFormula(parseExpr(), "if part") : truth();
      st.afterPart = acceptIdent("after") ? requireFormula(parseExpr(), "after part") : nullptr;
      return st;
    }
    if (acceptIdent("constraint")) {
      st.kind = Statement::Kind::Constraint;
      st.head = requireFormula(parseExpr(), "constraint");
      st.afterPart = acceptIdent("after") ? requireFormula(parseExpr(), "after part") : nullptr;
      return st;
    }
    if (acceptIdent("always")) {
      st.kind = Statement::Kind::Always;
      st.head = requireFormula(parseExpr(), "always constraint");
      return st;
    }
    if (acceptIdent("default")) {
      st.kind = Statement::Kind::Default;
      st.defaultAtom = requireFormula(parseExpr(), "default atom");
      return st;
    }
    if (isIdent("inertial") || isIdent("exogenous")) {
      st.kind = isIdent("inertial") ? Statement::Kind::Inertial : Statement::Kind::Exogenous;
      advance();
      do {
        Expr e = parseExpr();
        st.constants.push_back(requireConstTerm(e, "constant reference"));
      } while (acceptPunct(","));
      return st;
    }
    // 'a causes F' / 'p increments c by E [if G]'
    Expr lead = parseExpr();
    if (acceptIdent("causes")) {
      st.kind = Statement::Kind::Causes;
      st.trigger = requireConstTerm(lead, "trigger of a causes law");
      st.head = requireFormula(parseExpr(), "effect");
      return st;
    }
    if (acceptIdent("increments")) {
      st.kind = Statement::Kind::Increments;
      st.trigger = requireConstTerm(lead, "trigger of an increment law");
      Expr target = parseExpr();
      st.target = requireConstTerm(target, "increment target");
      if (!acceptIdent("by")) fail("expected 'by'");
      st.amount = requireTerm(parseExpr(), "increment amount");
      st.ifPart = acceptIdent("if") ? requireFormula(parseExpr(), "if part") : truth();
      return st;
    }
    throw ParseError(st.loc, "expected a law");
  }

  // --- expressions ---
  Expr parseExpr() { return parseImplies(); }

  Expr parseImplies() {
    Expr lhs = parseOr();
    if (acceptPunct("->")) {
      Expr rhs = parseImplies();
      return mkFormula(fImplies(requireFormula(lhs, "operand of ->"),
                                requireFormula(rhs, "operand of ->")),
                       lhs.loc);
    }
    if (acceptPunct("<->")) {
      Expr rhs = parseImplies();
      return mkFormula(fIff(requireFormula(lhs, "operand of <->"),
                            requireFormula(rhs, "operand of <->")),
                       lhs.loc);
    }
    return lhs;
  }

  Expr parseOr() {
    Expr lhs = parseAnd();
    while (isPunct("|")) {
      advance();
      Expr rhs = parseAnd();
      lhs = mkFormula(
          fOr(requireFormula(lhs, "operand of |"), requireFormula(rhs, "operand of |")),
          lhs.loc);
    }
    return lhs;
  }

  Expr parseAnd() {
    Expr lhs = parseCmp();
    while (isPunct("&")) {
      advance();
      Expr rhs = parseCmp();
      lhs = mkFormula(
          fAnd(requireFormula(lhs, "operand of &"), requireFormula(rhs, "operand of &")),
          lhs.loc);
    }
    return lhs;
  }

  Expr parseCmp() {
    Expr lhs = parseAdditive();
    if (acceptPunct("=")) {
      Expr rhs = parseAdditive();
      TermPtr l = requireTerm(lhs, "left side of =");
      TermPtr r = requireTerm(rhs, "right side of =");
      checkEqSorts(l, r, lhs.loc);
      return mkFormula(fEq(l, r), lhs.loc);
    }
    CmpOp op;
    if (isPunct("<")) op = CmpOp::Lt;
    else if (isPunct("<=")) op = CmpOp::Le;
    else if (isPunct(">")) op = CmpOp::Gt;
    else if (isPunct(">=")) op = CmpOp::Ge;
    else return lhs;
    advance();
    Expr rhs = parseAdditive();
    TermPtr l = requireTerm(lhs, "left side of comparison");
    TermPtr r = requireTerm(rhs, "right side of comparison");
    requireNumeric(l, lhs.loc);
    requireNumeric(r, rhs.loc);
    return mkFormula(fCmp(op, l, r), lhs.loc);
  }

  Expr parseAdditive() {
    Expr lhs = parseMult();
    while (isPunct("+") || isPunct("-")) {
      ArithOp op = isPunct("+") ? ArithOp::Add : ArithOp::Sub;
      advance();
      Expr rhs = parseMult();
      TermPtr l = requireTerm(lhs, "arithmetic operand");
      TermPtr r = requireTerm(rhs, "arithmetic operand");
      requireNumeric(l, lhs.loc);
      requireNumeric(r, rhs.loc);
      lhs = mkTerm(tArith(op, l, r), lhs.loc);
    }
    return lhs;
  }

  Expr parseMult() {
    Expr lhs = parsePrimary();
    while (isPunct("*") || isPunct("/")) {
      ArithOp op = isPunct("*") ? ArithOp::Mul : ArithOp::Div;
      SourceLoc opLoc = cur_.loc;
      advance();
      Expr rhs = parsePrimary();
      TermPtr l = requireTerm(lhs, "arithmetic operand");
      TermPtr r = requireTerm(rhs, "arithmetic operand");
      requireNumeric(l, lhs.loc);
      requireNumeric(r, rhs.loc);
      if (op == ArithOp::Div && r->kind == Term::Kind::Literal &&
          r->lit.kind == Value::Kind::Num && r->lit.num == 0)
        throw ParseError(opLoc, "division by the literal 0");
      lhs = mkTerm(tArith(op, l, r), lhs.loc);
    }
    return lhs;
  }

  Expr parsePrimary() {
    SourceLoc loc = cur_.loc;
    if (acceptPunct("-")) {
      Expr operand = parsePrimary();
      // Classical negation on formulas, 'c=false' on Boolean atoms,
      // arithmetic negation on numeric terms.
      if (operand.formula) return mkFormula(fNot(operand.formula), loc);
      Sort s = termSort(operand.term, loc);
      if (s.kind() == SortKind::Boolean)
        return mkFormula(fEq(operand.term, tBool(false)), loc);
      requireNumeric(operand.term, loc);
      if (operand.term->kind == Term::Kind::Literal)
        return mkTerm(tNum(-operand.term->lit.num), loc);
      return mkTerm(tArith(ArithOp::Sub, tNum(0), operand.term), loc);
    }
    if (acceptPunct("(")) {
      Expr inner = parseExpr();
      expectPunct(")");
      inner.loc = loc;
      return inner;
    }
    if (cur_.kind == Token::Kind::Number) {
      Rational q = parseRational(cur_.text);
      advance();
      return mkTerm(tNum(std::move(q)), loc);
    }
    if (acceptIdent("true")) return mkTerm(tBool(true), loc);
    if (acceptIdent("false")) return mkTerm(tBool(false), loc);
    std::string name = expectIdent("term");
    std::vector<TermPtr> args;
    bool hasArgs = false;
    if (acceptPunct("(")) {
      hasArgs = true;
      do args.push_back(requireTerm(parseExpr(), "constant argument"));
      while (acceptPunct(","));
      expectPunct(")");
    }
    if (const VarDecl* v = d_.findVariable(name)) {
      if (hasArgs) throw ParseError(loc, "variable '" + name + "' takes no arguments");
      return mkTerm(tVar(name, v->sort), loc);
    }
    if (const ConstantDecl* c = d_.findConstant(name)) {
      checkArgs(*c, args, loc);
      return mkTerm(tApply(name, std::move(args)), loc);
    }
    if (hasParameter(name)) return mkTerm(tParam(name, std::move(args)), loc);
    if (symbolSort(name)) {
      if (hasArgs) throw ParseError(loc, "symbol '" + name + "' takes no arguments");
      return mkTerm(tSym(name), loc);
    }
    throw ParseError(loc, "unknown name '" + name + "'");
  }

  // --- classification helpers ---
  static Expr mkTerm(TermPtr t, SourceLoc loc) {
    Expr e;
    e.term = std::move(t);
    e.loc = std::move(loc);
    return e;
  }
  static Expr mkFormula(FormulaPtr f, SourceLoc loc) {
    Expr e;
    e.formula = std::move(f);
    e.loc = std::move(loc);
    return e;
  }

  bool hasParameter(const std::string& name) const {
    for (const auto& p : d_.parameters)
      if (p.name == name) return true;
    return false;
  }

  void checkArgs(const ConstantDecl& c, const std::vector<TermPtr>& args,
                 const SourceLoc& loc) {
    if (args.size() != c.argSorts.size())
      throw ParseError(loc, "constant '" + c.name + "' expects " +
                                std::to_string(c.argSorts.size()) + " argument(s)");
    for (std::size_t i = 0; i < args.size(); ++i) {
      const TermPtr& a = args[i];
      const Sort& want = c.argSorts[i];
      bool ok;
      if (a->kind == Term::Kind::Var) {
        ok = a->varSort == want;
      } else if (a->kind == Term::Kind::Literal) {
        ok = want.admits(a->lit);
      } else {
        throw ParseError(loc, "constant arguments must be variables or literals");
      }
      if (!ok)
        throw ParseError(loc, "argument " + std::to_string(i + 1) + " of '" + c.name +
                                  "' has the wrong sort");
    }
  }

  Sort termSort(const TermPtr& t, const SourceLoc& loc) const {
    switch (t->kind) {
      case Term::Kind::Literal:
        switch (t->lit.kind) {
          case Value::Kind::Bool: return Sort::boolean();
          case Value::Kind::Num: return Sort::real();
          case Value::Kind::Sym: {
            const SortDecl* s = symbolSort(t->lit.sym);
            if (!s) throw ParseError(loc, "unknown symbol '" + t->lit.sym + "'");
            return Sort::enumeration(s->name, s->symbols);
          }
        }
        break;
      case Term::Kind::Var: return t->varSort;
      case Term::Kind::Apply: return d_.findConstant(t->name)->valueSort;
      case Term::Kind::Param: return Sort::real();
      case Term::Kind::Arith: return Sort::real();
      case Term::Kind::Const: break;  // not produced by the parser
    }
    throw ParseError(loc, "cannot determine the sort of a term");
  }

  void requireNumeric(const TermPtr& t, const SourceLoc& loc) const {
    if (!termSort(t, loc).numeric())
      throw ParseError(loc, "expected a numeric term, got '" + printTerm(t) + "'");
  }

  void checkEqSorts(const TermPtr& l, const TermPtr& r, const SourceLoc& loc) const {
    Sort ls = termSort(l, loc);
    Sort rs = termSort(r, loc);
    if (ls.numeric() && rs.numeric()) return;
    if (ls.kind() == SortKind::Boolean && rs.kind() == SortKind::Boolean) return;
    if (ls.kind() == SortKind::Enum && rs.kind() == SortKind::Enum && ls == rs) return;
    throw ParseError(loc, "'=' between incompatible sorts '" + ls.name() + "' and '" +
                              rs.name() + "'");
  }

  FormulaPtr requireFormula(const Expr& e, const char* what) const {
    if (e.formula) return e.formula;
    // Coerce Boolean terms: true/false literals and bare Boolean atoms.
    if (e.term->kind == Term::Kind::Literal && e.term->lit.kind == Value::Kind::Bool)
      return e.term->lit.boolean ? truth() : falsum();
    if (termSort(e.term, e.loc).kind() == SortKind::Boolean) return fEq(e.term, tBool(true));
    throw ParseError(e.loc, std::string("expected a formula as ") + what);
  }

  static TermPtr requireTerm(const Expr& e, const char* what) {
    if (e.term) return e.term;
    throw ParseError(e.loc, std::string("expected a term as ") + what);
  }

  static TermPtr requireConstTerm(const Expr& e, const char* what) {
    if (e.term && e.term->kind == Term::Kind::Apply) return e.term;
    throw ParseError(e.loc, std::string("expected a declared constant as ") + what);
  }

  Lexer lexer_;
  Token cur_;
  ActionDescription d_;
};

}  // namespace

const ConstantDecl* ActionDescription::findConstant(const std::string& name) const {
  for (const auto& c : constants)
    if (c.name == name) return &c;
  return nullptr;
}

const VarDecl* ActionDescription::findVariable(const std::string& name) const {
  for (const auto& v : variables)
    if (v.name == name) return &v;
  return nullptr;
}

const SortDecl* ActionDescription::findSort(const std::string& name) const {
  for (const auto& s : sorts)
    if (s.name == name) return &s;
  return nullptr;
}

const ParamDef* ActionDescription::findParameter(const std::string& name,
                                                 const std::vector<Value>& args) const {
  for (const auto& p : parameters)
    if (p.name == name && p.args == args) return &p;
  return nullptr;
}

Sort ActionDescription::resolveSort(const std::string& name) const {
  if (name == "boolean") return Sort::boolean();
  if (name == "real") return Sort::real();
  if (name == "realNonNeg") return Sort::nonNegReal();
  if (const SortDecl* s = findSort(name)) return Sort::enumeration(s->name, s->symbols);
  throw SortError("unknown sort '" + name + "'");
}

ActionDescription parse(const std::string& text, const std::string& filename) {
  Parser p(text, filename);
  return p.parseFile();
}

}  // namespace cplusmt
