#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cplusmt/rational.hpp"

namespace cplusmt {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SortError : Error {
  using Error::Error;
};
struct EvalError : Error {
  using Error::Error;
};
struct DeclError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Sorts and values
// ---------------------------------------------------------------------------

enum class SortKind { Boolean, Enum, Real, NonNegReal, IntRange };

struct Value {
  enum class Kind { Bool, Num, Sym };
  Kind kind = Kind::Bool;
  bool boolean = false;
  Rational num;
  std::string sym;

  static Value ofBool(bool b);
  static Value ofNum(Rational q);
  static Value ofSym(std::string s);

  bool operator==(const Value& o) const;
  bool operator!=(const Value& o) const { return !(*this == o); }
  bool operator<(const Value& o) const;  // total order, for deterministic sets
  std::string str() const;
};

class Sort {
 public:
  Sort() : kind_(SortKind::Real) {}

  static Sort boolean();
  static Sort real();
  static Sort nonNegReal();
  static Sort intRange(long lo, long hi);
  static Sort enumeration(std::string name, std::vector<std::string> symbols);

  SortKind kind() const { return kind_; }
  bool finite() const;
  bool numeric() const;  // Real, NonNegReal, IntRange
  const std::string& name() const { return name_; }
  const std::vector<std::string>& symbols() const;
  long lo() const { return lo_; }
  long hi() const { return hi_; }
  // Domain of a finite sort, in canonical order (false<true; lo..hi;
  // declaration order of enum symbols). Throws SortError on infinite sorts.
  std::vector<Value> values() const;
  bool admits(const Value& v) const;

  bool operator==(const Sort& o) const;
  bool operator!=(const Sort& o) const { return !(*this == o); }

 private:
  SortKind kind_;
  std::string name_;
  std::shared_ptr<const std::vector<std::string>> symbols_;
  long lo_ = 0, hi_ = 0;
};

// ---------------------------------------------------------------------------
// Signatures of ground constants
// ---------------------------------------------------------------------------

enum class ConstKind { SimpleFluent, SdFluent, Action, Rigid };

bool isFluentKind(ConstKind k);

// A declared constant schema; argument sorts are finite and are expanded
// away when the ground signature is built.
struct ConstantDecl {
  std::string name;
  std::vector<Sort> argSorts;
  Sort valueSort;
  ConstKind kind = ConstKind::SimpleFluent;
  bool additive = false;
};

// One ground, possibly time-stamped constant.
struct GroundConstant {
  std::string display;  // "Force(J1,X)" or "1:Force(J1,X)"
  Sort valueSort;
  ConstKind kind = ConstKind::SimpleFluent;
  std::string baseName;     // declared name ("Force")
  std::vector<Value> args;  // ground argument tuple
  int step = -1;            // >= 0 for time-stamped constants
  int baseId = -1;          // id of the untimed constant in the base signature
};

class Signature {
 public:
  int add(GroundConstant c);  // throws DeclError on duplicate display
  int find(const std::string& display) const;  // -1 when absent
  int require(const std::string& display) const;
  const GroundConstant& at(int id) const { return consts_.at(static_cast<std::size_t>(id)); }
  int size() const { return static_cast<int>(consts_.size()); }
  const std::vector<GroundConstant>& all() const { return consts_; }

 private:
  std::vector<GroundConstant> consts_;
  std::map<std::string, int> index_;
};

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

enum class ArithOp { Add, Sub, Mul, Div };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind {
    Literal,  // Value
    Var,      // sorted variable
    Const,    // ground constant (signature id)
    Apply,    // schematic constant application, frontend only
    Param,    // named rational parameter reference, frontend only
    Arith,    // binary background operation
  };
  Kind kind = Kind::Literal;
  Value lit;
  std::string name;  // Var / Apply / Param
  Sort varSort;      // Var
  int constId = -1;  // Const
  ArithOp op = ArithOp::Add;
  TermPtr lhs, rhs;           // Arith
  std::vector<TermPtr> args;  // Apply / Param
};

TermPtr tLit(Value v);
TermPtr tNum(Rational q);
TermPtr tBool(bool b);
TermPtr tSym(std::string s);
TermPtr tVar(std::string name, Sort sort);
TermPtr tConst(int id);
TermPtr tApply(std::string name, std::vector<TermPtr> args);
TermPtr tParam(std::string name, std::vector<TermPtr> args);
// Throws SortError when rhs is the literal 0 and op is Div.
TermPtr tArith(ArithOp op, TermPtr lhs, TermPtr rhs);

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

enum class CmpOp { Lt, Le, Gt, Ge };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Falsum, Equal, Cmp, And, Or, Implies, Forall, Exists };
  Kind kind = Kind::Falsum;
  TermPtr lhs, rhs;  // Equal / Cmp
  CmpOp cmp = CmpOp::Lt;
  FormulaPtr f, g;   // And / Or / Implies
  std::string var;   // Forall / Exists
  Sort varSort;
};

FormulaPtr falsum();
FormulaPtr truth();  // stored as -false, i.e. false -> false
FormulaPtr fEq(TermPtr l, TermPtr r);
FormulaPtr fCmp(CmpOp op, TermPtr l, TermPtr r);
FormulaPtr fAnd(FormulaPtr a, FormulaPtr b);
FormulaPtr fOr(FormulaPtr a, FormulaPtr b);
FormulaPtr fImplies(FormulaPtr a, FormulaPtr b);
FormulaPtr fNot(FormulaPtr a);  // a -> false
FormulaPtr fIff(FormulaPtr a, FormulaPtr b);
FormulaPtr fForall(std::string var, Sort sort, FormulaPtr body);
FormulaPtr fExists(std::string var, Sort sort, FormulaPtr body);
FormulaPtr conjoin(const std::vector<FormulaPtr>& fs);  // empty -> truth
FormulaPtr disjoin(const std::vector<FormulaPtr>& fs);  // empty -> falsum

bool isTruth(const FormulaPtr& f);
bool isFalsum(const FormulaPtr& f);
// Recognizes f = g -> false and yields g.
bool isNegation(const FormulaPtr& f, FormulaPtr* inner = nullptr);

bool termEquals(const TermPtr& a, const TermPtr& b);
bool formulaEquals(const FormulaPtr& a, const FormulaPtr& b);

void flattenAnd(const FormulaPtr& f, std::vector<FormulaPtr>& out);
void flattenOr(const FormulaPtr& f, std::vector<FormulaPtr>& out);

// Free variables in order of first occurrence.
std::vector<std::pair<std::string, Sort>> freeVars(const FormulaPtr& f);
std::vector<std::pair<std::string, Sort>> freeVars(const TermPtr& t);
bool mentionsVar(const TermPtr& t, const std::string& var);
bool mentionsVar(const FormulaPtr& f, const std::string& var);

TermPtr substituteVar(const TermPtr& t, const std::string& var, const TermPtr& repl);
FormulaPtr substituteVar(const FormulaPtr& f, const std::string& var, const TermPtr& repl);

// Rewrites every Const leaf (used to time-stamp formulas and to plug in
// candidate values).
TermPtr mapConstants(const TermPtr& t, const std::function<TermPtr(int)>& fn);
FormulaPtr mapConstants(const FormulaPtr& f, const std::function<TermPtr(int)>& fn);

void collectConstants(const TermPtr& t, std::vector<int>& out);
void collectConstants(const FormulaPtr& f, std::vector<int>& out);

// ---------------------------------------------------------------------------
// Interpretations and evaluation
// ---------------------------------------------------------------------------

class Interpretation {
 public:
  explicit Interpretation(const Signature& sig);

  const Signature& signature() const { return *sig_; }
  void set(int id, Value v);  // checks the value against the constant's sort
  bool has(int id) const;
  const Value& value(int id) const;
  bool total() const;

  bool operator==(const Interpretation& o) const { return vals_ == o.vals_; }
  bool operator<(const Interpretation& o) const;
  std::string str() const;

 private:
  const Signature* sig_;
  std::vector<std::optional<Value>> vals_;
};

struct EvalOptions {
  // Numeric atoms are relaxed by this amount: a=b holds when |a-b| <= tol,
  // a<b when a < b+tol, and so on. Zero means exact.
  Rational tolerance = 0;
};

Value evalTerm(const TermPtr& t, const Interpretation& interp);
// Classical truth under exact rational background arithmetic. Quantifiers
// over finite sorts are expanded on the fly; quantifiers over Real sorts
// raise EvalError. Free variables raise EvalError.
bool evaluate(const FormulaPtr& f, const Interpretation& interp, const EvalOptions& opts = {});

// ---------------------------------------------------------------------------
// Grounding
// ---------------------------------------------------------------------------

// Maps a sort to its finite domain, or nullopt for sorts to be left
// symbolic. Tests may override to put grids under Real sorts.
using SortEnv = std::function<std::optional<std::vector<Value>>(const Sort&)>;
SortEnv defaultSortEnv();

// Expands Forall/Exists whose sort resolves to a finite domain into
// conjunctions/disjunctions; leaves unresolved quantifiers intact.
FormulaPtr ground(const FormulaPtr& f, const SortEnv& env);
FormulaPtr ground(const FormulaPtr& f);

bool hasQuantifier(const FormulaPtr& f);

// ---------------------------------------------------------------------------
// Printing (matches the input grammar; see parser)
// ---------------------------------------------------------------------------

std::string printTerm(const TermPtr& t, const Signature* sig = nullptr);
std::string printFormula(const FormulaPtr& f, const Signature* sig = nullptr);

}  // namespace cplusmt
