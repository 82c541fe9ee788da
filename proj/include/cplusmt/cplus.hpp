#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cplusmt/logic.hpp"

namespace cplusmt {

struct SourceLoc {
  std::string file;
  int line = 0;
  int col = 0;
  std::string str() const;
};

struct ParseError : Error {
  ParseError(const SourceLoc& loc, const std::string& msg);
  SourceLoc loc;
};

// ---------------------------------------------------------------------------
// Surface statements (pre-desugar) and causal laws (post-desugar)
// ---------------------------------------------------------------------------

enum class LawKind { Static, ActionDynamic, FluentDynamic };

struct CausalLaw {
  LawKind kind = LawKind::Static;
  FormulaPtr head;       // falsum or an atomic c(args)=v with background value term
  FormulaPtr ifPart;     // truth() when absent
  FormulaPtr afterPart;  // FluentDynamic only; truth() otherwise
  SourceLoc loc;
};

struct IncrementLaw {
  TermPtr trigger;  // Boolean action constant or Boolean simple fluent (process fluent)
  TermPtr target;   // additive (numeric simple) fluent constant
  TermPtr amount;
  FormulaPtr cond;  // truth() when absent
  SourceLoc loc;
};

struct Statement {
  enum class Kind {
    Caused,      // caused F [if G] [after H]
    Constraint,  // constraint F [after H]
    Always,      // always F
    Default,     // default c=v
    Inertial,    // inertial c, ...
    Exogenous,   // exogenous c, ...
    Causes,      // a causes F
    Increments,  // p increments c by E [if G]
  };
  Kind kind = Kind::Caused;
  FormulaPtr head, ifPart, afterPart;   // Caused; Constraint/Always use head as F
  FormulaPtr defaultAtom;               // Default
  std::vector<TermPtr> constants;       // Inertial / Exogenous
  TermPtr trigger, target, amount;      // Causes (trigger+head) / Increments
  SourceLoc loc;
};

struct SortDecl {
  std::string name;
  std::vector<std::string> symbols;
};

struct VarDecl {
  std::string name;
  Sort sort;
};

struct ParamDef {
  std::string name;
  std::vector<Value> args;
  Rational value;
};

struct QuerySpec {
  // maxstep :: lo..hi (lo == hi for a fixed horizon); -1 when absent.
  int minStep = -1;
  int maxStep = -1;
  struct Item {
    enum class At { Step, MaxStep, Each };
    At at = At::Step;
    int step = 0;  // At::Step only
    FormulaPtr formula;
    SourceLoc loc;
  };
  std::vector<Item> items;
  bool present() const { return maxStep >= 0 || !items.empty(); }
};

struct ActionDescription {
  std::vector<SortDecl> sorts;
  std::vector<ConstantDecl> constants;
  std::vector<VarDecl> variables;
  std::vector<ParamDef> parameters;
  std::vector<Statement> statements;    // as parsed; consumed by desugar
  std::vector<CausalLaw> laws;          // populated by desugar
  std::vector<IncrementLaw> increments; // populated by desugar, consumed by expandIncrements
  QuerySpec query;
  bool desugared = false;
  bool incrementsExpanded = false;
  bool grounded = false;
  // Populated by groundLaws: ground constants in declaration-major order,
  // law formulas rewritten to Const references.
  Signature groundSig;

  const ConstantDecl* findConstant(const std::string& name) const;
  const VarDecl* findVariable(const std::string& name) const;
  const SortDecl* findSort(const std::string& name) const;
  const ParamDef* findParameter(const std::string& name, const std::vector<Value>& args) const;
  Sort resolveSort(const std::string& name) const;  // builtin or declared enum
};

// ---------------------------------------------------------------------------
// Frontend passes
// ---------------------------------------------------------------------------

ActionDescription parse(const std::string& text, const std::string& filename = "<input>");

// Expands exogenous/inertial/constraint/always/default/causes statements into
// the three law kinds plus increment laws, and validates definiteness and
// law-kind restrictions. Idempotent on its own output.
ActionDescription desugar(const ActionDescription& d);

// Replaces increment laws with contribution action constants: per ground
// (trigger p, target c) a constant Contr(p,c) defined by p's increment laws
// and zero when p is false, plus one summation law per target. Idempotent.
ActionDescription expandIncrements(const ActionDescription& d);

// Instantiates finite-sort law variables, resolves parameters to literals,
// builds the ground signature, and rewrites laws over it. Variables of Real
// sorts remain, implicitly universal at the law level.
ActionDescription groundLaws(const ActionDescription& d);

// parse . desugar . expandIncrements . groundLaws, with the intermediate
// description retained for pretty-printing.
struct LoadedDomain {
  ActionDescription parsed;
  ActionDescription ground;
};
LoadedDomain loadDomain(const std::string& text, const std::string& filename = "<input>");

// Round-trippable source form of a parsed (pre-desugar) description.
std::string printDescription(const ActionDescription& d);
std::string printLaw(const CausalLaw& law, const Signature* sig = nullptr);

// Set of Boolean simple fluents used as increment triggers.
std::vector<std::string> processFluents(const ActionDescription& d);

}  // namespace cplusmt
