#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cplusmt/completion.hpp"
#include "cplusmt/logic.hpp"

namespace cplusmt {

struct SolveError : Error {
  using Error::Error;
};

struct EmitOptions {
  bool allowQuantifiers = false;
  // Extra '(set-option :key value)' lines, emitted before set-logic in the
  // given order.
  std::vector<std::pair<std::string, std::string>> options;
};

// A complete SMT-LIB2 instance. Emission is deterministic: identical input
// produces identical bytes.
struct SmtInstance {
  std::string logic;
  std::vector<std::pair<std::string, std::string>> options;
  const Signature* sig = nullptr;
  std::vector<std::string> declarations;                     // (declare-fun ...)
  std::vector<std::string> sortBounds;                       // range assertions
  std::vector<std::pair<std::string, std::string>> asserts;  // label, body s-expr
  std::string text() const;
};

// Booleans map to Bool, Real/NonNegReal to Real (with a >= 0 bound),
// IntRange and Enum to Int with range bounds; Enum values are the symbol's
// declaration index. The logic is linear unless two non-constant factors
// are multiplied (or a divisor mentions a constant).
SmtInstance emit(const CompletedFormula& f, const Signature& sig,
                 const EmitOptions& opts = {},
                 const std::vector<std::pair<std::string, FormulaPtr>>& extraAsserts = {});

struct ModelValue {
  Value value;
  bool exact = true;
  std::string raw;
};

struct SolverModel {
  std::map<int, ModelValue> values;  // total on declared constants
  bool approximate = false;          // any inexact value present
  std::string rawText;
};

enum class SolveStatus { Sat, Unsat, Unknown };

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  SolverModel model;  // Sat only
  std::string solverOutput;
};

struct SolveOptions {
  bool strictModels = false;          // reject approximate model values
  std::string dumpPath;               // keep the instance file here
};

// Writes the instance to a file and runs 'solverCmd FILE' through the
// shell, expecting a sat/unsat/unknown verdict plus a get-model
// S-expression. Crashes and unparseable output raise SolveError with the
// captured text.
SolveResult solve(const SmtInstance& inst, const std::string& solverCmd,
                  const SolveOptions& opts = {});

// Exposed for tests: parses a get-model S-expression against a signature.
SolverModel parseModel(const std::string& text, const Signature& sig, bool strict);

}  // namespace cplusmt
