#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cplusmt/logic.hpp"
#include "cplusmt/translate.hpp"

namespace cplusmt {

// A ground theory over explicit finite value domains, suitable for direct
// enumeration. Domains may be grids of rationals standing in for Real
// sorts (finite surrogates).
struct FiniteTheory {
  const Signature* sig = nullptr;
  FormulaPtr formula;                        // ground; finite quantifiers allowed
  std::vector<int> intensional;              // ascending ids
  std::vector<std::vector<Value>> domains;   // per constant id
  // Constants enumerated predicate-style in the candidate search: a
  // candidate value may be true only where the current value is true.
  // Off by default; the Ferraris cross-check switches it on.
  std::vector<bool> predicateLike;
  std::uint64_t enumerationBound = 1000000;
};

// Builds a theory from a timed program whose sorts are all finite.
FiniteTheory makeFiniteTheory(const TimedProgram& p, std::uint64_t bound = 1000000);

// The F* transform for a candidate assignment to the intensional constants:
// atoms become (F with intensional constants replaced by their candidate
// values) AND F; implications additionally keep the original implication.
FormulaPtr star(const FormulaPtr& f, const std::map<int, Value>& candidate);

// All interpretations satisfying the formula (classical, exact arithmetic).
std::vector<Interpretation> classicalModels(const FiniteTheory& t);

// Stable models by definition: models of the formula with no strictly
// smaller candidate satisfying the star transform. Deterministic
// (lexicographic) order. Throws EvalError when the enumeration bound is
// exceeded.
std::vector<Interpretation> stableModels(const FiniteTheory& t);

// Independent checker for theories whose constants are all Boolean-valued
// and whose atoms are of the form c=true: treats each constant as a
// propositional atom, computes the reduct (false subformulas replaced by
// falsum), and asks for minimality within the intensional constants.
std::vector<Interpretation> ferrarisStableModels(const FiniteTheory& t);

}  // namespace cplusmt
