#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cplusmt/translate.hpp"

namespace cplusmt {

// Constants with at least one strictly positive occurrence in f, i.e. an
// occurrence not in the antecedent of any implication (so nothing under a
// double negation qualifies). Sorted, deduplicated ids.
std::vector<int> strictlyPositiveConstants(const FormulaPtr& f);

struct DependencyGraph {
  std::vector<int> vertices;                  // the intensional constants
  std::vector<std::pair<int, int>> edges;     // sorted, deduplicated
  bool hasEdge(int from, int to) const;
};

// Edge c -> d when some strictly positive occurrence of G -> H in the
// program has c strictly positive in H and d strictly positive in G, both
// restricted to the intensional constants.
DependencyGraph buildGraph(const TimedProgram& p);

struct TightnessResult {
  bool tight = false;
  std::vector<int> order;  // topological order of the vertices when tight
  std::vector<int> cycle;  // a witness cycle (first vertex repeated last) otherwise
  std::string describeCycle(const Signature& sig) const;
};

TightnessResult isTight(const TimedProgram& p);

}  // namespace cplusmt
