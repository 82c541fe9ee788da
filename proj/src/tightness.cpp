#include "cplusmt/tightness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cplusmt {

namespace {

void spWalk(const FormulaPtr& f, bool antecedent, std::vector<int>& sp,
            std::vector<std::pair<FormulaPtr, FormulaPtr>>* spImplications) {
  switch (f->kind) {
    case Formula::Kind::Falsum: break;
    case Formula::Kind::Equal:
    case Formula::Kind::Cmp:
      if (!antecedent) {
        collectConstants(f->lhs, sp);
        collectConstants(f->rhs, sp);
      }
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      spWalk(f->f, antecedent, sp, spImplications);
      spWalk(f->g, antecedent, sp, spImplications);
      break;
    case Formula::Kind::Implies:
      if (!antecedent && spImplications) spImplications->emplace_back(f->f, f->g);
      spWalk(f->f, true, sp, spImplications);
      spWalk(f->g, antecedent, sp, spImplications);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: spWalk(f->f, antecedent, sp, spImplications); break;
  }
}

std::vector<int> spConstants(const FormulaPtr& f,
                             std::vector<std::pair<FormulaPtr, FormulaPtr>>* spImplications) {
  std::vector<int> sp;
  spWalk(f, false, sp, spImplications);
  std::sort(sp.begin(), sp.end());
  sp.erase(std::unique(sp.begin(), sp.end()), sp.end());
  return sp;
}

}  // namespace

std::vector<int> strictlyPositiveConstants(const FormulaPtr& f) {
  return spConstants(f, nullptr);
}

bool DependencyGraph::hasEdge(int from, int to) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(from, to));
}

DependencyGraph buildGraph(const TimedProgram& p) {
  DependencyGraph g;
  g.vertices = p.intensional;
  std::set<std::pair<int, int>> edges;

  // Strictly positive implication occurrences; for the rule form these are
  // exactly the rules, but the walk also picks up implications nested in
  // strictly positive positions of arbitrary formulas.
  std::vector<std::pair<FormulaPtr, FormulaPtr>> imps;
  for (const TimedRule& r : p.rules) {
    if (isTruth(r.body)) {
      // Unconditional rule: head only, no implication occurrence.
      spConstants(r.head, &imps);
      continue;
    }
    imps.emplace_back(r.body, r.head);
    // Nested strictly positive implications inside the head (heads are
    // atomic here, so this is vacuous, but keep the walk general).
    spConstants(r.head, &imps);
  }
  for (std::size_t k = 0; k < imps.size(); ++k) {
    auto [g1, h1] = imps[k];
    std::vector<int> headSp = spConstants(h1, &imps);
    std::vector<int> bodySp = spConstants(g1, nullptr);
    for (int c : headSp) {
      if (!p.isIntensional(c)) continue;
      for (int d : bodySp) {
        if (!p.isIntensional(d)) continue;
        edges.insert({c, d});
      }
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

TightnessResult isTight(const TimedProgram& p) {
  DependencyGraph g = buildGraph(p);
  TightnessResult res;

  std::map<int, std::vector<int>> succ;
  std::map<int, int> indeg;
  for (int v : g.vertices) {
    succ[v];
    indeg[v] = 0;
  }
  for (const auto& [from, to] : g.edges) {
    succ[from].push_back(to);
    ++indeg[to];
  }

  // Kahn's algorithm; leftover vertices are on or reachable into a cycle.
  std::vector<int> queue;
  for (int v : g.vertices)
    if (indeg[v] == 0) queue.push_back(v);
  std::vector<int> order;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    order.push_back(v);
    for (int w : succ[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  if (order.size() == g.vertices.size()) {
    res.tight = true;
    res.order = std::move(order);
    return res;
  }

  // Extract a concrete cycle. Every leftover vertex still has an incoming
  // edge from another leftover vertex, so walking predecessors must revisit
  // one; the visited stretch, reversed, is a cycle.
  std::set<int> remaining;
  for (int v : g.vertices)
    if (indeg[v] > 0) remaining.insert(v);
  std::map<int, std::vector<int>> pred;
  for (const auto& [from, to] : g.edges)
    if (remaining.count(from) && remaining.count(to)) pred[to].push_back(from);
  int start = *remaining.begin();
  std::vector<int> path{start};
  std::set<int> onPath{start};
  for (;;) {
    int back = pred[path.back()].front();
    if (onPath.count(back)) {
      auto it = std::find(path.begin(), path.end(), back);
      res.cycle.assign(it, path.end());
      std::reverse(res.cycle.begin(), res.cycle.end());
      res.cycle.insert(res.cycle.begin(), back);
      break;
    }
    path.push_back(back);
    onPath.insert(back);
  }
  res.tight = false;
  return res;
}

std::string TightnessResult::describeCycle(const Signature& sig) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) os << " -> ";
    os << sig.at(cycle[i]).display;
  }
  return os.str();
}

}  // namespace cplusmt
