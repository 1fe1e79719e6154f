#include "gaussgraph/labeling.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace gaussgraph {

const char* to_string(ImplicationReason r) {
  switch (r) {
    case ImplicationReason::Conflict:
      return "conflict";
    case ImplicationReason::Exclusive:
      return "exclusive";
    case ImplicationReason::Forced:
      return "forced";
  }
  return "?";
}

namespace {

// Literal 2*item + slot means "item takes candidates[item][slot]"; slot 1 of a
// single-candidate item stands for "no region" and is forbidden.
struct Arc {
  int to;
  ImplicationReason reason;
  int other;
};

struct ImplicationGraph {
  std::vector<std::vector<Arc>> arcs;

  void clause_not_both(int p, int q, ImplicationReason reason, int item_p, int item_q) {
    arcs[p].push_back({q ^ 1, reason, item_q});
    arcs[q].push_back({p ^ 1, reason, item_p});
  }
};

int region_of(const LabelProblem& pb, int lit) {
  const auto& cand = pb.candidates[lit / 2];
  return (lit % 2) < static_cast<int>(cand.size()) ? cand[lit % 2] : -1;
}

ImplicationGraph build(const LabelProblem& pb) {
  const int n = static_cast<int>(pb.candidates.size());
  ImplicationGraph g;
  g.arcs.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    if (pb.candidates[i].empty() || pb.candidates[i].size() > 2)
      throw std::invalid_argument("label problem: every item needs one or two candidates");
    if (pb.candidates[i].size() == 1) g.arcs[2 * i + 1].push_back({2 * i, ImplicationReason::Forced, -1});
  }
  for (auto [a, b] : pb.conflicts) {
    for (int i = 0; i < static_cast<int>(pb.candidates[a].size()); ++i)
      for (int j = 0; j < static_cast<int>(pb.candidates[b].size()); ++j)
        if (pb.candidates[a][i] == pb.candidates[b][j])
          g.clause_not_both(2 * a + i, 2 * b + j, ImplicationReason::Conflict, a, b);
  }
  for (auto [a, b] : pb.exclusive) {
    for (int i = 0; i < static_cast<int>(pb.candidates[a].size()); ++i)
      for (int j = 0; j < static_cast<int>(pb.candidates[b].size()); ++j)
        if (pb.primary.at(pb.candidates[a][i]) == pb.primary.at(pb.candidates[b][j]))
          g.clause_not_both(2 * a + i, 2 * b + j, ImplicationReason::Exclusive, a, b);
  }
  return g;
}

std::vector<int> components(const ImplicationGraph& g) {
  const int n = static_cast<int>(g.arcs.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0, ncomp = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (const Arc& a : g.arcs[v]) {
      if (index[a.to] == -1) {
        visit(a.to);
        low[v] = std::min(low[v], low[a.to]);
      } else if (on_stack[a.to]) {
        low[v] = std::min(low[v], index[a.to]);
      }
    }
    if (low[v] == index[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = ncomp;
      } while (w != v);
      ++ncomp;
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] == -1) visit(v);
  return comp;
}

std::vector<Implication> shortest_chain(const LabelProblem& pb, const ImplicationGraph& g, int from, int to) {
  const int n = static_cast<int>(g.arcs.size());
  std::vector<int> prev(n, -1);
  std::vector<const Arc*> via(n, nullptr);
  std::queue<int> q;
  q.push(from);
  prev[from] = from;
  while (!q.empty() && prev[to] == -1) {
    int v = q.front();
    q.pop();
    for (const Arc& a : g.arcs[v]) {
      if (prev[a.to] != -1) continue;
      prev[a.to] = v;
      via[a.to] = &a;
      q.push(a.to);
    }
  }
  if (prev[to] == -1) throw std::logic_error("label problem: expected implication path missing");
  std::vector<Implication> chain;
  for (int v = to; v != from; v = prev[v]) {
    int u = prev[v];
    chain.push_back({{u / 2, region_of(pb, u)}, {v / 2, region_of(pb, v)}, via[v]->reason, via[v]->other});
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

LabelOutcome solve_labeling(const LabelProblem& pb) {
  const int n = static_cast<int>(pb.candidates.size());
  const ImplicationGraph g = build(pb);
  const auto comp = components(g);

  LabelOutcome out;
  for (int i = 0; i < n; ++i) {
    if (comp[2 * i] != comp[2 * i + 1]) continue;
    out.contradiction = shortest_chain(pb, g, 2 * i, 2 * i + 1);
    auto back = shortest_chain(pb, g, 2 * i + 1, 2 * i);
    out.contradiction.insert(out.contradiction.end(), back.begin(), back.end());
    return out;
  }

  // Greedy assignment in the requested order with unit propagation; complete
  // for satisfiable 2-SAT.
  std::vector<int> value(2 * n, -1);  // literal -> 1 true, 0 false
  auto propagate = [&](int lit, std::vector<int>& touched) {
    std::queue<int> q;
    auto set = [&](int l) {
      if (value[l] == 1) return true;
      if (value[l] == 0) return false;
      value[l] = 1;
      value[l ^ 1] = 0;
      touched.push_back(l);
      q.push(l);
      return true;
    };
    if (!set(lit)) return false;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : g.arcs[v])
        if (!set(a.to)) return false;
    }
    return true;
  };
  std::vector<int> order = pb.order;
  if (order.empty())
    for (int i = 0; i < n; ++i) order.push_back(i);
  for (int item : order) {
    if (value[2 * item] != -1) continue;
    std::vector<int> touched;
    if (propagate(2 * item, touched)) continue;
    for (int l : touched) value[l] = value[l ^ 1] = -1;
    touched.clear();
    if (!propagate(2 * item + 1, touched)) throw std::logic_error("label problem: propagation failed on a satisfiable instance");
  }
  out.satisfiable = true;
  out.region.resize(n);
  for (int i = 0; i < n; ++i) {
    out.region[i] = value[2 * i] == 1 ? pb.candidates[i][0] : region_of(pb, 2 * i + 1);
    if (out.region[i] < 0) throw std::logic_error("label problem: item left without a region");
  }
  return out;
}

bool implication_chain_valid(const LabelProblem& pb, const std::vector<Implication>& chain) {
  if (chain.empty()) return false;
  const ImplicationGraph g = build(pb);
  auto literal = [&](const Choice& c) -> int {
    if (c.item < 0 || c.item >= static_cast<int>(pb.candidates.size())) return -1;
    for (int slot = 0; slot < 2; ++slot)
      if (region_of(pb, 2 * c.item + slot) == c.region) return 2 * c.item + slot;
    return -1;
  };
  bool flipped = false;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const Implication& step = chain[k];
    int from = literal(step.from), to = literal(step.to);
    if (from < 0 || to < 0) return false;
    if (k + 1 < chain.size() && !(chain[k + 1].from == step.to)) return false;
    bool found = false;
    for (const Arc& a : g.arcs[from])
      if (a.to == to && a.reason == step.reason) found = true;
    if (!found) return false;
    if (step.to.item == chain.front().from.item && step.to.region != chain.front().from.region) flipped = true;
  }
  return flipped && chain.back().to == chain.front().from;
}

}  // namespace gaussgraph
