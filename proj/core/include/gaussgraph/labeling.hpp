#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gaussgraph {

/// Region assignment problem: every item picks one of at most two candidate
/// regions, conflicting items may not share a region, and each exclusive pair
/// must put exactly one item into a primary region. Solved as 2-SAT.
struct LabelProblem {
  /// Candidate regions per item, most preferred first. One or two entries.
  std::vector<std::vector<int>> candidates;
  /// Pairs of items that may not take the same region.
  std::vector<std::pair<int, int>> conflicts;
  /// Pairs of items of which exactly one takes a primary region.
  std::vector<std::pair<int, int>> exclusive;
  /// Per region: primary or not. Only consulted for `exclusive` pairs.
  std::vector<bool> primary;
  /// Items are assigned in this order when breaking ties.
  std::vector<int> order;
};

enum class ImplicationReason { Conflict, Exclusive, Forced };

const char* to_string(ImplicationReason r);

/// "item takes region"
struct Choice {
  int item = 0;
  int region = 0;

  bool operator==(const Choice&) const = default;
};

/// Step `from -> to` of an implication chain; `reason` names the constraint
/// that forces it.
struct Implication {
  Choice from;
  Choice to;
  ImplicationReason reason = ImplicationReason::Conflict;
  int other = -1;  // partner item for Conflict / Exclusive
};

struct LabelOutcome {
  bool satisfiable = false;
  /// chosen region per item
  std::vector<int> region;
  /// For unsatisfiable problems: a chain x -> ... -> not x -> ... -> x.
  std::vector<Implication> contradiction;
};

LabelOutcome solve_labeling(const LabelProblem& problem);

/// Checks that every step of `chain` follows from a constraint of `problem`
/// and that the chain closes on the same choice after passing through a
/// different choice for the same item.
bool implication_chain_valid(const LabelProblem& problem, const std::vector<Implication>& chain);

}  // namespace gaussgraph
