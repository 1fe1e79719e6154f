#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gaussgraph/graph.hpp"

namespace gaussgraph {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

struct Word {
  std::string text;
  int column = 1;  // 1-based
};

struct Line {
  int number = 1;  // 1-based
  std::vector<Word> words;
};

/// Splits text into whitespace-separated words, dropping `#` comments and
/// blank lines.
std::vector<Line> split_lines(std::string_view text);

struct Anchor {
  std::string vertex;
  int slot = 0;

  bool operator==(const Anchor&) const = default;
};

/// Parses `<vertex>:<slot>`.
Anchor parse_anchor(const Word& word, int line);

struct EmbeddedGraph {
  Multigraph graph;
  RotationSystem rotation;
};

/// Builds a rotation from per-dart slots, checking that the slots at each
/// vertex are exactly 0..deg-1. `slots[d.index()]` is the slot of dart d;
/// `lines[e]` is the source line of edge e, used for diagnostics.
RotationSystem rotation_from_slots(const Multigraph& g, const std::vector<int>& slots,
                                   const std::vector<int>& lines);

/// Graph format: `vertex <name>` and `edge <name> <tail>:<slot> <head>:<slot>`.
EmbeddedGraph parse_graph(std::string_view text);
std::string write_graph(const Multigraph& g, const RotationSystem& rot);

}  // namespace gaussgraph
