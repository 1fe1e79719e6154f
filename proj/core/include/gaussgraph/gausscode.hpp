#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gaussgraph/chords.hpp"
#include "gaussgraph/graph.hpp"
#include "gaussgraph/planar_map.hpp"
#include "gaussgraph/text_format.hpp"

namespace gaussgraph {

/// Cyclic crossing sequence of a closed curve.
struct CrossingSequence {
  std::vector<Token> tokens;

  bool operator==(const CrossingSequence&) const = default;
};

/// Symbols of one edge, read from tail to head.
struct CodeRecord {
  std::string edge;
  Anchor tail;
  std::vector<Token> tokens;
  Anchor head;

  bool operator==(const CodeRecord&) const = default;
};

struct GraphGaussCode {
  std::vector<std::string> vertices;
  /// one record per edge, in edge id order
  std::vector<CodeRecord> records;

  bool operator==(const GraphGaussCode&) const = default;
};

using ParsedCode = std::variant<GraphGaussCode, CrossingSequence>;

enum class TokenMode {
  /// plain symbols only
  Unsplit,
  /// every token is split; `~A` is barred
  Split,
};

/// `curve : A B A B` or vertex/edge lines with `: tokens` after the anchors.
/// Throws ParseError with the line and column of the problem.
ParsedCode parse_code(std::string_view text, TokenMode mode = TokenMode::Unsplit);
CrossingSequence parse_curve_word(std::string_view word, TokenMode mode = TokenMode::Unsplit);

std::string format_token(const Token& t);
std::string format_tokens(const std::vector<Token>& tokens);
std::string write_code(const ParsedCode& code);

/// Checks anchors and symbol counts; throws std::invalid_argument.
void validate(const GraphGaussCode& code);
void validate(const CrossingSequence& seq);

/// Name of the synthetic vertex a closed curve is attached to.
inline constexpr const char* kBasepoint = "*";
inline constexpr const char* kCurveEdge = "curve";

/// A closed curve as a one-loop graph on the basepoint.
GraphGaussCode curve_as_graph(const CrossingSequence& seq);

/// Underlying embedded graph of a code: vertices, one edge per record,
/// rotation from the anchors.
EmbeddedGraph underlying_graph(const GraphGaussCode& code);

enum class SplitCase { SameEdge, CrossEdgeA, CrossEdgeB };

const char* to_string(SplitCase c);

struct SplitStep {
  std::string symbol;
  SplitCase kind = SplitCase::SameEdge;
  /// sequences right after this step
  GraphGaussCode snapshot;
};

struct SplitTrace {
  GraphGaussCode initial;
  std::vector<SplitStep> steps;

  /// Sequences before step i (the initial code for i = 0).
  const GraphGaussCode& before(std::size_t i) const { return i == 0 ? initial : steps[i - 1].snapshot; }
};

/// Splits one unsplit symbol. Throws std::invalid_argument if the symbol does
/// not occur twice unsplit.
SplitStep split_at(const GraphGaussCode& code, const std::string& symbol);

/// Symbols in first-occurrence order: records ascending, tokens tail to head.
std::vector<std::string> split_order(const GraphGaussCode& code);

struct SplitCode {
  GraphGaussCode code;  // every token split
  SplitTrace trace;
};

SplitCode full_split(const GraphGaussCode& code);

/// Split graph G*, its rotation and the chord diagram C* of the split tokens
/// (chord id = symbol, endpoint a = first token).
struct SplitGraph {
  Multigraph graph;
  RotationSystem rotation;
  ChordDiagram chords;
};

SplitGraph build_split_graph(const GraphGaussCode& split);

/// Every symbol encloses an even number of tokens.
bool evenly_intersticed(const CrossingSequence& seq);

/// Same code up to symbol renaming, plus cyclic rotation for curves or a
/// cyclic shift of the slots at each vertex for graphs. Edges are matched by
/// name and direction. Mirror images are not identified.
bool equivalent_codes(const ParsedCode& a, const ParsedCode& b);

/// Whether a fully split cyclic sequence arises from splitting some crossing
/// sequence, found by undoing splits in every possible order.
bool is_split_code(const CrossingSequence& split);

}  // namespace gaussgraph
