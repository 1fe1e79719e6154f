#include "gaussgraph/gausscode.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gaussgraph {

namespace {

std::vector<Token> reversed(std::vector<Token> tokens) {
  std::reverse(tokens.begin(), tokens.end());
  for (Token& t : tokens)
    if (t.split) t.mark = flip(t.mark);
  return tokens;
}

std::vector<Token> concat(std::initializer_list<std::vector<Token>> parts) {
  std::vector<Token> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<Token> slice(const std::vector<Token>& t, std::size_t from, std::size_t to) {
  return {t.begin() + static_cast<std::ptrdiff_t>(from), t.begin() + static_cast<std::ptrdiff_t>(to)};
}

bool valid_symbol(const std::string& s) {
  return !s.empty() && s.find_first_of("~:#") == std::string::npos;
}

struct Occurrence {
  int line = 0;
  int column = 0;
};

Token parse_token(const Word& w, int line, TokenMode mode) {
  Token t;
  std::string s = w.text;
  if (!s.empty() && s.front() == '~') {
    if (mode == TokenMode::Unsplit)
      throw ParseError(line, w.column, "barred token '" + s + "' in an unsplit code");
    t.mark = Mark::Barred;
    s.erase(0, 1);
  }
  if (!valid_symbol(s)) throw ParseError(line, w.column, "bad symbol '" + w.text + "'");
  t.symbol = s;
  t.split = mode == TokenMode::Split;
  return t;
}

void check_symbol_counts(const std::map<std::string, std::vector<Occurrence>>& seen) {
  for (const auto& [symbol, occ] : seen) {
    if (occ.size() == 2) continue;
    const Occurrence& at = occ.size() > 2 ? occ[2] : occ[0];
    throw ParseError(at.line, at.column,
                     "symbol '" + symbol + "' occurs " + std::to_string(occ.size()) + " time(s), expected 2");
  }
}

void check_tokens(const std::vector<const std::vector<Token>*>& lists) {
  std::map<std::string, std::vector<const Token*>> seen;
  for (const auto* list : lists)
    for (const Token& t : *list) {
      if (!valid_symbol(t.symbol)) throw std::invalid_argument("bad symbol '" + t.symbol + "'");
      if (!t.split && t.mark != Mark::Plain)
        throw std::invalid_argument("unsplit token '" + t.symbol + "' carries a mark");
      seen[t.symbol].push_back(&t);
    }
  for (const auto& [symbol, occ] : seen) {
    if (occ.size() != 2)
      throw std::invalid_argument("symbol '" + symbol + "' occurs " + std::to_string(occ.size()) +
                                  " time(s), expected 2");
    if (occ[0]->split != occ[1]->split)
      throw std::invalid_argument("symbol '" + symbol + "' is split at one occurrence only");
  }
}

bool code_connected(const GraphGaussCode& code) {
  std::map<std::string, std::string> parent;
  for (const auto& v : code.vertices) parent[v] = v;
  auto find = [&](std::string v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& r : code.records) parent[find(r.tail.vertex)] = find(r.head.vertex);
  std::set<std::string> roots;
  for (const auto& v : code.vertices) roots.insert(find(v));
  return roots.size() <= 1;
}

}  // namespace

CrossingSequence parse_curve_word(std::string_view word, TokenMode mode) {
  return std::get<CrossingSequence>(parse_code("curve : " + std::string(word), mode));
}

ParsedCode parse_code(std::string_view text, TokenMode mode) {
  const std::vector<Line> lines = split_lines(text);
  std::map<std::string, std::vector<Occurrence>> seen;
  auto tokens_after = [&](const Line& line, std::size_t first) {
    std::vector<Token> out;
    for (std::size_t i = first; i < line.words.size(); ++i) {
      out.push_back(parse_token(line.words[i], line.number, mode));
      seen[out.back().symbol].push_back({line.number, line.words[i].column});
    }
    return out;
  };

  if (!lines.empty() && lines[0].words[0].text == "curve") {
    const Line& line = lines[0];
    if (line.words.size() < 2 || line.words[1].text != ":")
      throw ParseError(line.number, line.words[0].column, "expected: curve : <symbols>");
    if (lines.size() > 1) throw ParseError(lines[1].number, lines[1].words[0].column, "unexpected line after curve");
    CrossingSequence seq{tokens_after(line, 2)};
    check_symbol_counts(seen);
    return seq;
  }

  GraphGaussCode code;
  std::set<std::string> vertices, edges;
  std::vector<int> record_lines;
  for (const Line& line : lines) {
    const auto& w = line.words;
    if (w[0].text == "vertex") {
      if (w.size() != 2) throw ParseError(line.number, w[0].column, "expected: vertex <name>");
      if (!vertices.insert(w[1].text).second)
        throw ParseError(line.number, w[1].column, "duplicate vertex '" + w[1].text + "'");
      code.vertices.push_back(w[1].text);
    } else if (w[0].text == "edge") {
      if (w.size() < 4 || (w.size() > 4 && w[4].text != ":"))
        throw ParseError(line.number, w[0].column,
                         "expected: edge <name> <tail>:<slot> <head>:<slot> [: <symbols>]");
      if (!edges.insert(w[1].text).second)
        throw ParseError(line.number, w[1].column, "duplicate edge '" + w[1].text + "'");
      CodeRecord r;
      r.edge = w[1].text;
      r.tail = parse_anchor(w[2], line.number);
      r.head = parse_anchor(w[3], line.number);
      if (!vertices.count(r.tail.vertex))
        throw ParseError(line.number, w[2].column, "unknown vertex '" + r.tail.vertex + "'");
      if (!vertices.count(r.head.vertex))
        throw ParseError(line.number, w[3].column, "unknown vertex '" + r.head.vertex + "'");
      r.tokens = tokens_after(line, 5);
      code.records.push_back(std::move(r));
      record_lines.push_back(line.number);
    } else {
      throw ParseError(line.number, w[0].column, "unknown directive '" + w[0].text + "'");
    }
  }
  check_symbol_counts(seen);

  Multigraph g;
  for (const auto& v : code.vertices) g.add_vertex(v);
  std::vector<int> slots;
  for (const auto& r : code.records) {
    g.add_edge(r.edge, *g.find_vertex(r.tail.vertex), *g.find_vertex(r.head.vertex));
    slots.push_back(r.tail.slot);
    slots.push_back(r.head.slot);
  }
  rotation_from_slots(g, slots, record_lines);
  return code;
}

std::string format_token(const Token& t) { return (t.split && t.mark == Mark::Barred ? "~" : "") + t.symbol; }

std::string format_tokens(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty()) out += ' ';
    out += format_token(t);
  }
  return out;
}

std::string write_code(const ParsedCode& code) {
  std::ostringstream out;
  if (const auto* seq = std::get_if<CrossingSequence>(&code)) {
    out << "curve :";
    for (const Token& t : seq->tokens) out << ' ' << format_token(t);
    out << '\n';
    return out.str();
  }
  const auto& g = std::get<GraphGaussCode>(code);
  for (const auto& v : g.vertices) out << "vertex " << v << '\n';
  for (const auto& r : g.records) {
    out << "edge " << r.edge << ' ' << r.tail.vertex << ':' << r.tail.slot << ' ' << r.head.vertex << ':'
        << r.head.slot;
    if (!r.tokens.empty()) out << " : " << format_tokens(r.tokens);
    out << '\n';
  }
  return out.str();
}

EmbeddedGraph underlying_graph(const GraphGaussCode& code) {
  Multigraph g;
  for (const auto& v : code.vertices) {
    if (g.find_vertex(v)) throw std::invalid_argument("duplicate vertex '" + v + "'");
    g.add_vertex(v);
  }
  std::vector<int> slots;
  for (const auto& r : code.records) {
    auto t = g.find_vertex(r.tail.vertex);
    auto h = g.find_vertex(r.head.vertex);
    if (!t || !h) throw std::invalid_argument("edge '" + r.edge + "' has an unknown vertex");
    if (g.find_edge(r.edge)) throw std::invalid_argument("duplicate edge '" + r.edge + "'");
    g.add_edge(r.edge, *t, *h);
    slots.push_back(r.tail.slot);
    slots.push_back(r.head.slot);
  }
  try {
    RotationSystem rot = rotation_from_slots(g, slots, {});
    return {std::move(g), std::move(rot)};
  } catch (const ParseError& e) {
    throw std::invalid_argument(e.detail());
  }
}

void validate(const GraphGaussCode& code) {
  underlying_graph(code);
  std::vector<const std::vector<Token>*> lists;
  for (const auto& r : code.records) lists.push_back(&r.tokens);
  check_tokens(lists);
}

void validate(const CrossingSequence& seq) { check_tokens({&seq.tokens}); }

GraphGaussCode curve_as_graph(const CrossingSequence& seq) {
  GraphGaussCode code;
  code.vertices = {kBasepoint};
  code.records.push_back({kCurveEdge, {kBasepoint, 0}, seq.tokens, {kBasepoint, 1}});
  return code;
}

const char* to_string(SplitCase c) {
  switch (c) {
    case SplitCase::SameEdge:
      return "same-edge";
    case SplitCase::CrossEdgeA:
      return "cross-edge-A";
    case SplitCase::CrossEdgeB:
      return "cross-edge-B";
  }
  return "?";
}

SplitStep split_at(const GraphGaussCode& code, const std::string& symbol) {
  std::vector<std::pair<std::size_t, std::size_t>> at;
  for (std::size_t r = 0; r < code.records.size(); ++r)
    for (std::size_t i = 0; i < code.records[r].tokens.size(); ++i) {
      const Token& t = code.records[r].tokens[i];
      if (t.symbol != symbol) continue;
      if (t.split) throw std::invalid_argument("symbol '" + symbol + "' is already split");
      at.emplace_back(r, i);
    }
  if (at.size() != 2) throw std::invalid_argument("symbol '" + symbol + "' does not occur twice");

  const Token plain{symbol, true, Mark::Plain};
  const Token barred{symbol, true, Mark::Barred};
  SplitStep step{symbol, SplitCase::SameEdge, code};
  auto& recs = step.snapshot.records;
  const auto [r1, i1] = at[0];
  const auto [r2, i2] = at[1];

  if (r1 == r2) {
    const auto& t = code.records[r1].tokens;
    recs[r1].tokens = concat({slice(t, 0, i1), {plain}, reversed(slice(t, i1 + 1, i2)), {barred},
                              slice(t, i2 + 1, t.size())});
    return step;
  }

  const CodeRecord& w = code.records[r1];
  const CodeRecord& u = code.records[r2];
  const auto alpha = slice(w.tokens, 0, i1), beta = slice(w.tokens, i1 + 1, w.tokens.size());
  const auto gamma = slice(u.tokens, 0, i2), delta = slice(u.tokens, i2 + 1, u.tokens.size());

  recs[r1] = {w.edge, w.tail, concat({alpha, {plain}, delta}), u.head};
  recs[r2] = {u.edge, u.tail, concat({gamma, {plain}, beta}), w.head};
  step.kind = SplitCase::CrossEdgeA;
  if (code_connected(step.snapshot)) return step;

  SplitStep alt = step;
  alt.kind = SplitCase::CrossEdgeB;
  alt.snapshot.records[r1] = {w.edge, w.tail, concat({alpha, {plain}, reversed(gamma)}), u.tail};
  alt.snapshot.records[r2] = {u.edge, u.head, concat({reversed(delta), {plain}, beta}), w.head};
  return code_connected(alt.snapshot) ? alt : step;
}

std::vector<std::string> split_order(const GraphGaussCode& code) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const auto& r : code.records)
    for (const Token& t : r.tokens)
      if (!t.split && seen.insert(t.symbol).second) order.push_back(t.symbol);
  return order;
}

SplitCode full_split(const GraphGaussCode& code) {
  SplitCode out{code, {code, {}}};
  for (const auto& symbol : split_order(code)) {
    SplitStep step = split_at(out.code, symbol);
    out.code = step.snapshot;
    out.trace.steps.push_back(std::move(step));
  }
  return out;
}

SplitGraph build_split_graph(const GraphGaussCode& split) {
  EmbeddedGraph eg = underlying_graph(split);
  SplitGraph out{std::move(eg.graph), std::move(eg.rotation), {}};
  if (!connected(out.graph)) throw std::logic_error("split graph is disconnected");
  for (EdgeId e = 0; e < static_cast<EdgeId>(split.records.size()); ++e) {
    const auto& tokens = split.records[e].tokens;
    for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
      const Token& t = tokens[i];
      if (!t.split) throw std::invalid_argument("symbol '" + t.symbol + "' is not split");
      const ChordEndpoint p{e, i, t.mark};
      if (auto k = out.chords.find(t.symbol)) {
        out.chords.chords[*k].b = p;
      } else {
        out.chords.chords.push_back({t.symbol, p, {-1, -1, Mark::Plain}});
      }
    }
  }
  out.chords.validate(out.graph);
  return out;
}

bool evenly_intersticed(const CrossingSequence& seq) {
  std::map<std::string, int> first;
  for (int i = 0; i < static_cast<int>(seq.tokens.size()); ++i) {
    auto [it, fresh] = first.emplace(seq.tokens[i].symbol, i);
    if (!fresh && (i - it->second - 1) % 2 != 0) return false;
  }
  return true;
}

namespace {

// Relabels symbols by first occurrence; (label, split, mark) triples.
std::vector<int> relabeled(const std::vector<Token>& tokens, std::size_t start) {
  std::map<std::string, int> label;
  std::vector<int> out;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const Token& t = tokens[(start + k) % tokens.size()];
    auto [it, fresh] = label.emplace(t.symbol, static_cast<int>(label.size()));
    out.push_back(3 * it->second + (t.split ? 1 + static_cast<int>(t.mark == Mark::Barred) : 0));
  }
  return out;
}

bool equivalent_curves(const CrossingSequence& a, const CrossingSequence& b) {
  if (a.tokens.size() != b.tokens.size()) return false;
  if (a.tokens.empty()) return true;
  const auto key = relabeled(a.tokens, 0);
  for (std::size_t r = 0; r < b.tokens.size(); ++r)
    if (relabeled(b.tokens, r) == key) return true;
  return false;
}

bool equivalent_graphs(const GraphGaussCode& a, const GraphGaussCode& b) {
  if (a.records.size() != b.records.size()) return false;
  if (std::set(a.vertices.begin(), a.vertices.end()) != std::set(b.vertices.begin(), b.vertices.end()))
    return false;
  std::map<std::string, int> degree;
  for (const auto& r : a.records) ++degree[r.tail.vertex], ++degree[r.head.vertex];
  std::map<std::string, const CodeRecord*> by_name;
  for (const auto& r : b.records) by_name[r.edge] = &r;

  std::map<std::string, int> offset;
  auto same_anchor = [&](const Anchor& x, const Anchor& y) {
    if (x.vertex != y.vertex) return false;
    const int d = degree[x.vertex];
    const int o = ((y.slot - x.slot) % d + d) % d;
    auto [it, fresh] = offset.emplace(x.vertex, o);
    return it->second == o;
  };
  std::map<std::string, std::string> fwd, bwd;
  for (const auto& ra : a.records) {
    auto it = by_name.find(ra.edge);
    if (it == by_name.end()) return false;
    const CodeRecord& rb = *it->second;
    if (!same_anchor(ra.tail, rb.tail) || !same_anchor(ra.head, rb.head)) return false;
    if (ra.tokens.size() != rb.tokens.size()) return false;
    for (std::size_t i = 0; i < ra.tokens.size(); ++i) {
      const Token& x = ra.tokens[i];
      const Token& y = rb.tokens[i];
      if (x.split != y.split || x.mark != y.mark) return false;
      if (fwd.emplace(x.symbol, y.symbol).first->second != y.symbol) return false;
      if (bwd.emplace(y.symbol, x.symbol).first->second != x.symbol) return false;
    }
  }
  return true;
}

std::string key_of(const std::vector<Token>& tokens) {
  std::string best;
  for (std::size_t r = 0; r < std::max<std::size_t>(tokens.size(), 1); ++r) {
    std::string k;
    for (int x : relabeled(tokens, r)) k += std::to_string(x) + ',';
    if (r == 0 || k < best) best = k;
  }
  return best;
}

bool unsplittable(const std::vector<Token>& tokens, std::set<std::string>& dead) {
  if (std::none_of(tokens.begin(), tokens.end(), [](const Token& t) { return t.split; })) return true;
  const std::string key = key_of(tokens);
  if (dead.count(key)) return false;
  const int n = static_cast<int>(tokens.size());
  std::map<std::string, std::vector<int>> at;
  for (int i = 0; i < n; ++i)
    if (tokens[i].split) at[tokens[i].symbol].push_back(i);
  for (const auto& [symbol, occ] : at) {
    if (tokens[occ[0]].mark == tokens[occ[1]].mark) continue;
    const int p = tokens[occ[0]].mark == Mark::Plain ? occ[0] : occ[1];
    const int q = p == occ[0] ? occ[1] : occ[0];
    std::vector<Token> middle, rest;
    for (int i = (p + 1) % n; i != q; i = (i + 1) % n) middle.push_back(tokens[i]);
    for (int i = (q + 1) % n; i != p; i = (i + 1) % n) rest.push_back(tokens[i]);
    const Token x{symbol, false, Mark::Plain};
    if (unsplittable(concat({{x}, reversed(middle), {x}, rest}), dead)) return true;
  }
  dead.insert(key);
  return false;
}

}  // namespace

bool equivalent_codes(const ParsedCode& a, const ParsedCode& b) {
  if (a.index() != b.index()) return false;
  if (const auto* s = std::get_if<CrossingSequence>(&a)) return equivalent_curves(*s, std::get<CrossingSequence>(b));
  return equivalent_graphs(std::get<GraphGaussCode>(a), std::get<GraphGaussCode>(b));
}

bool is_split_code(const CrossingSequence& split) {
  validate(split);
  std::set<std::string> dead;
  return unsplittable(split.tokens, dead);
}

}  // namespace gaussgraph
