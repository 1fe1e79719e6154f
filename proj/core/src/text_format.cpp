#include "gaussgraph/text_format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace gaussgraph {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.words.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    if (!line.words.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

Anchor parse_anchor(const Word& word, int line) {
  auto colon = word.text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == word.text.size())
    throw ParseError(line, word.column, "expected <vertex>:<slot>, got '" + word.text + "'");
  Anchor a{word.text.substr(0, colon), 0};
  const char* first = word.text.data() + colon + 1;
  const char* last = word.text.data() + word.text.size();
  auto [ptr, ec] = std::from_chars(first, last, a.slot);
  if (ec != std::errc() || ptr != last || a.slot < 0)
    throw ParseError(line, word.column + static_cast<int>(colon) + 1,
                     "bad slot in '" + word.text + "'");
  return a;
}

RotationSystem rotation_from_slots(const Multigraph& g, const std::vector<int>& slots,
                                   const std::vector<int>& lines) {
  std::vector<std::vector<Dart>> order(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) order[v].assign(g.degree(v), Dart{-1, End::Tail});
  for (int i = 0; i < g.dart_count(); ++i) {
    Dart d = Dart::from_index(i);
    VertexId v = g.vertex_of(d);
    int slot = slots[i];
    int line = lines.empty() ? 0 : lines[d.edge];
    if (slot >= static_cast<int>(order[v].size()))
      throw ParseError(line, 1, "slot " + std::to_string(slot) + " at vertex '" + g.vertex_name(v) +
                                    "' exceeds degree " + std::to_string(order[v].size()));
    if (order[v][slot].edge != -1)
      throw ParseError(line, 1, "duplicate slot " + std::to_string(slot) + " at vertex '" +
                                    g.vertex_name(v) + "'");
    order[v][slot] = d;
  }
  return RotationSystem(g, std::move(order));
}

EmbeddedGraph parse_graph(std::string_view text) {
  Multigraph g;
  std::vector<int> slots, lines;
  for (const Line& line : split_lines(text)) {
    const auto& w = line.words;
    if (w[0].text == "vertex") {
      if (w.size() != 2) throw ParseError(line.number, w[0].column, "expected: vertex <name>");
      if (g.find_vertex(w[1].text)) throw ParseError(line.number, w[1].column, "duplicate vertex '" + w[1].text + "'");
      g.add_vertex(w[1].text);
    } else if (w[0].text == "edge") {
      if (w.size() != 4)
        throw ParseError(line.number, w[0].column, "expected: edge <name> <tail>:<slot> <head>:<slot>");
      if (g.find_edge(w[1].text)) throw ParseError(line.number, w[1].column, "duplicate edge '" + w[1].text + "'");
      Anchor tail = parse_anchor(w[2], line.number);
      Anchor head = parse_anchor(w[3], line.number);
      auto t = g.find_vertex(tail.vertex);
      auto h = g.find_vertex(head.vertex);
      if (!t) throw ParseError(line.number, w[2].column, "unknown vertex '" + tail.vertex + "'");
      if (!h) throw ParseError(line.number, w[3].column, "unknown vertex '" + head.vertex + "'");
      g.add_edge(w[1].text, *t, *h);
      slots.push_back(tail.slot);
      slots.push_back(head.slot);
      lines.push_back(line.number);
    } else {
      throw ParseError(line.number, w[0].column, "unknown directive '" + w[0].text + "'");
    }
  }
  RotationSystem rot = rotation_from_slots(g, slots, lines);
  return {std::move(g), std::move(rot)};
}

std::string write_graph(const Multigraph& g, const RotationSystem& rot) {
  std::ostringstream out;
  for (const auto& name : g.vertex_names()) out << "vertex " << name << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out << "edge " << edge.name << ' ' << g.vertex_name(edge.tail) << ':' << rot.slot_of({e, End::Tail}) << ' '
        << g.vertex_name(edge.head) << ':' << rot.slot_of({e, End::Head}) << '\n';
  }
  return out.str();
}

}  // namespace gaussgraph
