#include "render.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace gaussgraph::cli {

namespace {

struct Point {
  double x = 0;
  double y = 0;
};

std::vector<Point> layout(const PlanarMap& map) {
  const auto dense = map.dense();
  const FaceSet faces = trace_faces(dense.graph, dense.rotation);
  const int n = dense.graph.vertex_count();
  std::vector<Point> pos(n);
  std::vector<bool> fixed(n, false);

  int outer = 0;
  for (int f = 1; f < faces.size(); ++f)
    if (faces.face(f).walk.size() > faces.face(outer).walk.size()) outer = f;
  std::vector<VertexId> ring;
  if (faces.size() > 0)
    for (Dart d : faces.face(outer).walk) {
      const VertexId v = dense.graph.vertex_of(d);
      if (!fixed[v]) fixed[v] = true, ring.push_back(v);
    }
  const double k = static_cast<double>(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    // clockwise on screen, since the y axis points down
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / k;
    pos[ring[i]] = {std::cos(a), -std::sin(a)};
  }

  std::vector<std::vector<VertexId>> adj(n);
  for (const Edge& e : dense.graph.edges())
    if (e.tail != e.head) adj[e.tail].push_back(e.head), adj[e.head].push_back(e.tail);
  for (int iter = 0; iter < 500; ++iter)
    for (VertexId v = 0; v < n; ++v) {
      if (fixed[v] || adj[v].empty()) continue;
      Point sum;
      for (VertexId w : adj[v]) sum.x += pos[w].x, sum.y += pos[w].y;
      pos[v] = {sum.x / static_cast<double>(adj[v].size()), sum.y / static_cast<double>(adj[v].size())};
    }

  std::vector<Point> out(map.nodes().size());
  for (VertexId v = 0; v < n; ++v) out[dense.node_of[v]] = pos[v];
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_svg(const Immersion& imm) {
  const PlanarMap& map = imm.map;
  const std::vector<Point> pos = layout(map);
  constexpr double kSize = 480, kMargin = 40;
  auto sx = [&](const Point& p) { return kMargin + (p.x + 1) / 2 * (kSize - 2 * kMargin); };
  auto sy = [&](const Point& p) { return kMargin + (p.y + 1) / 2 * (kSize - 2 * kMargin); };

  std::ostringstream out;
  out.precision(2);
  out << std::fixed;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  out << "<g fill=\"none\" stroke=\"#333\" stroke-width=\"1.5\">\n";

  // Parallel edges and loops are bent apart.
  std::map<std::pair<VertexId, VertexId>, int> seen;
  for (const MapEdge& e : map.edges()) {
    if (!e.alive) continue;
    const Point a = pos[e.tail], b = pos[e.head];
    const int k = seen[std::minmax(e.tail, e.head)]++;
    if (e.tail == e.head) {
      const double r = 0.08 * (k + 1);
      out << "<circle cx=\"" << sx({a.x, a.y - r}) << "\" cy=\"" << sy({a.x, a.y - r}) << "\" r=\""
          << r / 2 * (kSize - 2 * kMargin) << "\"/>\n";
      continue;
    }
    const double bend = (k % 2 == 0 ? 1 : -1) * 0.12 * ((k + 1) / 2);
    const Point mid{(a.x + b.x) / 2 - (b.y - a.y) * bend, (a.y + b.y) / 2 + (b.x - a.x) * bend};
    out << "<path d=\"M " << sx(a) << ' ' << sy(a) << " Q " << sx(mid) << ' ' << sy(mid) << ' ' << sx(b) << ' '
        << sy(b) << "\"/>\n";
  }
  out << "</g>\n";

  for (VertexId v = 0; v < static_cast<VertexId>(map.nodes().size()); ++v) {
    const MapNode& n = map.node(v);
    if (!n.alive) continue;
    const bool crossing = n.kind == NodeKind::Crossing;
    out << "<circle cx=\"" << sx(pos[v]) << "\" cy=\"" << sy(pos[v]) << "\" r=\"" << (crossing ? 3 : 6)
        << "\" fill=\"" << (crossing ? "#c33" : "#fff") << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << sx(pos[v]) + 8 << "\" y=\"" << sy(pos[v]) - 8 << "\" font-size=\"12\" fill=\""
        << (crossing ? "#c33" : "#000") << "\">" << escape(n.name) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_dot(const Immersion& imm) {
  const PlanarMap& map = imm.map;
  std::ostringstream out;
  out << "graph immersion {\n";
  for (VertexId v = 0; v < static_cast<VertexId>(map.nodes().size()); ++v) {
    const MapNode& n = map.node(v);
    if (!n.alive) continue;
    out << "  n" << v << " [label=\"" << n.name << "\""
        << (n.kind == NodeKind::Crossing ? ", shape=point, xlabel=\"" + n.name + "\"" : std::string()) << "];\n";
  }
  for (const MapEdge& e : map.edges())
    if (e.alive) out << "  n" << e.tail << " -- n" << e.head << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace gaussgraph::cli
