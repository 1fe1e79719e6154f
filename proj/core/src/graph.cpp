#include "gaussgraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace gaussgraph {

const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

VertexId Multigraph::add_vertex(std::string name) {
  if (vertex_index_.count(name)) throw std::invalid_argument("duplicate vertex '" + name + "'");
  VertexId id = vertex_count();
  vertex_index_.emplace(name, id);
  vertex_names_.push_back(std::move(name));
  return id;
}

EdgeId Multigraph::add_edge(std::string name, VertexId tail, VertexId head) {
  if (tail < 0 || tail >= vertex_count() || head < 0 || head >= vertex_count())
    throw std::invalid_argument("edge '" + name + "' references a missing vertex");
  if (edge_index_.count(name)) throw std::invalid_argument("duplicate edge '" + name + "'");
  EdgeId id = edge_count();
  edge_index_.emplace(name, id);
  edges_.push_back({std::move(name), tail, head});
  return id;
}

std::optional<VertexId> Multigraph::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Multigraph::find_edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<Dart>> Multigraph::incidence() const {
  std::vector<std::vector<Dart>> out(vertex_count());
  for (int i = 0; i < dart_count(); ++i) {
    Dart d = Dart::from_index(i);
    out[vertex_of(d)].push_back(d);
  }
  return out;
}

int Multigraph::degree(VertexId v) const {
  int deg = 0;
  for (const Edge& e : edges_) deg += (e.tail == v) + (e.head == v);
  return deg;
}

RotationSystem::RotationSystem(const Multigraph& g, std::vector<std::vector<Dart>> order)
    : order_(std::move(order)) {
  if (static_cast<int>(order_.size()) != g.vertex_count())
    throw std::invalid_argument("rotation system has the wrong number of vertices");
  position_.assign(g.dart_count(), -1);
  owner_.assign(g.dart_count(), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (int i = 0; i < static_cast<int>(order_[v].size()); ++i) {
      Dart d = order_[v][i];
      if (d.edge < 0 || d.edge >= g.edge_count())
        throw std::invalid_argument("rotation references a missing edge");
      if (g.vertex_of(d) != v)
        throw std::invalid_argument("dart of edge '" + g.edge(d.edge).name +
                                    "' listed at the wrong vertex");
      if (position_[d.index()] != -1)
        throw std::invalid_argument("dart of edge '" + g.edge(d.edge).name + "' listed twice");
      position_[d.index()] = i;
      owner_[d.index()] = v;
    }
  }
  for (int i = 0; i < g.dart_count(); ++i)
    if (position_[i] == -1)
      throw std::invalid_argument("dart of edge '" + g.edge(i / 2).name + "' missing from rotation");
}

RotationSystem RotationSystem::canonical(const Multigraph& g) { return {g, g.incidence()}; }

Dart RotationSystem::next_ccw(Dart d) const {
  const auto& ring = order_[owner_.at(d.index())];
  return ring[(position_[d.index()] + 1) % ring.size()];
}

Dart RotationSystem::prev_ccw(Dart d) const {
  const auto& ring = order_[owner_.at(d.index())];
  return ring[(position_[d.index()] + ring.size() - 1) % ring.size()];
}

bool RotationSystem::equivalent(const RotationSystem& other) const {
  if (order_.size() != other.order_.size()) return false;
  for (std::size_t v = 0; v < order_.size(); ++v) {
    const auto& a = order_[v];
    const auto& b = other.order_[v];
    if (a.size() != b.size()) return false;
    if (a.empty()) continue;
    auto it = std::find(b.begin(), b.end(), a.front());
    if (it == b.end()) return false;
    std::size_t shift = it - b.begin();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[(i + shift) % b.size()]) return false;
  }
  return true;
}

FaceSet::FaceSet(std::vector<Face> faces, int dart_count)
    : faces_(std::move(faces)), face_of_(dart_count, -1) {
  for (int f = 0; f < size(); ++f)
    for (Dart d : faces_[f].walk) face_of_[d.index()] = f;
}

bool connected(const Multigraph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int components = g.vertex_count();
  for (const Edge& e : g.edges()) {
    int a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::set<EdgeId> cut_edges(const Multigraph& g) {
  if (!connected(g)) throw std::invalid_argument("cut_edges: graph is not connected");
  std::set<EdgeId> bridges;
  if (g.vertex_count() == 0) return bridges;

  const auto inc = g.incidence();
  std::vector<int> discovery(g.vertex_count(), -1), low(g.vertex_count(), 0);
  int clock = 0;

  // Iterative DFS; the parent edge is skipped by id so parallel edges count as cycles.
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, -1, 0}};
  discovery[0] = low[0] = clock++;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next < inc[top.v].size()) {
      Dart d = inc[top.v][top.next++];
      if (d.edge == top.via) continue;
      VertexId w = g.vertex_of(d.twin());
      if (discovery[w] == -1) {
        discovery[w] = low[w] = clock++;
        stack.push_back({w, d.edge, 0});
      } else {
        low[top.v] = std::min(low[top.v], discovery[w]);
      }
      continue;
    }
    Frame done = top;
    stack.pop_back();
    if (!stack.empty()) {
      VertexId parent = stack.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] > discovery[parent]) bridges.insert(done.via);
    }
  }
  return bridges;
}

FaceSet trace_faces(const Multigraph& g, const RotationSystem& rot) {
  std::vector<bool> seen(g.dart_count(), false);
  std::vector<Face> faces;
  for (int i = 0; i < g.dart_count(); ++i) {
    if (seen[i]) continue;
    Face face;
    Dart d = Dart::from_index(i);
    while (!seen[d.index()]) {
      seen[d.index()] = true;
      face.walk.push_back(d);
      d = face_successor(rot, d);
    }
    faces.push_back(std::move(face));
  }
  return {std::move(faces), g.dart_count()};
}

int genus(const Multigraph& g, const RotationSystem& rot) {
  if (g.vertex_count() == 0) return 0;
  const int chi = g.vertex_count() - g.edge_count() + trace_faces(g, rot).size();
  if (chi > 2 || (2 - chi) % 2 != 0) throw std::logic_error("genus: Euler characteristic is not even");
  return (2 - chi) / 2;
}

bool is_planar_rotation(const Multigraph& g, const RotationSystem& rot) { return genus(g, rot) == 0; }

BlowUp blow_up(const Multigraph& g, const RotationSystem& rot, const std::set<EdgeId>& edges) {
  BlowUp out{g, rot, {}};
  auto order = rot.orders();
  for (EdgeId e : edges) {
    const Edge& orig = g.edge(e);
    if (orig.is_loop()) throw std::invalid_argument("blow_up: edge '" + orig.name + "' is a loop");
    EdgeId twin = out.graph.add_edge(orig.name + "'", orig.tail, orig.head);
    out.sibling.emplace(e, twin);

    auto& at_tail = order[orig.tail];
    auto t = std::find(at_tail.begin(), at_tail.end(), Dart{e, End::Tail});
    at_tail.insert(t + 1, Dart{twin, End::Tail});

    auto& at_head = order[orig.head];
    auto h = std::find(at_head.begin(), at_head.end(), Dart{e, End::Head});
    at_head.insert(h, Dart{twin, End::Head});
  }
  out.rotation = RotationSystem(out.graph, std::move(order));
  return out;
}

}  // namespace gaussgraph
