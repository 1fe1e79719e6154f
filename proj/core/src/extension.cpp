#include "gaussgraph/extension.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gaussgraph/planar_map.hpp"

namespace gaussgraph {

const char* witness_kind(const RefusalWitness& w) {
  switch (w.index()) {
    case 0:
      return "respects";
    case 1:
      return "odd_cycle";
    case 2:
      return "implication";
    default:
      return "genus";
  }
}

namespace {

std::vector<int> sorted_by_id(const ChordDiagram& c) {
  std::vector<int> order(c.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return c.chords[x].id < c.chords[y].id; });
  return order;
}

void require_connected(const Multigraph& g) {
  if (!connected(g)) throw std::invalid_argument("graph is not connected");
}

std::optional<ExtensionResult> check_genus(const Multigraph& g, const RotationSystem& rot) {
  const int gen = genus(g, rot);
  if (gen == 0) return std::nullopt;
  ExtensionResult r;
  r.witness = GenusWitness{gen};
  return r;
}

std::optional<ExtensionResult> check_respects(const Multigraph& g, const RegionSet& regions, const ChordDiagram& c,
                                              const std::set<EdgeId>& cuts) {
  for (int i : sorted_by_id(c)) {
    if (!attachments(c.chords[i], c.oriented, regions, cuts).empty()) continue;
    ExtensionResult r;
    r.witness = RespectsWitness{c.chords[i].id};
    return r;
  }
  (void)g;
  return std::nullopt;
}

ChordPlacement place(const Chord& ch, const Attachment& a, const RegionSet& regions) {
  return {ch.id, regions.regions.at(a.region).label, a.region, a.side_a, a.side_b, ch.id};
}

// Label of the "no candidate left" literal of a single-candidate item.
constexpr const char* kUnplaced = "unplaced";

// Labelling problem over named items with region labels; `none` regions are
// per-item placeholders for "left out".
struct NamedProblem {
  LabelProblem problem;
  std::vector<std::string> items;
  std::vector<std::string> labels;
};

ImplicationWitness::Case to_case(const NamedProblem& np, const std::vector<Implication>& chain,
                                 std::vector<std::string> excluded) {
  ImplicationWitness::Case out{std::move(excluded), {}};
  auto label = [&](int r) { return r < 0 ? std::string(kUnplaced) : np.labels.at(r); };
  for (const Implication& s : chain)
    out.chain.push_back({np.items.at(s.from.item), label(s.from.region), np.items.at(s.to.item), label(s.to.region),
                         s.reason, s.other >= 0 ? np.items.at(s.other) : ""});
  return out;
}

std::optional<std::vector<Implication>> from_case(const NamedProblem& np, const ImplicationWitness::Case& wc) {
  auto item = [&](const std::string& s) -> int {
    auto it = std::find(np.items.begin(), np.items.end(), s);
    return it == np.items.end() ? -1 : static_cast<int>(it - np.items.begin());
  };
  auto region = [&](const std::string& s) -> int {
    if (s == kUnplaced) return -1;
    auto it = std::find(np.labels.begin(), np.labels.end(), s);
    return it == np.labels.end() ? -1 : static_cast<int>(it - np.labels.begin());
  };
  std::vector<Implication> chain;
  for (const auto& s : wc.chain) {
    Implication imp{{item(s.from_item), region(s.from_region)}, {item(s.to_item), region(s.to_region)}, s.reason,
                    s.other.empty() ? -1 : item(s.other)};
    if (imp.from.item < 0 || imp.to.item < 0) return std::nullopt;
    if ((imp.from.region < 0 && s.from_region != kUnplaced) || (imp.to.region < 0 && s.to_region != kUnplaced))
      return std::nullopt;
    chain.push_back(imp);
  }
  return chain;
}

NamedProblem nocut_problem(const ChordDiagram& c, const Multigraph& g, const RegionSet& regions,
                           std::vector<std::vector<Attachment>>& att) {
  NamedProblem np;
  for (const Region& r : regions.regions) np.labels.push_back(r.label);
  np.problem.primary.assign(regions.regions.size(), true);
  const auto order = sorted_by_id(c);
  std::vector<int> item_of(c.size());
  att.clear();
  for (int k = 0; k < static_cast<int>(order.size()); ++k) {
    const Chord& ch = c.chords[order[k]];
    item_of[order[k]] = k;
    np.items.push_back(ch.id);
    att.push_back(attachments(ch, c.oriented, regions, {}));
    auto& cand = np.problem.candidates.emplace_back();
    for (const Attachment& a : att.back()) cand.push_back(a.region);
    np.problem.order.push_back(k);
  }
  const IntersectionGraph ig = intersection_graph(c, g, regions, VertexAtoms::PerCorner);
  for (auto [i, j] : ig.edges) np.problem.conflicts.push_back({item_of[i], item_of[j]});
  return np;
}

// Items of the general case: surviving pairings ordered by chord id, then
// pairing index.
struct GeneralSetup {
  Reduction red;
  IntersectionGraph gamma;
  std::vector<int> item_order;                  // item -> pairing
  std::vector<std::vector<int>> groups;         // per original chord (sorted by id): items
  std::vector<int> group_chord;                 // group -> original chord index
  std::vector<int> four_groups;                 // groups with four pairings
};

GeneralSetup general_setup(const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c) {
  GeneralSetup s{reduce_after_blowup(g, rot, c), {}, {}, {}, {}, {}};
  s.gamma = intersection_graph(s.red.diagram, s.red.blowup.graph, s.red.regions, VertexAtoms::PerCorner);
  for (const auto& [chord, pairings] : s.red.siblings) {
    std::vector<int> idx;
    for (const auto& p : pairings) idx.push_back(*s.red.diagram.find(p));
    for (std::size_t x = 0; x < idx.size(); ++x)
      for (std::size_t y = x + 1; y < idx.size(); ++y) {
        auto e = std::minmax(idx[x], idx[y]);
        s.gamma.edges.insert(e);
        s.gamma.sibling_edges.insert(e);
      }
  }
  for (int ci : sorted_by_id(c)) {
    auto& grp = s.groups.emplace_back();
    s.group_chord.push_back(ci);
    for (const auto& p : s.red.siblings.at(c.chords[ci].id)) {
      grp.push_back(static_cast<int>(s.item_order.size()));
      s.item_order.push_back(*s.red.diagram.find(p));
    }
    if (grp.size() == 4) s.four_groups.push_back(static_cast<int>(s.groups.size()) - 1);
  }
  return s;
}

// Problem for one choice of pairing family in every four-pairing group: bit
// set keeps pairings 1 and 2, clear keeps 0 and 3.
NamedProblem general_problem(const GeneralSetup& s, unsigned mask, std::vector<std::string>* excluded) {
  NamedProblem np;
  const Reduction& red = s.red;
  for (const Region& r : red.regions.regions) np.labels.push_back(r.label);
  np.problem.primary.assign(red.regions.regions.size(), false);
  for (int r = 0; r < red.r_count; ++r) np.problem.primary[r] = true;

  std::vector<bool> dropped(s.item_order.size(), false);
  for (std::size_t b = 0; b < s.four_groups.size(); ++b) {
    const auto& grp = s.groups[s.four_groups[b]];
    const bool middle = (mask >> b) & 1U;
    for (int k = 0; k < 4; ++k)
      if ((k == 1 || k == 2) != middle) dropped[grp[k]] = true;
  }
  std::vector<int> item_of(s.item_order.size(), -1);  // setup item -> problem item
  for (std::size_t it = 0; it < s.item_order.size(); ++it) {
    const int pairing = s.item_order[it];
    if (dropped[it]) {
      if (excluded) excluded->push_back(red.diagram.chords[pairing].id);
      continue;
    }
    item_of[it] = static_cast<int>(np.items.size());
    np.items.push_back(red.diagram.chords[pairing].id);
    auto& cand = np.problem.candidates.emplace_back();
    for (const Attachment& a : red.attachments[pairing]) cand.push_back(a.region);
    np.problem.order.push_back(item_of[it]);
  }

  for (std::size_t gi = 0; gi < s.groups.size(); ++gi) {
    std::vector<int> live;
    for (int it : s.groups[gi])
      if (item_of[it] >= 0) live.push_back(item_of[it]);
    // Only the R copy of a pairing is placed; see the decisions notes.
    for (int item : live) {
      auto& cand = np.problem.candidates[item];
      cand.erase(std::remove_if(cand.begin(), cand.end(), [&](int r) { return r >= red.r_count; }), cand.end());
      if (cand.empty()) throw std::logic_error("pairing without an R region");
    }
    if (live.size() == 2) {
      for (int item : live) {
        np.problem.primary.push_back(false);
        np.labels.push_back("none:" + np.items[item]);
        np.problem.candidates[item].push_back(static_cast<int>(np.labels.size()) - 1);
      }
      np.problem.exclusive.push_back({live[0], live[1]});
    } else if (live.size() > 2) {
      throw std::logic_error("unexpected pairing group size");
    }
  }
  std::vector<int> problem_of_pairing(red.diagram.size(), -1);
  for (std::size_t it = 0; it < s.item_order.size(); ++it) problem_of_pairing[s.item_order[it]] = item_of[it];
  for (auto [i, j] : s.gamma.edges) {
    const int a = problem_of_pairing[i], b = problem_of_pairing[j];
    if (a >= 0 && b >= 0) np.problem.conflicts.push_back({a, b});
  }
  return np;
}

constexpr std::size_t kMaxFourGroups = 10;

}  // namespace

ExtensionResult extend_circle(const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c) {
  require_connected(g);
  if (g.vertex_count() == 0 || g.edge_count() != g.vertex_count())
    throw std::invalid_argument("extend_circle: graph is not a single cycle");
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) throw std::invalid_argument("extend_circle: graph is not a single cycle");
  c.validate(g, false);

  const RegionSet regions = face_regions(g, trace_faces(g, rot));
  if (auto r = check_respects(g, regions, c, {})) return *r;

  const auto order = sorted_by_id(c);
  std::vector<int> rank(c.size());
  for (int k = 0; k < c.size(); ++k) rank[order[k]] = k;
  const IntersectionGraph ig = intersection_graph(c, g, regions);
  std::vector<std::vector<int>> adj(c.size());
  for (auto [i, j] : ig.edges) {
    adj[rank[i]].push_back(rank[j]);
    adj[rank[j]].push_back(rank[i]);
  }
  std::vector<int> color;
  if (auto cycle = find_odd_cycle(adj, &color)) {
    OddCycleWitness w;
    for (int k : *cycle) w.chords.push_back(c.chords[order[k]].id);
    ExtensionResult r;
    r.witness = std::move(w);
    return r;
  }
  std::vector<ChordPlacement> labeling;
  for (int k = 0; k < c.size(); ++k) {
    const Chord& ch = c.chords[order[k]];
    for (const Attachment& a : attachments(ch, c.oriented, regions, {}))
      if (a.region == color[k]) labeling.push_back(place(ch, a, regions));
  }
  if (static_cast<int>(labeling.size()) != c.size()) throw std::logic_error("extend_circle: chord missing a side");
  ExtensionResult r;
  r.certificate = route_arcs(std::move(labeling), c, g, rot);
  return r;
}

ExtensionResult extend_nocut(const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c) {
  require_connected(g);
  if (!cut_edges(g).empty()) throw std::invalid_argument("extend_nocut: graph has cut edges");
  c.validate(g, false);
  if (auto r = check_genus(g, rot)) return *r;
  const RegionSet regions = face_regions(g, trace_faces(g, rot));
  if (auto r = check_respects(g, regions, c, {})) return *r;

  std::vector<std::vector<Attachment>> att;
  const NamedProblem np = nocut_problem(c, g, regions, att);
  const LabelOutcome out = solve_labeling(np.problem);
  ExtensionResult r;
  if (!out.satisfiable) {
    r.witness = ImplicationWitness{{to_case(np, out.contradiction, {})}};
    return r;
  }
  std::vector<ChordPlacement> labeling;
  for (std::size_t k = 0; k < np.items.size(); ++k) {
    const Chord& ch = c.chords[*c.find(np.items[k])];
    for (const Attachment& a : att[k])
      if (a.region == out.region[k]) labeling.push_back(place(ch, a, regions));
  }
  r.certificate = route_arcs(std::move(labeling), c, g, rot);
  return r;
}

Reduction reduce_after_blowup(const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c) {
  require_connected(g);
  const std::set<EdgeId> cuts = cut_edges(g);
  Reduction red;
  red.blowup = blow_up(g, rot, cuts);
  const Multigraph& ge = red.blowup.graph;
  const FaceSet faces = trace_faces(g, rot);
  const FaceSet faces_e = trace_faces(ge, red.blowup.rotation);

  // Faces of the blown-up graph: one per original face, plus one digon per cut edge.
  auto lift = [&](Dart d) {
    if (cuts.count(d.edge) && d.end == End::Head) return Dart{red.blowup.sibling.at(d.edge), End::Head};
    return d;
  };
  const int nf = faces.size();
  red.r_count = nf;
  std::vector<int> region_of_face_e(faces_e.size(), -1);
  for (int f = 0; f < nf; ++f) {
    const int fe = faces_e.face_of(lift(faces.face(f).walk.front()));
    region_of_face_e[fe] = f;
    red.regions.regions.push_back({"R" + std::to_string(f), faces_e.face(fe).walk});
  }
  std::map<int, int> s_region;  // original face -> S region
  for (EdgeId e : cuts) {
    const int f = faces.face_on(e, Side::Right);
    if (!s_region.count(f)) {
      s_region[f] = static_cast<int>(red.regions.regions.size());
      Region s{"S" + std::to_string(f), {}};
      for (Dart d : red.regions.regions[f].walk)
        if (cuts.count(d.edge) || (d.edge >= g.edge_count())) s.walk.push_back(d.twin());
      std::reverse(s.walk.begin(), s.walk.end());
      red.regions.regions.push_back(std::move(s));
    }
    const int digon = faces_e.face_of({red.blowup.sibling.at(e), End::Tail});
    if (region_of_face_e[digon] != -1) throw std::logic_error("digon face shared with an original face");
    region_of_face_e[digon] = s_region[f];
  }
  red.regions.region_of_side.assign(2 * ge.edge_count(), -1);
  for (EdgeId e = 0; e < ge.edge_count(); ++e)
    for (Side side : {Side::Left, Side::Right}) {
      const int r = region_of_face_e.at(faces_e.face_on(e, side));
      if (r < 0) throw std::logic_error("blown-up face without a region");
      red.regions.region_of_side[2 * e + static_cast<int>(side)] = r;
    }

  // Every endpoint on a cut edge may sit on either copy.
  ChordDiagram all;
  all.oriented = c.oriented;
  std::vector<int> all_origin;
  for (int i = 0; i < c.size(); ++i) {
    const Chord& ch = c.chords[i];
    auto copies = [&](const ChordEndpoint& p) {
      std::vector<ChordEndpoint> out{p};
      if (cuts.count(p.edge)) out.push_back({red.blowup.sibling.at(p.edge), p.index, p.mark});
      return out;
    };
    const auto ca = copies(ch.a), cb = copies(ch.b);
    red.cut_endpoints.push_back(static_cast<int>(ca.size() + cb.size()) - 2);
    int k = 0;
    for (const auto& pa : ca)
      for (const auto& pb : cb) {
        all.chords.push_back({ch.id + std::string(k++, '\''), pa, pb});
        all_origin.push_back(i);
      }
  }

  for (int p = 0; p < all.size(); ++p) {
    auto att = attachments(all.chords[p], c.oriented, red.regions, {});
    red.siblings[c.chords[all_origin[p]].id];
    if (att.empty()) continue;
    red.siblings[c.chords[all_origin[p]].id].push_back(all.chords[p].id);
    red.diagram.chords.push_back(all.chords[p]);
    red.origin.push_back(all_origin[p]);
    red.attachments.push_back(std::move(att));
  }
  red.diagram.oriented = c.oriented;

  // Endpoints meet S in the reverse of their order around R.
  const Subdivision sub(ge, all);
  auto base = [&](const BoundaryPoint& p) {
    return std::pair{p.edge >= g.edge_count() ? std::find_if(red.blowup.sibling.begin(), red.blowup.sibling.end(),
                                                             [&](auto& kv) { return kv.second == p.edge; })
                                                    ->first
                                              : p.edge,
                     p.index};
  };
  for (auto [f, s] : s_region) {
    std::vector<std::pair<EdgeId, int>> around_r, around_s;
    for (const BoundaryPoint& p : boundary_points(red.regions.regions[f], sub))
      if (cuts.count(p.edge) || p.edge >= g.edge_count()) around_r.push_back(base(p));
    for (const BoundaryPoint& p : boundary_points(red.regions.regions[s], sub)) around_s.push_back(base(p));
    std::reverse(around_s.begin(), around_s.end());
    if (around_r.empty()) continue;
    auto it = std::find(around_s.begin(), around_s.end(), around_r.front());
    if (it == around_s.end()) throw std::logic_error("S region misses endpoints of R");
    std::rotate(around_s.begin(), it, around_s.end());
    if (around_r != around_s) throw std::logic_error("S region order is not the reverse of R");
  }
  return red;
}

ExtensionResult extend_general(const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c) {
  require_connected(g);
  c.validate(g, false);
  if (auto r = check_genus(g, rot)) return *r;
  const std::set<EdgeId> cuts = cut_edges(g);
  if (cuts.empty()) return extend_nocut(g, rot, c);
  const RegionSet regions = face_regions(g, trace_faces(g, rot));
  if (auto r = check_respects(g, regions, c, cuts)) return *r;

  const GeneralSetup s = general_setup(g, rot, c);
  if (s.four_groups.size() > kMaxFourGroups)
    throw std::length_error("too many unoriented chords between cut edges");

  ImplicationWitness refusal;
  for (unsigned mask = 0; mask < (1U << s.four_groups.size()); ++mask) {
    std::vector<std::string> excluded;
    const NamedProblem np = general_problem(s, mask, &excluded);
    const LabelOutcome out = solve_labeling(np.problem);
    if (!out.satisfiable) {
      refusal.cases.push_back(to_case(np, out.contradiction, std::move(excluded)));
      continue;
    }
    std::vector<ChordPlacement> labeling;
    for (std::size_t k = 0; k < np.items.size(); ++k) {
      const int region = out.region[k];
      if (region >= s.red.r_count) continue;
      const int pairing = *s.red.diagram.find(np.items[k]);
      const Chord& orig = c.chords[s.red.origin[pairing]];
      for (const Attachment& a : s.red.attachments[pairing])
        if (a.region == region)
          labeling.push_back({orig.id, s.red.regions.regions[region].label, region, a.side_a, a.side_b, np.items[k]});
    }
    ExtensionResult r;
    r.certificate = route_arcs(std::move(labeling), c, g, rot);
    return r;
  }
  ExtensionResult r;
  r.witness = std::move(refusal);
  return r;
}

ExtensionCertificate route_arcs(std::vector<ChordPlacement> labeling, const ChordDiagram& c, const Multigraph& g,
                                const RotationSystem& rot) {
  const FaceSet faces = trace_faces(g, rot);
  const RegionSet regions = face_regions(g, faces);
  const Subdivision sub(g, c);
  std::sort(labeling.begin(), labeling.end(), [](auto& x, auto& y) { return x.chord < y.chord; });

  std::vector<std::pair<Side, Side>> sides(c.size());
  std::vector<bool> placed(c.size(), false);
  std::map<int, std::vector<RoutedArc>> per_face;
  std::map<int, std::vector<BoundaryPoint>> walk_points;
  for (const ChordPlacement& p : labeling) {
    auto idx = c.find(p.chord);
    if (!idx) throw std::logic_error("route_arcs: unknown chord '" + p.chord + "'");
    if (placed[*idx]) throw std::logic_error("route_arcs: chord '" + p.chord + "' placed twice");
    placed[*idx] = true;
    sides[*idx] = {p.side_a, p.side_b};
    const Chord& ch = c.chords[*idx];
    if (p.face < 0 || p.face >= faces.size()) throw std::logic_error("route_arcs: bad face");
    auto& pts = walk_points[p.face];
    if (pts.empty()) pts = boundary_points(regions.regions[p.face], sub);
    auto pos = [&](const ChordEndpoint& e, Side side) {
      for (std::size_t k = 0; k < pts.size(); ++k)
        if (pts[k].edge == e.edge && pts[k].index == e.index && pts[k].side == side) return static_cast<int>(k);
      throw std::logic_error("route_arcs: chord '" + ch.id + "' does not touch face " + p.region);
    };
    int a = pos(ch.a, p.side_a), b = pos(ch.b, p.side_b);
    per_face[p.face].push_back({ch.id, std::min(a, b), std::max(a, b), 0});
  }
  if (std::find(placed.begin(), placed.end(), false) != placed.end())
    throw std::logic_error("route_arcs: unplaced chord");

  ExtensionCertificate cert;
  cert.labeling = std::move(labeling);
  for (auto& [f, arcs] : per_face) {
    std::sort(arcs.begin(), arcs.end(), [](auto& x, auto& y) { return x.from < y.from; });
    std::vector<int> open;  // `to` of enclosing arcs
    for (RoutedArc& arc : arcs) {
      while (!open.empty() && open.back() < arc.from) open.pop_back();
      if (!open.empty() && open.back() < arc.to)
        throw std::logic_error("route_arcs: arcs alternate in face R" + std::to_string(f));
      arc.depth = static_cast<int>(open.size());
      open.push_back(arc.to);
    }
    cert.routing.push_back({"R" + std::to_string(f), f, std::move(arcs)});
  }

  const PlanarMap hc = build_chord_map(g, rot, c, sides);
  const auto d = hc.dense();
  cert.euler = d.graph.vertex_count() - d.graph.edge_count() + trace_faces(d.graph, d.rotation).size();
  if (cert.euler != 2) throw std::logic_error("route_arcs: H_C is not planar");
  return cert;
}

std::vector<std::pair<Side, Side>> placement_sides(const ExtensionCertificate& cert, const ChordDiagram& c) {
  std::vector<std::pair<Side, Side>> sides(c.size());
  for (const ChordPlacement& p : cert.labeling) sides.at(*c.find(p.chord)) = {p.side_a, p.side_b};
  return sides;
}

bool validate_result(const ExtensionResult& r, const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c) {
  if (r.certificate.has_value() == r.witness.has_value()) return false;
  const std::set<EdgeId> cuts = connected(g) ? cut_edges(g) : std::set<EdgeId>{};
  if (r.certificate) {
    if (genus(g, rot) != 0) return false;
    const RegionSet regions = face_regions(g, trace_faces(g, rot));
    if (static_cast<int>(r.certificate->labeling.size()) != c.size()) return false;
    for (const ChordPlacement& p : r.certificate->labeling) {
      auto idx = c.find(p.chord);
      if (!idx) return false;
      const auto att = attachments(c.chords[*idx], c.oriented, regions, cuts);
      if (std::find(att.begin(), att.end(), Attachment{p.face, p.side_a, p.side_b}) == att.end()) return false;
    }
    try {
      const ExtensionCertificate again = route_arcs(r.certificate->labeling, c, g, rot);
      const PlanarMap hc = build_chord_map(g, rot, c, placement_sides(*r.certificate, c));
      return again.euler == 2 && hc.genus() == 0;
    } catch (const std::logic_error&) {
      return false;
    }
  }

  const RefusalWitness& w = *r.witness;
  if (auto* gw = std::get_if<GenusWitness>(&w)) return gw->genus != 0 && genus(g, rot) == gw->genus;
  if (auto* rw = std::get_if<RespectsWitness>(&w)) {
    auto idx = c.find(rw->chord);
    return idx && attachments(c.chords[*idx], c.oriented, face_regions(g, trace_faces(g, rot)), cuts).empty();
  }
  if (auto* ow = std::get_if<OddCycleWitness>(&w)) {
    const int n = static_cast<int>(ow->chords.size());
    if (n < 3 || n % 2 == 0) return false;
    std::set<std::string> distinct(ow->chords.begin(), ow->chords.end());
    if (static_cast<int>(distinct.size()) != n) return false;
    const IntersectionGraph ig = intersection_graph_embedded(c, g, rot);
    for (int k = 0; k < n; ++k) {
      auto x = c.find(ow->chords[k]), y = c.find(ow->chords[(k + 1) % n]);
      if (!x || !y || !ig.adjacent(*x, *y)) return false;
    }
    // Every chord of a cycle has exactly two regions to choose from.
    return g.edge_count() == g.vertex_count();
  }
  const auto& iw = std::get<ImplicationWitness>(w);
  if (iw.cases.empty()) return false;
  try {
    if (cuts.empty()) {
      if (iw.cases.size() != 1 || !iw.cases[0].excluded.empty()) return false;
      const RegionSet regions = face_regions(g, trace_faces(g, rot));
      std::vector<std::vector<Attachment>> att;
      const NamedProblem np = nocut_problem(c, g, regions, att);
      auto chain = from_case(np, iw.cases[0]);
      return chain && implication_chain_valid(np.problem, *chain);
    }
    const GeneralSetup s = general_setup(g, rot, c);
    if (iw.cases.size() != (1U << s.four_groups.size())) return false;
    for (unsigned mask = 0; mask < iw.cases.size(); ++mask) {
      std::vector<std::string> excluded;
      const NamedProblem np = general_problem(s, mask, &excluded);
      if (excluded != iw.cases[mask].excluded) return false;
      auto chain = from_case(np, iw.cases[mask]);
      if (!chain || !implication_chain_valid(np.problem, *chain)) return false;
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace gaussgraph
