#include "gaussgraph/serialize.hpp"

#include <set>
#include <stdexcept>

namespace gaussgraph {

namespace {

Json tokens_json(const std::vector<Token>& tokens) {
  Json out = Json::array();
  for (const Token& t : tokens) out.push_back(format_token(t));
  return out;
}

void add_split(Json& j, const std::vector<const std::vector<Token>*>& lists) {
  std::set<std::string> split;
  for (const auto* list : lists)
    for (const Token& t : *list)
      if (t.split) split.insert(t.symbol);
  if (!split.empty()) j["split"] = split;
}

Json anchor_json(const Anchor& a) { return {{"vertex", a.vertex}, {"slot", a.slot}}; }

ParsedCode reported(const GraphGaussCode& code, bool curve) {
  if (curve) return CrossingSequence{code.records.at(0).tokens};
  return code;
}

struct WitnessJson {
  Json operator()(const RespectsWitness& w) const { return {{"kind", "respects"}, {"chord", w.chord}}; }
  Json operator()(const OddCycleWitness& w) const { return {{"kind", "odd_cycle"}, {"chords", w.chords}}; }
  Json operator()(const GenusWitness& w) const { return {{"kind", "genus"}, {"genus", w.genus}}; }
  Json operator()(const ImplicationWitness& w) const {
    Json cases = Json::array();
    for (const auto& c : w.cases) {
      Json chain = Json::array();
      for (const auto& s : c.chain) {
        Json step = {{"from_item", s.from_item}, {"from_region", s.from_region}, {"to_item", s.to_item},
                     {"to_region", s.to_region}, {"reason", to_string(s.reason)}};
        if (!s.other.empty()) step["other"] = s.other;
        chain.push_back(std::move(step));
      }
      cases.push_back({{"excluded", c.excluded}, {"chain", std::move(chain)}});
    }
    return {{"kind", "implication"}, {"cases", std::move(cases)}};
  }
};

}  // namespace

Json to_json(const RefusalWitness& w) { return std::visit(WitnessJson{}, w); }

Json to_json(const ExtensionResult& r) {
  Json j;
  j["verdict"] = r.yes() ? "yes" : "no";
  if (r.certificate) {
    Json labeling = Json::array();
    for (const auto& p : r.certificate->labeling)
      labeling.push_back({{"chord", p.chord},
                          {"region", p.region},
                          {"face", p.face},
                          {"side_a", to_string(p.side_a)},
                          {"side_b", to_string(p.side_b)},
                          {"pairing", p.pairing}});
    Json routing = Json::array();
    for (const auto& rr : r.certificate->routing) {
      Json arcs = Json::array();
      for (const auto& a : rr.arcs)
        arcs.push_back({{"chord", a.chord}, {"from", a.from}, {"to", a.to}, {"depth", a.depth}});
      routing.push_back({{"region", rr.region}, {"face", rr.face}, {"arcs", std::move(arcs)}});
    }
    j["labeling"] = std::move(labeling);
    j["routing"] = std::move(routing);
    j["euler"] = r.certificate->euler;
  }
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

Json to_json(const ParsedCode& code) {
  Json j;
  if (const auto* seq = std::get_if<CrossingSequence>(&code)) {
    j["curve"] = tokens_json(seq->tokens);
    add_split(j, {&seq->tokens});
    return j;
  }
  const auto& g = std::get<GraphGaussCode>(code);
  j["vertices"] = g.vertices;
  Json edges = Json::array();
  std::vector<const std::vector<Token>*> lists;
  for (const auto& r : g.records) {
    edges.push_back({{"name", r.edge},
                     {"tail", anchor_json(r.tail)},
                     {"head", anchor_json(r.head)},
                     {"tokens", tokens_json(r.tokens)}});
    lists.push_back(&r.tokens);
  }
  j["edges"] = std::move(edges);
  add_split(j, lists);
  return j;
}

Json to_json(const SplitTrace& trace) {
  const bool curve = trace.initial.vertices.size() == 1 && trace.initial.vertices[0] == kBasepoint &&
                     trace.initial.records.size() == 1;
  Json steps = Json::array();
  for (const auto& s : trace.steps)
    steps.push_back(
        {{"symbol", s.symbol}, {"case", to_string(s.kind)}, {"snapshot", to_json(reported(s.snapshot, curve))}});
  return steps;
}

Json to_json(const Immersion& imm) {
  const PlanarMap& map = imm.map;
  Json vertices = Json::array(), edges = Json::array(), rotation = Json::array();
  Json crossings = Json::object();
  for (VertexId v = 0; v < static_cast<VertexId>(map.nodes().size()); ++v) {
    const MapNode& n = map.node(v);
    if (!n.alive) throw std::invalid_argument("to_json: immersion map is not compacted");
    vertices.push_back({{"id", v}, {"name", n.name}, {"kind", to_string(n.kind)}});
    if (n.kind == NodeKind::Crossing) crossings[n.symbol] = v;
    Json ring = Json::array();
    for (Dart d : n.rotation) ring.push_back(d.index());
    rotation.push_back(std::move(ring));
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(map.edges().size()); ++e) {
    const MapEdge& me = map.edge(e);
    edges.push_back({{"id", e}, {"name", me.name}, {"tail", me.tail}, {"head", me.head}});
  }
  Json strands = Json::array();
  for (const auto& s : imm.edges)
    strands.push_back({{"name", s.name},
                       {"tail", s.tail},
                       {"tail_slot", s.tail_slot},
                       {"head", s.head},
                       {"head_slot", s.head_slot}});
  return {{"curve", imm.curve}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)},
          {"rotation", std::move(rotation)}, {"crossings", std::move(crossings)}, {"strands", std::move(strands)}};
}

Immersion immersion_from_json(const Json& j) {
  PlanarMap map;
  const auto& vertices = j.at("vertices");
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const auto& jv = vertices[v];
    if (jv.at("id").get<std::size_t>() != v) throw std::invalid_argument("immersion JSON: vertex ids out of order");
    MapNode n;
    n.name = jv.at("name").get<std::string>();
    const auto kind = jv.at("kind").get<std::string>();
    if (kind == "crossing") {
      n.kind = NodeKind::Crossing;
      n.symbol = n.name;
    } else if (kind != "original") {
      throw std::invalid_argument("immersion JSON: bad vertex kind '" + kind + "'");
    }
    for (int d : j.at("rotation").at(v)) n.rotation.push_back(Dart::from_index(d));
    map.add_node(std::move(n));
  }
  for (const auto& je : j.at("edges")) map.add_edge(je.at("name"), je.at("tail"), je.at("head"));
  for (const auto& [symbol, v] : j.at("crossings").items()) map.node(v.get<VertexId>()).symbol = symbol;
  for (VertexId v = 0; v < static_cast<VertexId>(map.nodes().size()); ++v)
    for (Dart d : map.node(v).rotation)
      if (d.edge >= static_cast<EdgeId>(map.edges().size()) || map.vertex_of(d) != v)
        throw std::invalid_argument("immersion JSON: rotation does not match the edges");

  Immersion imm{std::move(map), {}, j.at("curve").get<bool>()};
  for (const auto& s : j.at("strands"))
    imm.edges.push_back({s.at("name"), s.at("tail"), s.at("tail_slot"), s.at("head"), s.at("head_slot")});
  return imm;
}

Json to_json(const Realization& r) {
  Json j;
  j["realizable"] = r.realizable;
  j["split_code"] = to_json(reported(r.split.code, r.curve));
  j["split_trace"] = to_json(r.split.trace);
  if (r.certificate) j["certificate"] = to_json(ExtensionResult{r.certificate, std::nullopt});
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (r.immersion) {
    j["immersion"] = to_json(*r.immersion);
    j["code"] = to_json(code_of(*r.immersion));
  }
  return j;
}

}  // namespace gaussgraph
