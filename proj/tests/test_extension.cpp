#include <gtest/gtest.h>

#include "gaussgraph/extension.hpp"
#include "gaussgraph/oracle.hpp"
#include "gaussgraph/planar_map.hpp"
#include "support.hpp"

using namespace gaussgraph;
using namespace gaussgraph::testing;

namespace {

const ChordPlacement& placement(const ExtensionResult& r, const std::string& chord) {
  for (const auto& p : r.certificate->labeling)
    if (p.chord == chord) return p;
  throw std::out_of_range(chord);
}

EmbeddedGraph dumbbell() {
  return parse_graph("vertex v\nvertex w\nedge a v:0 v:1\nedge b w:0 w:1\nedge c v:2 w:2\n");
}

ChordDiagram renamed(ChordDiagram c) {
  for (auto& ch : c.chords) ch.id = "z" + ch.id;
  std::reverse(c.chords.begin(), c.chords.end());
  return c;
}

RotationSystem rotated(Rng& rng, const Multigraph& g, const RotationSystem& rot) {
  auto order = rot.orders();
  for (auto& ring : order)
    if (!ring.empty()) std::rotate(ring.begin(), ring.begin() + uniform(rng, 0, ring.size() - 1), ring.end());
  return RotationSystem(g, std::move(order));
}

}  // namespace

TEST(ExtendCircle, AlternatingPairSplitsInsideAndOutside) {
  const auto loop = loop_graph();
  const ChordDiagram c = circle_diagram({"A", "B", "~A", "~B"});
  const auto r = extend_circle(loop.graph, loop.rotation, c);
  ASSERT_TRUE(r.yes());
  EXPECT_NE(placement(r, "A").face, placement(r, "B").face);
  EXPECT_TRUE(validate_result(r, loop.graph, loop.rotation, c));
}

TEST(ExtendCircle, SplitOfAbabIsRefused) {
  const auto loop = loop_graph();
  const ChordDiagram c = circle_diagram({"P", "Q", "P", "~Q"});
  const auto r = extend_circle(loop.graph, loop.rotation, c);
  ASSERT_FALSE(r.yes());
  ASSERT_TRUE(std::holds_alternative<RespectsWitness>(*r.witness));
  EXPECT_EQ(std::get<RespectsWitness>(*r.witness).chord, "P");
  EXPECT_TRUE(validate_result(r, loop.graph, loop.rotation, c));
}

TEST(ExtendCircle, SplitOfTrefoil) {
  const auto loop = loop_graph();
  const ChordDiagram c = circle_diagram({"P", "R", "Q", "~P", "~Q", "~R"});
  const auto r = extend_circle(loop.graph, loop.rotation, c);
  ASSERT_TRUE(r.yes());
  EXPECT_NE(placement(r, "P").face, placement(r, "Q").face);
  EXPECT_EQ(placement(r, "Q").face, placement(r, "R").face);
  // H_C: the loop plus three chords, six endpoint nodes
  const PlanarMap h = build_chord_map(loop.graph, loop.rotation, c, placement_sides(*r.certificate, c));
  const auto d = h.dense();
  EXPECT_EQ(d.graph.edge_count(), 1 + 6 + 3);
  EXPECT_EQ(r.certificate->euler, 2);
  EXPECT_EQ(h.genus(), 0);
}

TEST(ExtendCircle, OddCycleWitness) {
  const auto loop = loop_graph();
  const ChordDiagram c = circle_diagram({"A", "B", "C", "~A", "~B", "~C"});
  const auto r = extend_circle(loop.graph, loop.rotation, c);
  ASSERT_FALSE(r.yes());
  ASSERT_TRUE(std::holds_alternative<OddCycleWitness>(*r.witness));
  EXPECT_EQ(std::get<OddCycleWitness>(*r.witness).chords.size(), 3U);
  EXPECT_TRUE(validate_result(r, loop.graph, loop.rotation, c));
}

TEST(ExtendCircle, RejectsOtherShapes) {
  const auto k2 = k2_graph();
  EXPECT_THROW(extend_circle(k2.graph, k2.rotation, ChordDiagram{}), std::invalid_argument);
}

TEST(ExtendCircle, MatchesBruteForce) {
  Rng rng(101);
  const auto loop = loop_graph();
  for (int t = 0; t < 500; ++t) {
    const ChordDiagram c = random_diagram(rng, loop.graph, uniform(rng, 0, 10), uniform(rng, 0, 4) > 0);
    const auto r = extend_circle(loop.graph, loop.rotation, c);
    EXPECT_EQ(r.yes(), brute_extend_circle(loop.graph, c)) << write_chords(c, loop.graph);
    EXPECT_TRUE(validate_result(r, loop.graph, loop.rotation, c));
  }
}

TEST(ExtendCircle, LongerCycles) {
  Rng rng(103);
  const auto cycle = parse_graph("vertex a\nvertex b\nvertex c\nedge x a:0 b:1\nedge y b:0 c:1\nedge z c:0 a:1\n");
  for (int t = 0; t < 200; ++t) {
    const ChordDiagram c = random_diagram(rng, cycle.graph, uniform(rng, 0, 6));
    const auto r = extend_circle(cycle.graph, cycle.rotation, c);
    EXPECT_EQ(r.yes(), brute_extend_embedded(cycle.graph, cycle.rotation, c));
    EXPECT_TRUE(validate_result(r, cycle.graph, cycle.rotation, c));
  }
}

TEST(ExtendNocut, ThetaOneChordPerRegion) {
  const auto eg = theta3();
  const ChordDiagram c =
      parse_chords("chord X e1@0 e2@0\nchord Y e2@1 e3@0\nchord Z e3@1 e1@1\n", eg.graph);
  const auto r = extend_nocut(eg.graph, eg.rotation, c);
  ASSERT_TRUE(r.yes());
  std::set<int> faces;
  for (const auto& p : r.certificate->labeling) faces.insert(p.face);
  EXPECT_EQ(faces.size(), 3U);
  EXPECT_TRUE(validate_result(r, eg.graph, eg.rotation, c));
}

TEST(ExtendNocut, ThetaAlternatingPairInOneRegion) {
  const auto eg = theta3();
  const ChordDiagram c = parse_chords("chord A e1@0 e2@1\nchord B e1@1 e2@0\n", eg.graph);
  const auto r = extend_nocut(eg.graph, eg.rotation, c);
  ASSERT_FALSE(r.yes());
  EXPECT_TRUE(validate_result(r, eg.graph, eg.rotation, c));
  EXPECT_FALSE(brute_extend_embedded(eg.graph, eg.rotation, c));
}

TEST(ExtendNocut, RejectsCutEdges) {
  const auto k2 = k2_graph();
  EXPECT_THROW(extend_nocut(k2.graph, k2.rotation, ChordDiagram{}), std::invalid_argument);
}

TEST(ExtendNocut, LoopAgreesWithCircle) {
  Rng rng(107);
  const auto loop = loop_graph();
  for (int t = 0; t < 200; ++t) {
    const ChordDiagram c = random_diagram(rng, loop.graph, uniform(rng, 0, 8));
    EXPECT_EQ(extend_nocut(loop.graph, loop.rotation, c).yes(), extend_circle(loop.graph, loop.rotation, c).yes());
  }
}

TEST(Reduction, ChordAwayFromCutEdgesKeepsOnePairing) {
  const auto eg = dumbbell();
  const ChordDiagram c = parse_chords("chord A a@0 a@1~\n", eg.graph);
  const Reduction red = reduce_after_blowup(eg.graph, eg.rotation, c);
  ASSERT_EQ(red.siblings.at("A").size(), 1U);
  EXPECT_EQ(red.siblings.at("A")[0], "A");
  EXPECT_EQ(red.cut_endpoints[0], 0);
}

TEST(Reduction, K2ChordOnTheCutEdge) {
  const auto k2 = k2_graph();
  const ChordDiagram c = parse_chords("chord A e@0 e@1~\n", k2.graph);
  const Reduction red = reduce_after_blowup(k2.graph, k2.rotation, c);
  EXPECT_EQ(red.cut_endpoints[0], 2);
  EXPECT_EQ(red.siblings.at("A").size(), 2U);
  EXPECT_EQ(red.diagram.size(), 2);
}

TEST(Reduction, OneEndpointOnTheCutEdge) {
  const auto eg = dumbbell();
  for (const char* text : {"chord A a@0 c@0\n", "chord A a@0 c@0~\n"}) {
    const ChordDiagram c = parse_chords(text, eg.graph);
    const Reduction red = reduce_after_blowup(eg.graph, eg.rotation, c);
    EXPECT_EQ(red.cut_endpoints[0], 1);
    // two pairings; the one on the side the mark allows survives
    EXPECT_EQ(red.siblings.at("A").size(), 1U) << text;
  }
}

TEST(ExtendGeneral, K2WithAbcabc) {
  const auto k2 = k2_graph();
  const ChordDiagram c =
      parse_chords("unoriented\nchord A e@0 e@3\nchord B e@1 e@4\nchord C e@2 e@5\n", k2.graph);
  EXPECT_EQ(intersection_graph_embedded(c, k2.graph, k2.rotation).edges.size(), 3U);
  const auto r = extend_general(k2.graph, k2.rotation, c);
  ASSERT_TRUE(r.yes());
  EXPECT_TRUE(validate_result(r, k2.graph, k2.rotation, c));
}

TEST(ExtendGeneral, K2WithAbabMatchesBruteForce) {
  const auto k2 = k2_graph();
  for (const char* marks : {"", "~"})
    for (const char* second : {"", "~"}) {
      const std::string text = std::string("chord A e@0 e@2") + marks + "\nchord B e@1 e@3" + second + "\n";
      const ChordDiagram c = parse_chords(text, k2.graph);
      const auto r = extend_general(k2.graph, k2.rotation, c);
      EXPECT_EQ(r.yes(), brute_extend_embedded(k2.graph, k2.rotation, c)) << text;
      EXPECT_TRUE(validate_result(r, k2.graph, k2.rotation, c));
    }
}

TEST(ExtendGeneral, LoopAgreesWithCircle) {
  Rng rng(109);
  const auto loop = loop_graph();
  for (int t = 0; t < 200; ++t) {
    const ChordDiagram c = random_diagram(rng, loop.graph, uniform(rng, 0, 8));
    EXPECT_EQ(extend_general(loop.graph, loop.rotation, c).yes(), extend_circle(loop.graph, loop.rotation, c).yes());
  }
}

TEST(ExtendGeneral, AgreesWithNocutWithoutCutEdges) {
  Rng rng(113);
  int done = 0;
  while (done < 1000) {
    const auto eg = random_planar(rng, uniform(rng, 1, 7), false);
    if (!cut_edges(eg.graph).empty()) continue;
    const ChordDiagram c = random_diagram(rng, eg.graph, uniform(rng, 0, 6), uniform(rng, 0, 3) > 0);
    EXPECT_EQ(extend_general(eg.graph, eg.rotation, c).yes(), extend_nocut(eg.graph, eg.rotation, c).yes());
    ++done;
  }
}

TEST(ExtendGeneral, MatchesSideEnumeration) {
  Rng rng(127);
  for (int t = 0; t < 1500; ++t) {
    const auto eg = random_planar(rng, uniform(rng, 1, 6));
    const bool oriented = uniform(rng, 0, 3) > 0;
    const ChordDiagram c = random_diagram(rng, eg.graph, uniform(rng, 0, oriented ? 6 : 5), oriented);
    const auto r = extend_general(eg.graph, eg.rotation, c);
    EXPECT_EQ(r.yes(), brute_extend_embedded(eg.graph, eg.rotation, c))
        << write_graph(eg.graph, eg.rotation) << write_chords(c, eg.graph);
    EXPECT_TRUE(validate_result(r, eg.graph, eg.rotation, c));
  }
}

TEST(ExtendGeneral, InvariantUnderRenamingAndSlotRotation) {
  Rng rng(131);
  for (int t = 0; t < 300; ++t) {
    const auto eg = random_planar(rng, uniform(rng, 1, 6));
    const ChordDiagram c = random_diagram(rng, eg.graph, uniform(rng, 0, 5));
    const bool yes = extend_general(eg.graph, eg.rotation, c).yes();
    EXPECT_EQ(extend_general(eg.graph, eg.rotation, renamed(c)).yes(), yes);
    EXPECT_EQ(extend_general(eg.graph, rotated(rng, eg.graph, eg.rotation), c).yes(), yes);
  }
}

TEST(ExtendGeneral, NonPlanarRotationGivesGenusWitness) {
  const auto eg = theta3(false);
  const auto r = extend_general(eg.graph, eg.rotation, ChordDiagram{});
  ASSERT_FALSE(r.yes());
  ASSERT_TRUE(std::holds_alternative<GenusWitness>(*r.witness));
  EXPECT_EQ(std::get<GenusWitness>(*r.witness).genus, 1);
  EXPECT_TRUE(validate_result(r, eg.graph, eg.rotation, ChordDiagram{}));
}

TEST(ExtendGeneral, TamperedCertificateFailsValidation) {
  const auto loop = loop_graph();
  const ChordDiagram c = circle_diagram({"A", "B", "~A", "~B"});
  auto r = extend_general(loop.graph, loop.rotation, c);
  ASSERT_TRUE(r.yes());
  for (auto& p : r.certificate->labeling) p.face = 0, p.region = "R0";
  EXPECT_FALSE(validate_result(r, loop.graph, loop.rotation, c));
}

TEST(RouteArcs, EmptyAndSingle) {
  const auto loop = loop_graph();
  const auto empty = extend_general(loop.graph, loop.rotation, ChordDiagram{});
  ASSERT_TRUE(empty.yes());
  EXPECT_TRUE(empty.certificate->labeling.empty());
  for (const auto& rr : empty.certificate->routing) EXPECT_TRUE(rr.arcs.empty());

  const ChordDiagram one = circle_diagram({"A", "~A"});
  const auto r = extend_general(loop.graph, loop.rotation, one);
  ASSERT_TRUE(r.yes());
  int arcs = 0;
  for (const auto& rr : r.certificate->routing) arcs += static_cast<int>(rr.arcs.size());
  EXPECT_EQ(arcs, 1);
  EXPECT_EQ(r.certificate->euler, 2);
}

TEST(RouteArcs, RejectsAlternatingArcsInOneFace) {
  const auto loop = loop_graph();
  const ChordDiagram c = circle_diagram({"A", "B", "~A", "~B"});
  const auto r = extend_circle(loop.graph, loop.rotation, c);
  ASSERT_TRUE(r.yes());
  auto labeling = r.certificate->labeling;
  labeling[1].face = labeling[0].face;
  labeling[1].region = labeling[0].region;
  labeling[1].side_a = labeling[0].side_a;
  labeling[1].side_b = labeling[0].side_b;
  EXPECT_THROW(route_arcs(labeling, c, loop.graph, loop.rotation), std::logic_error);
}
