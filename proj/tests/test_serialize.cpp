#include <gtest/gtest.h>

#include "gaussgraph/oracle.hpp"
#include "gaussgraph/serialize.hpp"
#include "support.hpp"

using namespace gaussgraph;
using namespace gaussgraph::testing;

TEST(Json, ImmersionRoundTrip) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto gen = generate_immersion(seed);
    const Json j = to_json(gen.immersion);
    const Immersion back = immersion_from_json(Json::parse(j.dump()));
    EXPECT_EQ(to_json(back), j);
    EXPECT_TRUE(immersion_problems(back).empty());
    EXPECT_TRUE(equivalent_codes(code_of(back), gen.code));
  }
}

TEST(Json, ImmersionSchema) {
  const Realization r = realize_curve(parse_curve_word("A A"));
  const Json j = to_json(*r.immersion);
  EXPECT_TRUE(j.at("curve").get<bool>());
  int crossings = 0;
  for (const auto& v : j.at("vertices")) crossings += v.at("kind") == "crossing";
  EXPECT_EQ(crossings, 1);
  EXPECT_EQ(j.at("crossings").size(), 1U);
  EXPECT_TRUE(j.at("crossings").contains("A"));
  EXPECT_EQ(j.at("rotation").size(), j.at("vertices").size());
  EXPECT_EQ(j.at("strands").size(), 1U);
}

TEST(Json, RejectsInconsistentImmersion) {
  const Realization r = realize_curve(parse_curve_word("A A"));
  Json j = to_json(*r.immersion);
  j["rotation"][0][0] = 999;
  EXPECT_THROW(immersion_from_json(j), std::invalid_argument);
  Json k = to_json(*r.immersion);
  k["vertices"][0]["kind"] = "endpoint";
  EXPECT_THROW(immersion_from_json(k), std::invalid_argument);
}

TEST(Json, RealizableVerdict) {
  const Realization r = realize_curve(parse_curve_word("A B C A B C"));
  const Json j = to_json(r);
  EXPECT_TRUE(j.at("realizable").get<bool>());
  EXPECT_EQ(j.at("split_code").at("curve"), Json::parse(R"(["A","C","B","~A","~B","~C"])"));
  EXPECT_EQ(j.at("split_code").at("split").size(), 3U);
  EXPECT_EQ(j.at("split_trace").size(), 3U);
  EXPECT_EQ(j.at("split_trace")[0].at("case"), "same-edge");
  EXPECT_EQ(j.at("certificate").at("euler"), 2);
  EXPECT_TRUE(j.contains("immersion"));
  EXPECT_FALSE(j.contains("witness"));
}

TEST(Json, RefusedVerdict) {
  const Json j = to_json(realize_curve(parse_curve_word("A B A B")));
  EXPECT_FALSE(j.at("realizable").get<bool>());
  EXPECT_EQ(j.at("witness").at("kind"), "respects");
  EXPECT_FALSE(j.contains("immersion"));
  EXPECT_FALSE(j.contains("certificate"));
}

TEST(Json, ExtensionWitnessKinds) {
  const auto loop = loop_graph();
  const Json odd = to_json(extend_circle(loop.graph, loop.rotation, circle_diagram({"A", "B", "C", "~A", "~B", "~C"})));
  EXPECT_EQ(odd.at("verdict"), "no");
  EXPECT_EQ(odd.at("witness").at("kind"), "odd_cycle");
  EXPECT_EQ(odd.at("witness").at("chords").size(), 3U);

  const auto torus = theta3(false);
  const Json genus = to_json(extend_general(torus.graph, torus.rotation, ChordDiagram{}));
  EXPECT_EQ(genus.at("witness").at("kind"), "genus");
  EXPECT_EQ(genus.at("witness").at("genus"), 1);

  const Json yes = to_json(extend_circle(loop.graph, loop.rotation, circle_diagram({"A", "B", "~A", "~B"})));
  EXPECT_EQ(yes.at("verdict"), "yes");
  EXPECT_EQ(yes.at("labeling").size(), 2U);
  EXPECT_EQ(yes.at("euler"), 2);
}

TEST(Json, GraphCode) {
  const ParsedCode code = parse_code("vertex v\nvertex w\nedge e1 v:0 w:0 : A\nedge e2 w:1 v:1 : A\n");
  const Json j = to_json(code);
  EXPECT_EQ(j.at("vertices"), Json::parse(R"(["v","w"])"));
  ASSERT_EQ(j.at("edges").size(), 2U);
  EXPECT_EQ(j.at("edges")[1].at("tail").at("vertex"), "w");
  EXPECT_EQ(j.at("edges")[1].at("tail").at("slot"), 1);
  EXPECT_EQ(j.at("edges")[1].at("tokens"), Json::parse(R"(["A"])"));
  EXPECT_FALSE(j.contains("split"));
}
