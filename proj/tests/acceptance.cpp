// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gaussgraph/extension.hpp"
#include "gaussgraph/gausscode.hpp"
#include "gaussgraph/immersion.hpp"
#include "gaussgraph/oracle.hpp"
#include "gaussgraph/realize.hpp"
#include "support.hpp"

using namespace gaussgraph;
using namespace gaussgraph::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first = what;
  }
};

// Replay of every verdict produced by the other criteria.
Tally soundness;
// Comparison counts of every intersection graph built along the way.
Tally comparisons;

int euler(const Multigraph& g, const RotationSystem& rot) {
  return g.vertex_count() - g.edge_count() + trace_faces(g, rot).size();
}

int euler(const PlanarMap& map) {
  const auto d = map.dense();
  return euler(d.graph, d.rotation);
}

std::size_t pairs16(std::size_t n) { return 16 * (n * (n < 1 ? 0 : n - 1) / 2); }

void count_comparisons(const ChordDiagram& c, const Multigraph& g, const RotationSystem& rot) {
  try {
    const IntersectionGraph ig = intersection_graph_embedded(c, g, rot);
    comparisons.expect(ig.comparisons <= pairs16(c.size()), write_chords(c, g));
  } catch (const std::logic_error& e) {
    comparisons.expect(false, e.what());
  }
}

void replay(const ExtensionResult& r, const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c,
            const std::string& what) {
  bool ok = validate_result(r, g, rot, c);
  if (r.yes()) {
    const PlanarMap h = build_chord_map(g, rot, c, placement_sides(*r.certificate, c));
    ok = ok && r.certificate->euler == 2 && euler(h) == 2;
  }
  soundness.expect(ok, what);
}

void replay(const Realization& r, const std::string& what) {
  bool ok = validate_realization(r);
  if (r.realizable) ok = ok && r.immersion && euler(r.immersion->map) == 2 && r.certificate->euler == 2;
  else ok = ok && r.witness.has_value();
  soundness.expect(ok, what);
}

CrossingSequence word(const std::vector<std::string>& w) {
  CrossingSequence seq;
  for (const auto& s : w) seq.tokens.push_back({s});
  return seq;
}

std::string text(const std::vector<std::string>& w) {
  std::string out;
  for (const auto& s : w) out += (out.empty() ? "" : " ") + s;
  return out;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body, double limit_s = 0) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(),
              secs);
  std::fflush(stdout);
}

Outcome from(const Tally& t, const std::string& unit) {
  if (t.failures == 0) return {true, std::to_string(t.checks) + " " + unit};
  return {false, std::to_string(t.failures) + "/" + std::to_string(t.checks) + " failed, first: " + t.first};
}

}  // namespace

int main() {
  report(
      1, "classical curve fixtures",
      [] {
        Tally t;
        const Realization abab = realize_curve(word({"A", "B", "A", "B"}));
        t.expect(!abab.realizable, "A B A B accepted");
        replay(abab, "A B A B");
        for (const auto& w : std::vector<std::vector<std::string>>{{"A", "A"}, {"A", "A", "B", "B"},
                                                                   {"A", "B", "C", "A", "B", "C"}}) {
          const Realization r = realize_curve(word(w));
          t.expect(r.realizable && r.immersion && equivalent_codes(code_of(*r.immersion), word(w)), text(w));
          replay(r, text(w));
        }
        return from(t, "fixtures");
      },
      1.0);

  report(
      2, "curve decision matches rotation enumeration",
      [] {
        Tally t;
        auto check = [&](const std::vector<std::string>& w) {
          const Realization r = realize_curve(word(w));
          t.expect(r.realizable == brute_realize_curve(w), text(w));
          replay(r, text(w));
        };
        for (int n = 0; n <= 4; ++n)
          for (const auto& w : all_curve_words(n)) check(w);
        Rng rng(2002);
        for (int i = 0; i < 500; ++i) check(random_curve_word(rng, uniform(rng, 1, 8)));
        return from(t, "sequences");
      },
      60.0);

  report(3, "evenly intersticed and bipartite characterization", [] {
    Tally t;
    const auto loop = loop_graph();
    for (int n = 0; n <= 4; ++n)
      for (const auto& w : all_curve_words(n)) {
        const CrossingSequence seq = word(w);
        const SplitGraph sg = build_split_graph(full_split(curve_as_graph(seq)).code);
        const IntersectionGraph ig = intersection_graph_embedded(sg.chords, sg.graph, sg.rotation);
        count_comparisons(sg.chords, sg.graph, sg.rotation);
        std::vector<std::vector<int>> adj(ig.size());
        for (auto [i, j] : ig.edges) adj[i].push_back(j), adj[j].push_back(i);
        std::vector<int> color(ig.size(), -1);
        bool bipartite = true;
        for (int s = 0; s < ig.size(); ++s) {
          if (color[s] != -1) continue;
          color[s] = 0;
          std::vector<int> stack{s};
          while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int x : adj[v]) {
              if (color[x] == -1) color[x] = 1 - color[v], stack.push_back(x);
              else if (color[x] == color[v]) bipartite = false;
            }
          }
        }
        t.expect(realize_curve(seq).realizable == (evenly_intersticed(seq) && bipartite), text(w));
      }
    return from(t, "sequences");
  });

  report(
      4, "circle extension matches side enumeration",
      [] {
        Tally t;
        Rng rng(4004);
        const auto loop = loop_graph();
        for (int i = 0; i < 1000; ++i) {
          const bool oriented = uniform(rng, 0, 3) > 0;
          const ChordDiagram c = random_diagram(rng, loop.graph, uniform(rng, 0, 12), oriented);
          const ExtensionResult r = extend_circle(loop.graph, loop.rotation, c);
          t.expect(r.yes() == brute_extend_circle(loop.graph, c), write_chords(c, loop.graph));
          replay(r, loop.graph, loop.rotation, c, write_chords(c, loop.graph));
          count_comparisons(c, loop.graph, loop.rotation);
        }
        return from(t, "diagrams");
      },
      60.0);

  report(5, "K2 with A B C A B C", [] {
    const auto k2 = k2_graph();
    const ChordDiagram c =
        parse_chords("unoriented\nchord A e@0 e@3\nchord B e@1 e@4\nchord C e@2 e@5\n", k2.graph);
    const IntersectionGraph ig = intersection_graph_embedded(c, k2.graph, k2.rotation);
    count_comparisons(c, k2.graph, k2.rotation);
    const std::set<std::pair<int, int>> k3{{0, 1}, {0, 2}, {1, 2}};
    const ExtensionResult r = extend_general(k2.graph, k2.rotation, c);
    replay(r, k2.graph, k2.rotation, c, "K2 A B C A B C");
    const bool ok = ig.size() == 3 && ig.edges == k3 && r.yes();
    return Outcome{ok, std::string("intersection graph ") + (ig.edges == k3 ? "is" : "is not") + " K3, verdict " +
                           (r.yes() ? "yes" : "no")};
  });

  report(
      6, "generated graph immersions round-trip",
      [] {
        Tally t;
        const GenBase bases[] = {GenBase::Cycle, GenBase::Theta, GenBase::Dumbbell};
        int most = 0;
        for (int i = 0; i < 1000; ++i) {
          const auto gen = generate_immersion(6006 + i, {bases[i % 3], 0, -1, 12});
          const auto& code = std::get<GraphGaussCode>(gen.code);
          const Realization r = realize_graph(code);
          most = std::max(most, static_cast<int>(r.split.trace.steps.size()));
          const std::string what = std::string(to_string(gen.base)) + " seed " + std::to_string(6006 + i);
          t.expect(r.realizable && r.immersion && equivalent_codes(code_of(*r.immersion), code), what);
          replay(r, what);
        }
        Outcome o = from(t, "immersions");
        o.detail += ", up to " + std::to_string(most) + " crossings";
        return o;
      },
      300.0);

  report(7, "certificates and witnesses replay",
         [] { return from(soundness, "verdicts with Euler characteristic 2 or a valid witness"); });

  report(8, "intersection graph comparison bound", [] {
    Rng rng(8008);
    for (int i = 0; i < 500; ++i) {
      const auto eg = random_planar(rng, uniform(rng, 1, 8));
      const ChordDiagram c = random_diagram(rng, eg.graph, uniform(rng, 0, 8), uniform(rng, 0, 1) == 1);
      count_comparisons(c, eg.graph, eg.rotation);
    }
    return from(comparisons, "diagrams within 16*C(n,2)");
  });

  report(9, "full intersection graph inside every embedded one", [] {
    Tally t;
    Rng rng(9009);
    for (int i = 0; i < 200; ++i) {
      const auto eg = random_planar(rng, uniform(rng, 1, 6));
      const ChordDiagram c = random_diagram(rng, eg.graph, uniform(rng, 1, 5));
      const IntersectionGraph full = intersection_graph_full(c, eg.graph);
      for (int k = 0; k < 20; ++k) {
        const RotationSystem rot = random_rotation(rng, eg.graph);
        const IntersectionGraph emb = intersection_graph_embedded(c, eg.graph, rot);
        t.expect(emb.chords == full.chords &&
                     std::includes(emb.edges.begin(), emb.edges.end(), full.edges.begin(), full.edges.end()),
                 write_graph(eg.graph, rot) + write_chords(c, eg.graph));
      }
    }
    return from(t, "diagram and rotation pairs");
  });

  std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
