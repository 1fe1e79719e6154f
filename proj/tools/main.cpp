#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "gaussgraph/oracle.hpp"
#include "gaussgraph/realize.hpp"
#include "gaussgraph/serialize.hpp"
#include "render.hpp"

using namespace gaussgraph;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  int code = kYes;
  std::string out;
  std::string err;
  Json json;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string describe(const RefusalWitness& w) {
  std::ostringstream out;
  out << witness_kind(w);
  if (const auto* r = std::get_if<RespectsWitness>(&w)) out << ": chord " << r->chord;
  if (const auto* o = std::get_if<OddCycleWitness>(&w)) {
    out << ":";
    for (const auto& c : o->chords) out << ' ' << c;
  }
  if (const auto* g = std::get_if<GenusWitness>(&w)) out << ": genus " << g->genus;
  if (const auto* i = std::get_if<ImplicationWitness>(&w)) {
    for (const auto& c : i->cases) {
      out << "\n   ";
      if (!c.excluded.empty()) {
        out << " without";
        for (const auto& e : c.excluded) out << ' ' << e;
        out << ':';
      }
      for (const auto& s : c.chain) out << ' ' << s.from_item << '@' << s.from_region << " ->";
      if (!c.chain.empty()) out << ' ' << c.chain.back().to_item << '@' << c.chain.back().to_region;
    }
  }
  return out.str();
}

std::string code_line(const GraphGaussCode& code, bool curve) {
  if (curve) return " " + format_tokens(code.records.at(0).tokens);
  std::string text = write_code(code);
  std::string out;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) out += "\n    " + line;
  return out;
}

// Runs `body`, turning input problems into exit code 2.
template <class F>
Outcome guarded(const std::string& file, F body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {kInputError, {}, file + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                                 e.detail() + "\n",
            {{"file", file}, {"error", e.detail()}, {"line", e.line()}, {"column", e.column()}}};
  } catch (const InputError& e) {
    return {kInputError, {}, std::string(e.what()) + "\n", {{"file", file}, {"error", e.what()}}};
  } catch (const std::invalid_argument& e) {
    return {kInputError, {}, file + ": " + e.what() + "\n", {{"file", file}, {"error", e.what()}}};
  } catch (const std::length_error& e) {
    return {kInputError, {}, file + ": " + e.what() + "\n", {{"file", file}, {"error", e.what()}}};
  }
}

Outcome check_code(const std::string& file, bool want_curve) {
  return guarded(file, [&] {
    const ParsedCode code = parse_code(read_file(file));
    const bool curve = std::holds_alternative<CrossingSequence>(code);
    if (curve != want_curve) throw InputError(file + ": expected a " + (want_curve ? "curve" : "graph") + " code");
    const Realization r =
        curve ? realize_curve(std::get<CrossingSequence>(code)) : realize_graph(std::get<GraphGaussCode>(code));
    Outcome o;
    o.code = r.realizable ? kYes : kNo;
    o.json = to_json(r);
    std::ostringstream out;
    out << file << ": " << (r.realizable ? "realizable" : "not realizable") << '\n';
    out << "  split code:" << code_line(r.split.code, curve) << '\n';
    if (r.witness) out << "  witness: " << describe(*r.witness) << '\n';
    if (r.immersion) {
      const auto& m = r.immersion->map;
      const auto crossings = std::count_if(m.nodes().begin(), m.nodes().end(),
                                           [](const MapNode& n) { return n.kind == NodeKind::Crossing; });
      out << "  immersion: " << m.nodes().size() << " vertices (" << crossings
          << (crossings == 1 ? " crossing), " : " crossings), ") << m.edges().size()
          << " edges\n";
      out << "  code:" << code_line(graph_code_of(*r.immersion), curve) << '\n';
    }
    o.out = out.str();
    return o;
  });
}

Outcome split_file(const std::string& file) {
  return guarded(file, [&] {
    const ParsedCode code = parse_code(read_file(file));
    const bool curve = std::holds_alternative<CrossingSequence>(code);
    const GraphGaussCode g = curve ? curve_as_graph(std::get<CrossingSequence>(code)) : std::get<GraphGaussCode>(code);
    validate(g);
    const SplitCode sc = full_split(g);
    auto reported = [&](const GraphGaussCode& c) -> ParsedCode {
      if (curve) return CrossingSequence{c.records.at(0).tokens};
      return c;
    };
    Outcome o;
    o.json = {{"split_code", to_json(reported(sc.code))}, {"split_trace", to_json(sc.trace)}};
    std::ostringstream out;
    for (std::size_t i = 0; i < sc.trace.steps.size(); ++i) {
      const SplitStep& s = sc.trace.steps[i];
      out << "step " << i + 1 << ": " << s.symbol << " (" << to_string(s.kind) << "):" << code_line(s.snapshot, curve)
          << '\n';
    }
    out << "split code:" << code_line(sc.code, curve) << '\n';
    o.out = out.str();
    return o;
  });
}

Outcome extend_files(const std::string& graph_file, const std::string& chord_file) {
  return guarded(graph_file, [&] {
    const EmbeddedGraph eg = parse_graph(read_file(graph_file));
    ChordDiagram c;
    try {
      c = parse_chords(read_file(chord_file), eg.graph);
    } catch (const ParseError& e) {
      throw InputError(chord_file + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                       e.detail());
    }
    if (!connected(eg.graph)) throw std::invalid_argument("graph is disconnected");
    const ExtensionResult r = extend_general(eg.graph, eg.rotation, c);
    Outcome o;
    o.code = r.yes() ? kYes : kNo;
    o.json = to_json(r);
    std::ostringstream out;
    out << (r.yes() ? "embeddable" : "not embeddable") << '\n';
    if (r.certificate)
      for (const auto& p : r.certificate->labeling)
        out << "  " << p.chord << " -> " << p.region << " (" << to_string(p.side_a) << ", " << to_string(p.side_b)
            << ")\n";
    if (r.witness) out << "  witness: " << describe(*r.witness) << '\n';
    o.out = out.str();
    return o;
  });
}

Outcome oracle_files(const std::string& file, const std::string& chord_file) {
  return guarded(file, [&] {
    const std::string text = read_file(file);
    bool yes = false;
    if (!chord_file.empty()) {
      const EmbeddedGraph eg = parse_graph(text);
      const ChordDiagram c = parse_chords(read_file(chord_file), eg.graph);
      yes = brute_extend_embedded(eg.graph, eg.rotation, c);
    } else {
      const ParsedCode code = parse_code(text);
      if (const auto* seq = std::get_if<CrossingSequence>(&code)) {
        std::vector<std::string> word;
        for (const Token& t : seq->tokens) word.push_back(t.symbol);
        yes = brute_realize_curve(word);
      } else {
        const SplitCode sc = full_split(std::get<GraphGaussCode>(code));
        const SplitGraph sg = build_split_graph(sc.code);
        yes = is_planar_rotation(sg.graph, sg.rotation) && brute_extend_embedded(sg.graph, sg.rotation, sg.chords);
      }
    }
    Outcome o;
    o.code = yes ? kYes : kNo;
    o.json = {{"file", file}, {"oracle", yes}};
    o.out = file + ": oracle says " + (yes ? "yes" : "no") + "\n";
    return o;
  });
}

Outcome render_file(const std::string& file, const std::string& format) {
  return guarded(file, [&] {
    Json j;
    try {
      j = Json::parse(read_file(file));
    } catch (const Json::parse_error& e) {
      throw InputError(file + ": " + e.what());
    }
    const Json& body = j.contains("immersion") ? j.at("immersion") : j;
    if (!body.contains("rotation")) throw InputError(file + ": no immersion to render");
    Immersion imm;
    try {
      imm = immersion_from_json(body);
    } catch (const Json::exception& e) {
      throw InputError(file + ": " + e.what());
    }
    Outcome o;
    o.out = format == "dot" ? cli::render_dot(imm) : cli::render_svg(imm);
    return o;
  });
}

// Runs one job per input on up to `jobs` threads; results keep input order.
std::vector<Outcome> run_batch(const std::vector<std::string>& files, int jobs,
                               const std::function<Outcome(const std::string&)>& job) {
  std::vector<Outcome> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) results[i] = job(files[i]);
  };
  const int n = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(files.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

int emit(const std::vector<Outcome>& results, bool json) {
  int code = kYes;
  for (const auto& r : results) code = std::max(code, r.code);
  if (json) {
    Json out;
    if (results.size() == 1) {
      out = results[0].json;
    } else {
      out = Json::array();
      for (const auto& r : results) out.push_back(r.json);
    }
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& r : results) std::cout << r.out;
  }
  for (const auto& r : results) std::cerr << r.err;
  return code;
}

GenBase parse_base(const std::string& s) {
  for (GenBase b : {GenBase::Any, GenBase::Curve, GenBase::Cycle, GenBase::Theta, GenBase::Dumbbell})
    if (s == to_string(b)) return b;
  throw InputError("unknown base '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar realizability of Gauss codes and chord diagram extension"};
  app.require_subcommand(1);
  bool json = false;
  int jobs = 1;
  app.add_flag("--json", json, "Print the verdict as JSON");
  app.add_option("--jobs,-j", jobs, "Process input files concurrently")->check(CLI::PositiveNumber);

  std::vector<std::string> files;
  auto* check_curve = app.add_subcommand("check-curve", "Decide whether a closed-curve code is realizable");
  check_curve->add_option("files", files, "Curve code files")->required();
  auto* check_graph = app.add_subcommand("check-graph", "Decide whether a graph Gauss code is realizable");
  check_graph->add_option("files", files, "Graph code files")->required();
  auto* split = app.add_subcommand("split", "Print the split code and the split trace");
  split->add_option("files", files, "Code files")->required();

  std::string graph_file, chord_file;
  auto* extend = app.add_subcommand("extend", "Decide whether a chord diagram extends an embedded graph");
  extend->add_option("graph", graph_file, "Graph file")->required();
  extend->add_option("chords", chord_file, "Chord diagram file")->required();

  std::string format = "svg", output;
  auto* render = app.add_subcommand("render", "Draw the immersion of a JSON verdict");
  render->add_option("verdict", graph_file, "Verdict or immersion JSON")->required();
  render->add_option("-o,--format", format, "Output format")->check(CLI::IsMember({"svg", "dot"}));
  render->add_option("--output", output, "Write to a file instead of stdout");

  auto* oracle = app.add_subcommand("oracle", "Brute-force verdict for a code, or for a graph and chord diagram");
  oracle->add_option("file", graph_file, "Code or graph file")->required();
  oracle->add_option("chords", chord_file, "Chord diagram file");

  std::uint64_t seed = 0;
  std::string base = "any";
  GenParams params;
  auto* gen = app.add_subcommand("gen", "Generate a realizable code with its immersion");
  auto* seed_opt = gen->add_option("--seed", seed, "Generator seed (default: $GAUSSGRAPH_SEED or 0)");
  gen->add_option("--base", base, "any, curve, cycle, theta or dumbbell");
  gen->add_option("--size", params.base_size, "Cycle length or theta multiplicity");
  gen->add_option("--crossings", params.crossings, "Number of crossings (default: random up to 12)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*check_curve || *check_graph) {
    const bool curve = check_curve->parsed();
    return emit(run_batch(files, jobs, [&](const std::string& f) { return check_code(f, curve); }), json);
  }
  if (*split) return emit(run_batch(files, jobs, split_file), json);
  if (*extend) return emit({extend_files(graph_file, chord_file)}, json);
  if (*oracle) return emit({oracle_files(graph_file, chord_file)}, json);
  if (*render) {
    Outcome o = render_file(graph_file, format);
    if (o.code != kYes || output.empty()) return emit({o}, false);
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write '" << output << "'\n";
      return kInputError;
    }
    out << o.out;
    return kYes;
  }
  if (*gen) {
    if (!*seed_opt)
      if (const char* env = std::getenv("GAUSSGRAPH_SEED")) {
        try {
          seed = std::stoull(env);
        } catch (const std::exception&) {
          std::cerr << "GAUSSGRAPH_SEED is not a number\n";
          return kInputError;
        }
      }
    try {
      params.base = parse_base(base);
    } catch (const InputError& e) {
      std::cerr << e.what() << '\n';
      return kInputError;
    }
    const GeneratedImmersion g = generate_immersion(seed, params);
    Outcome o;
    o.out = write_code(g.code);
    o.json = {{"seed", seed}, {"base", to_string(g.base)}, {"code", to_json(g.code)}, {"immersion", to_json(g.immersion)}};
    return emit({o}, json);
  }
  return kInputError;
}
