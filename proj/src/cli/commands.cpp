#include "hyperpath/cli/commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperpath/cli/bench.hpp"
#include "hyperpath/cli/report.hpp"
#include "hyperpath/generators.hpp"
#include "hyperpath/oracle.hpp"
#include "hyperpath/solver.hpp"

namespace hyperpath::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::size_t repetitions = 20;
  unsigned field_degree = 16;
  bool json = false;
  bool force = false;
};

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t i = 1; i < args.size(); ++i) s += (i > 1 ? " " : "") + args[i];
  return s;
}

void emit(std::ostream& out, const json& doc, bool as_json) {
  if (as_json) {
    out << doc.dump(2) << '\n';
  } else {
    out << to_text(doc);
  }
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::vector<VertexId> load_sequence(const std::string& path) {
  auto in = open_in(path);
  return parse_sequence(in);
}

DetectionParams detection(const Globals& g) {
  DetectionParams p;
  p.seed = g.seed;
  p.repetitions = g.repetitions;
  p.field_degree = g.field_degree;
  p.force = g.force;
  return p;
}

// ---- solve ---------------------------------------------------------------

struct SolveArgs {
  std::string kind;
  std::string file;
  std::size_t k = 0;
  bool oracle = false;
  bool witness = false;
};

int cmd_solve(const SolveArgs& a, const Globals& g, const std::string& command, std::ostream& out) {
  const Hypergraph h = load_hypergraph(a.file);
  const bool cycle = a.kind == "cycle";
  RunReport rep;
  rep.command = command;
  rep.problem = a.kind;
  rep.r = h.uniformity();
  rep.n = h.num_vertices();
  rep.m = h.num_edges();
  rep.k = a.k;
  rep.directed = h.directed();
  rep.seed = g.seed;
  rep.repetitions = g.repetitions;
  rep.field_degree = g.field_degree;

  const auto t0 = std::chrono::steady_clock::now();
  if (a.oracle) {
    PathSearchOptions opts;
    opts.force = g.force;
    auto w = cycle ? exists_tight_cycle_bruteforce(h, a.k, opts) : exists_tight_path_bruteforce(h, a.k, opts);
    rep.method = "oracle";
    rep.exact = true;
    rep.yes = w.has_value();
    if (a.witness) rep.witness = w;
  } else {
    const DetectionParams p = detection(g);
    const Decision d = cycle ? solve_k_hypercycle(h, a.k, p) : solve_k_hyperpath(h, a.k, p);
    rep.method = "algebraic";
    rep.yes = d.yes;
    rep.exact = d.exact;
    rep.trials_used = d.trials_used;
    rep.false_negative_bound = d.false_negative_bound;
    rep.circuit_gates = d.circuit_gates;
    rep.warnings = d.warnings;
    if (a.witness && d.yes) {
      if (cycle) {
        PathSearchOptions opts;
        opts.force = true;
        rep.witness = exists_tight_cycle_bruteforce(h, a.k, opts);
      } else {
        rep.witness = extract_witness(h, a.k, p);
      }
    }
  }
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(out, to_json(rep), g.json);
  return rep.yes ? kYes : kNo;
}

// ---- reduce --------------------------------------------------------------

struct ReduceArgs {
  std::string kind;
  std::vector<std::string> inputs;
  std::string out_dir = ".";
  std::size_t r = 3;
  bool literal = false;
  std::size_t threshold = 0;  // 0: take it from the file
  std::size_t max_set_size = 4;
};

ExactCoverInstance load_exc(const std::string& path, std::optional<std::size_t>* threshold = nullptr) {
  CoverFile f = load_cover_file(path);
  if (threshold) *threshold = f.threshold;
  return std::move(f.instance);
}

void write_exc(const fs::path& path, const ExactCoverInstance& inst, std::optional<std::size_t> t = std::nullopt) {
  auto o = open_out(path);
  write_cover_file(o, inst, t);
}

int cmd_reduce(const ReduceArgs& a, const Globals& g, const std::string& command, std::ostream& out) {
  const auto need = [&](std::size_t count, const char* what) {
    if (a.inputs.size() != count) throw std::invalid_argument(std::string("reduce ") + a.kind + " expects " + what);
  };
  json doc{{"schema", kRunSchema}, {"command", command}, {"reduction", a.kind}};
  json files = json::array();
  const fs::path dir(a.out_dir);
  if (a.kind != "path-to-cover") fs::create_directories(dir);

  if (a.kind == "exc-to-khp") {
    need(1, "one Exact Cover file");
    const auto inst = load_exc(a.inputs[0]);
    const auto gi = exc_to_khp(inst, a.r, a.literal ? GadgetVariant::literal : GadgetVariant::corrected);
    const auto graph_path = dir / "gadget.hg";
    const auto map_path = dir / "gadget.map.json";
    {
      auto o = open_out(graph_path);
      write_hypergraph(o, gi.graph);
    }
    {
      auto o = open_out(map_path);
      o << gadget_map_to_json(gi.map, gi.k).dump(1) << '\n';
    }
    files = {graph_path.string(), map_path.string()};
    doc["summary"] = {{"r", a.r},
                      {"n", inst.n},
                      {"m", inst.sets.size()},
                      {"vertices", gi.graph.num_vertices()},
                      {"edges", gi.graph.num_edges()},
                      {"k", gi.k},
                      {"element_nodes", gi.map.element_node_count()},
                      {"set_nodes", gi.map.set_node_count()}};
  } else if (a.kind == "pad-exc") {
    need(1, "one Exact Cover file");
    const auto inst = load_exc(a.inputs[0]);
    const auto fam = pad_exc_instance(inst, a.r);
    json sizes = json::array();
    for (const auto& p : fam.instances) {
      const auto path = dir / ("padded_" + std::to_string(p.ell) + ".exc");
      write_exc(path, p.instance);
      files.push_back(path.string());
      sizes.push_back(p.instance.sets.size());
    }
    doc["summary"] = {{"kappa", fam.kappa}, {"n", inst.n + fam.kappa}, {"instances", fam.instances.size()},
                      {"sets_per_instance", sizes}};
  } else if (a.kind == "sp-to-exc") {
    need(1, "one Set Partitioning file");
    std::optional<std::size_t> t;
    auto inst = load_exc(a.inputs[0], &t);
    if (a.threshold) t = a.threshold;
    if (!t) throw std::invalid_argument("sp-to-exc needs a threshold t (file header or -t)");
    const auto batch = sp_to_exc_color_coding({std::move(inst), *t}, g.seed);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const auto path = dir / ("colored_" + std::to_string(i) + ".exc");
      write_exc(path, batch[i]);
      files.push_back(path.string());
    }
    doc["summary"] = {{"instances", batch.size()}, {"elements", batch.empty() ? 0 : batch[0].n}, {"t", *t}};
  } else if (a.kind == "sc-to-sp") {
    need(1, "one Set Cover file");
    std::optional<std::size_t> t;
    auto inst = load_exc(a.inputs[0], &t);
    if (a.threshold) t = a.threshold;
    const auto closure = sc_to_sp_subset_closure(inst, a.max_set_size);
    const auto path = dir / "closure.exc";
    write_exc(path, closure.family, t);
    files.push_back(path.string());
    doc["summary"] = {{"generated", closure.generated}, {"sets", closure.family.sets.size()}};
  } else if (a.kind == "path-to-cover") {
    need(3, "GADGET_GRAPH GADGET_MAP PATH_FILE");
    const Hypergraph graph = load_hypergraph(a.inputs[0]);
    auto in = open_in(a.inputs[1]);
    const auto loaded = gadget_map_from_json(json::parse(in));
    const auto path = load_sequence(a.inputs[2]);
    const auto cover = path_to_cover(graph, loaded.map, loaded.k, path);
    doc["cover"] = cover;
  } else {
    throw std::invalid_argument("unknown reduction " + a.kind);
  }
  if (a.kind != "path-to-cover") doc["files"] = files;
  emit(out, doc, g.json);
  return kYes;
}

// ---- verify --------------------------------------------------------------

int cmd_verify(const std::string& kind, const std::string& instance, const std::string& cert, const Globals& g,
               const std::string& command, std::ostream& out) {
  bool valid = false;
  json doc{{"schema", kRunSchema}, {"command", command}, {"certificate", kind}};
  if (kind == "cover") {
    const CoverFile f = load_cover_file(instance);
    check_instance(f.instance);
    const auto seq = load_sequence(cert);
    std::vector<SetIndex> chosen(seq.begin(), seq.end());
    valid = is_exact_cover(f.instance, chosen) && (!f.threshold || chosen.size() <= *f.threshold);
  } else {
    const Hypergraph h = load_hypergraph(instance);
    const auto seq = load_sequence(cert);
    valid = kind == "cycle" ? is_tight_cycle(h, seq) : is_tight_path(h, seq);
    doc["length"] = seq.size();
  }
  doc["valid"] = valid;
  emit(out, doc, g.json);
  return valid ? kYes : kNo;
}

// ---- gen -----------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::string output;
  std::size_t r = 3;
  std::size_t n = 10;
  std::size_t m = 20;
  std::size_t k = 6;
  std::size_t noise = 10;
  double density = 0.3;
  bool undirected = false;
};

constexpr std::size_t kGenMaxVertices = 1'000'000;

int cmd_gen(const GenArgs& a, const Globals& g, const std::string& command, std::ostream& out) {
  if (a.n > kGenMaxVertices && !g.force) {
    throw std::invalid_argument("n = " + std::to_string(a.n) + " exceeds the generator guard " +
                                std::to_string(kGenMaxVertices));
  }
  json doc{{"schema", kRunSchema}, {"command", command}, {"generator", a.kind}, {"seed", g.seed}};
  json files = json::array({a.output});
  if (a.kind == "random-hypergraph") {
    const auto h = random_hypergraph(a.r, a.n, a.m, !a.undirected, g.seed);
    auto o = open_out(a.output);
    write_hypergraph(o, h);
    doc["summary"] = {{"r", a.r}, {"n", a.n}, {"m", h.num_edges()}};
  } else if (a.kind == "random-exc") {
    const auto inst = random_exc(a.n, a.m, a.density, g.seed);
    write_exc(a.output, inst);
    doc["summary"] = {{"n", inst.n}, {"m", inst.sets.size()}};
  } else if (a.kind == "planted-path" || a.kind == "planted-cycle") {
    const bool cycle = a.kind == "planted-cycle";
    const auto p = cycle ? planted_cycle(a.r, a.n, a.k, a.noise, !a.undirected, g.seed)
                         : planted_path(a.r, a.n, a.k, a.noise, !a.undirected, g.seed);
    {
      auto o = open_out(a.output);
      write_hypergraph(o, p.graph);
    }
    const std::string plant = a.output + ".plant";
    {
      auto o = open_out(plant);
      o << "# planted tight " << (cycle ? "cycle" : "path") << " of length " << a.k << '\n';
      for (std::size_t i = 0; i < p.plant.size(); ++i) o << (i ? " " : "") << p.plant[i];
      o << '\n';
    }
    files.push_back(plant);
    doc["summary"] = {{"r", a.r}, {"n", a.n}, {"m", p.graph.num_edges()}, {"k", a.k}};
  } else {
    throw std::invalid_argument("unknown generator " + a.kind);
  }
  doc["files"] = files;
  emit(out, doc, g.json);
  return kYes;
}

// ---- bench ---------------------------------------------------------------

int cmd_bench(BenchOptions opts, const Globals& g, std::ostream& out) {
  opts.field_degree = g.field_degree;
  opts.seed = g.seed;
  opts.force = g.force;
  const auto rows = run_bench(opts);
  if (g.json) {
    out << bench_to_json(opts, rows).dump(2) << '\n';
  } else {
    out << bench_to_table(rows);
  }
  return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight path and cycle detection in uniform hypergraphs, with reductions and oracles"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--repetitions", g.repetitions, "Detection trials R")->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--field-degree", g.field_degree, "Field degree l (8, 16 or 32)")->capture_default_str()
      ->check(CLI::IsMember({8u, 16u, 32u}));
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--force", g.force, "Override size guards");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Decide k-HyperPath or k-HyperCycle");
  solve->fallthrough();
  solve->add_option("kind", sa.kind)->required()->check(CLI::IsMember({"path", "cycle"}));
  solve->add_option("file", sa.file, "Hypergraph file")->required();
  solve->add_option("-k", sa.k, "Path or cycle length")->required();
  solve->add_flag("--oracle", sa.oracle, "Use the exhaustive oracle instead");
  solve->add_flag("--witness", sa.witness, "Also report a witness sequence");

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "Run a reduction");
  reduce->fallthrough();
  reduce->add_option("kind", ra.kind)
      ->required()
      ->check(CLI::IsMember({"exc-to-khp", "pad-exc", "sp-to-exc", "sc-to-sp", "path-to-cover"}));
  reduce->add_option("inputs", ra.inputs, "Input files")->required();
  reduce->add_option("-o,--output", ra.out_dir, "Output directory")->capture_default_str();
  reduce->add_option("-r", ra.r, "Uniformity of the gadget")->capture_default_str();
  reduce->add_flag("--literal", ra.literal, "Shared special vertices and unadjusted index ranges (known to be unsound)");
  reduce->add_option("-t", ra.threshold, "Set Partitioning threshold");
  reduce->add_option("-b", ra.max_set_size, "Largest set size for subset closure")->capture_default_str();

  std::string vkind, vinst, vcert;
  auto* verify = app.add_subcommand("verify", "Check a certificate");
  verify->fallthrough();
  verify->add_option("kind", vkind)->required()->check(CLI::IsMember({"path", "cycle", "cover"}));
  verify->add_option("instance", vinst)->required();
  verify->add_option("certificate", vcert)->required();

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->fallthrough();
  gen->add_option("kind", ga.kind)
      ->required()
      ->check(CLI::IsMember({"random-hypergraph", "random-exc", "planted-path", "planted-cycle"}));
  gen->add_option("-o,--output", ga.output, "Output file")->required();
  gen->add_option("-r", ga.r)->capture_default_str();
  gen->add_option("-n", ga.n)->capture_default_str();
  gen->add_option("-m", ga.m, "Edges or sets")->capture_default_str();
  gen->add_option("-k", ga.k, "Planted length")->capture_default_str();
  gen->add_option("--noise", ga.noise, "Noise edges for planted instances")->capture_default_str();
  gen->add_option("--density", ga.density, "Element probability for random-exc")->capture_default_str();
  gen->add_flag("--undirected", ga.undirected);

  BenchOptions bo;
  auto* bench = app.add_subcommand("bench", "Measure solve time against k on a planted family");
  bench->fallthrough();
  bench->add_option("--k-min", bo.k_min)->capture_default_str();
  bench->add_option("--k-max", bo.k_max)->capture_default_str();
  bench->add_option("--samples", bo.samples, "Timed runs per k")->capture_default_str();
  bench->add_option("--trials", bo.trials, "Detection trials per run")->capture_default_str();
  bench->add_option("-r", bo.r)->capture_default_str();
  bench->add_option("-n", bo.n)->capture_default_str();
  bench->add_option("--plant", bo.plant_length)->capture_default_str();
  bench->add_option("--noise", bo.noise_edges)->capture_default_str();
  const std::map<std::string, BenchFamily> families{{"cycle", BenchFamily::cycle}, {"path", BenchFamily::path}};
  bench->add_option("--family", bo.family, "Planted structure: cycle or path [cycle]")
      ->transform(CLI::CheckedTransformer(families, CLI::ignore_case).description(""));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kError;
  }

  const std::string command = join_args(args);
  try {
    if (*solve) return cmd_solve(sa, g, command, out);
    if (*reduce) return cmd_reduce(ra, g, command, out);
    if (*verify) return cmd_verify(vkind, vinst, vcert, g, command, out);
    if (*gen) return cmd_gen(ga, g, command, out);
    if (*bench) return cmd_bench(bo, g, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace hyperpath::cli
