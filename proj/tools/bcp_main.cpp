// bcp: command-line front end for the biclique-partition toolkit.
//
// Pipelines speak the text formats from bcp/io.hpp on stdin/stdout, the
// compressed representation travels as SBP1 bytes, and analysis subcommands
// emit one JSON object per line. Exit codes: 0 success, 1 input error,
// 2 internal assertion (including a partition that fails verification).
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bcp/acceptance.hpp"
#include "bcp/densest.hpp"
#include "bcp/entropy.hpp"
#include "bcp/finder.hpp"
#include "bcp/generators.hpp"
#include "bcp/graph.hpp"
#include "bcp/io.hpp"
#include "bcp/partition.hpp"
#include "bcp/partition_density.hpp"
#include "bcp/partition_ep.hpp"
#include "bcp/partition_hypergraph.hpp"
#include "bcp/queries.hpp"
#include "bcp/representation.hpp"

namespace {

using nlohmann::json;

// A partition that fails verification is an internal bug, not an input
// problem: every emitting pipeline checks before reporting.
void require_verified(const bcp::VerifyResult& vr) {
  if (!vr.ok) throw std::logic_error("partition verification failed: " + vr.violation);
}

std::vector<uint8_t> read_stdin_bytes() {
  std::vector<uint8_t> bytes;
  char buf[1 << 16];
  while (std::cin.read(buf, sizeof buf) || std::cin.gcount() > 0) {
    bytes.insert(bytes.end(), buf, buf + std::cin.gcount());
  }
  return bytes;
}

std::vector<uint32_t> parse_ids(const std::string& text) {
  std::istringstream in(text);
  return bcp::parse_vertex_set(in);
}

uint64_t covered_pairs(const bcp::BicliquePartition& p) {
  uint64_t m = 0;
  for (const auto& b : p.items) m += uint64_t{b.left.size()} * b.right.size();
  return m;
}

uint64_t covered_tuples(const bcp::DCliquePartition& p) {
  uint64_t m = 0;
  for (const auto& c : p.items) {
    uint64_t prod = 1;
    for (const auto& part : c.parts) prod *= part.size();
    m += prod;
  }
  return m;
}

double pair_density(uint32_t n, uint64_t m) {
  if (n < 2) return 0.0;
  return static_cast<double>(m) / (0.5 * n * (n - 1.0));
}

// Convergence record for a verified partition: the measured ratios next to
// the limits they approach (1/2 for G(n,1/2) weight and load, h2(gamma)/2 for
// the density-aware weight). Both log bases are reported; the lg form is the
// bit-count reading, the ln form is the nats reading. Pair density reads the
// member count against unordered pairs, so a directed partition can exceed 1;
// such rows carry no entropy reading and are flagged degenerate.
json theory_record(const bcp::BicliquePartition& p) {
  const uint32_t n = p.n;
  const uint64_t m = covered_pairs(p);
  const uint64_t w = bcp::weight(p);
  const uint32_t ml = n == 0 ? 0 : bcp::max_load(p);
  const double gamma = pair_density(n, m);
  const double h2 = gamma <= 1.0 ? bcp::binary_entropy(gamma) : 0.0;
  json j;
  j["n"] = n;
  j["m"] = m;
  j["weight"] = w;
  j["max_load"] = ml;
  j["gamma"] = gamma;
  j["h2_half"] = h2 / 2.0;
  j["load_target"] = 0.5;
  j["degenerate"] = (n < 2 || h2 == 0.0 || gamma > 1.0);
  if (n >= 2) {
    const double nn = static_cast<double>(n) * n;
    j["w_lg_ratio"] = w * std::log2(static_cast<double>(n)) / nn;
    j["w_ln_ratio"] = w * std::log(static_cast<double>(n)) / nn;
    j["load_lg_ratio"] = ml * std::log2(static_cast<double>(n)) / n;
  } else {
    j["w_lg_ratio"] = 0.0;
    j["w_ln_ratio"] = 0.0;
    j["load_lg_ratio"] = 0.0;
  }
  return j;
}

unsigned resolve_bench_threads(unsigned requested) {
  unsigned t = requested;
  if (t == 0) {
    t = std::thread::hardware_concurrency();
    if (t == 0) t = 1;
  }
  if (const char* raw = std::getenv("BICLIQUE_THREADS"); raw != nullptr && *raw != '\0') {
    const long cap = std::strtol(raw, nullptr, 10);
    if (cap >= 1 && t > static_cast<unsigned>(cap)) t = static_cast<unsigned>(cap);
  }
  return t == 0 ? 1 : t;
}

struct GenArgs {
  uint32_t n = 0;
  uint32_t d = 3;
  uint32_t k = 1;
  uint64_t m = 0;
  double p = 0.5;
  uint64_t seed = 1;
};

void add_gen(CLI::App& app, GenArgs& a) {
  CLI::App* gen = app.add_subcommand("gen", "generate a graph, digraph, or hypergraph on stdout");
  gen->require_subcommand(1);

  CLI::App* gnp = gen->add_subcommand("gnp", "G(n,p): each pair independently with probability p");
  gnp->add_option("n", a.n, "vertex count")->required();
  gnp->add_option("p", a.p, "edge probability")->required();
  gnp->add_option("--seed", a.seed, "rng seed");
  gnp->callback([&a] { bcp::serialize_graph(bcp::gen_gnp(a.n, a.p, a.seed), std::cout); });

  CLI::App* gnm = gen->add_subcommand("gnm", "G(n,m): uniform graph with exactly m edges");
  gnm->add_option("n", a.n, "vertex count")->required();
  gnm->add_option("m", a.m, "edge count")->required();
  gnm->add_option("--seed", a.seed, "rng seed");
  gnm->callback([&a] { bcp::serialize_graph(bcp::gen_gnm(a.n, a.m, a.seed), std::cout); });

  CLI::App* dgnp = gen->add_subcommand("dgnp", "directed G(n,p): each ordered pair independently");
  dgnp->add_option("n", a.n, "vertex count")->required();
  dgnp->add_option("p", a.p, "arc probability")->required();
  dgnp->add_option("--seed", a.seed, "rng seed");
  dgnp->callback([&a] { bcp::serialize_digraph(bcp::gen_directed_gnp(a.n, a.p, a.seed), std::cout); });

  CLI::App* hyper = gen->add_subcommand("hypergraph", "d-uniform: each d-set independently with probability p");
  hyper->add_option("n", a.n, "vertex count")->required();
  hyper->add_option("d", a.d, "uniformity (>= 2)")->required();
  hyper->add_option("p", a.p, "hyperedge probability")->required();
  hyper->add_option("--seed", a.seed, "rng seed");
  hyper->callback([&a] { bcp::serialize_hypergraph(bcp::gen_hypergraph(a.n, a.d, a.p, a.seed), std::cout); });

  CLI::App* interval = gen->add_subcommand("interval", "intersection graph of n random intervals");
  interval->add_option("n", a.n, "interval count")->required();
  interval->add_option("--seed", a.seed, "rng seed");
  interval->callback([&a] { bcp::serialize_graph(bcp::gen_interval(a.n, a.seed), std::cout); });

  CLI::App* circ = gen->add_subcommand("circulant", "2k-regular circulant: v adjacent to v +- 1..k");
  circ->add_option("n", a.n, "vertex count")->required();
  circ->add_option("k", a.k, "half-degree (2k < n)")->required();
  circ->callback([&a] { bcp::serialize_graph(bcp::gen_circulant(a.n, a.k), std::cout); });
}

struct PartitionArgs {
  std::string algo = "ep";
  uint32_t dim = 1;
};

void add_partition(CLI::App& app, PartitionArgs& a) {
  CLI::App* part = app.add_subcommand(
      "partition", "partition the stdin graph into bicliques (digraph for --algo directed)");
  part->add_option("--algo", a.algo, "ep | density | shatter | directed")
      ->check(CLI::IsMember({"ep", "density", "shatter", "directed"}));
  part->add_option("--dim", a.dim, "shattering dimension (shatter only)")
      ->check(CLI::PositiveNumber);
  part->callback([&a] {
    if (a.algo == "directed") {
      const bcp::Digraph g = bcp::parse_digraph(std::cin);
      const bcp::BicliquePartition p = bcp::partition_ep_directed(g);
      require_verified(bcp::verify_directed_partition(g, p));
      bcp::serialize_partition(p, std::cout);
      return;
    }
    const bcp::Graph g = bcp::parse_graph(std::cin);
    bcp::BicliquePartition p;
    if (a.algo == "ep") {
      p = bcp::partition_ep(g);
    } else if (a.algo == "density") {
      p = bcp::partition_density(g);
    } else {
      p = bcp::partition_shattering(g, a.dim);
    }
    require_verified(bcp::verify_partition(g, p));
    bcp::serialize_partition(p, std::cout);
  });
}

void add_dpartition(CLI::App& app, std::string& algo) {
  CLI::App* dpart = app.add_subcommand(
      "dpartition", "partition the stdin d-uniform hypergraph into complete d-partite members");
  dpart->add_option("--algo", algo, "stepup | equitable")
      ->check(CLI::IsMember({"stepup", "equitable"}));
  dpart->callback([&algo] {
    const bcp::Hypergraph h = bcp::parse_hypergraph(std::cin);
    const bcp::DCliquePartition p =
        algo == "stepup" ? bcp::partition_stepup(h) : bcp::partition_equitable(h);
    require_verified(bcp::verify_dpartition(h, p));
    bcp::serialize_dpartition(p, std::cout);
  });
}

void add_compress(CLI::App& app) {
  CLI::App* comp = app.add_subcommand(
      "compress", "read a biclique partition, write its SBP1 byte encoding to stdout");
  comp->callback([] {
    const bcp::BicliquePartition p = bcp::parse_partition(std::cin);
    const std::vector<uint8_t> bytes = bcp::serialize_sb(bcp::build_sb(p));
    std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                    static_cast<std::streamsize>(bytes.size()));
  });
}

void add_decompress(CLI::App& app, bool& as_partition) {
  CLI::App* dec = app.add_subcommand(
      "decompress", "read SBP1 bytes from stdin, write the decoded graph (or partition) as text");
  dec->add_flag("--partition", as_partition, "emit the stored partition instead of the edge set");
  dec->callback([&as_partition] {
    const std::vector<uint8_t> bytes = read_stdin_bytes();
    const bcp::SBRepr sb = bcp::parse_sb(bytes);
    if (as_partition) {
      bcp::BicliquePartition p;
      p.n = sb.n;
      p.items = sb.items;
      bcp::serialize_partition(p, std::cout);
      return;
    }
    const bcp::Graph g(sb.n, bcp::decode_edges(sb));
    bcp::serialize_graph(g, std::cout);
  });
}

struct QueryArgs {
  std::string indep;
  std::string cut_s;
  std::string cut_t;
};

void add_query(CLI::App& app, QueryArgs& a) {
  CLI::App* query = app.add_subcommand(
      "query", "independence / cut queries against SBP1 bytes on stdin");
  CLI::Option* oi = query->add_option("--independent-set", a.indep, "vertex ids, space-separated");
  CLI::Option* os = query->add_option("--cut-s", a.cut_s, "cut side S, space-separated ids");
  CLI::Option* ot = query->add_option("--cut-t", a.cut_t, "cut side T, space-separated ids");
  os->needs(ot);
  ot->needs(os);
  oi->excludes(os);
  query->callback([&a] {
    if (a.indep.empty() && a.cut_s.empty()) {
      throw std::invalid_argument("query: pass --independent-set or --cut-s/--cut-t");
    }
    const std::vector<uint8_t> bytes = read_stdin_bytes();
    const bcp::SBRepr sb = bcp::parse_sb(bytes);
    bcp::QueryEngine engine(sb);
    json j;
    if (!a.indep.empty()) {
      const std::vector<uint32_t> s = parse_ids(a.indep);
      j["op"] = "independent-set";
      j["vertices"] = s;
      j["independent"] = engine.is_independent(s);
    } else {
      const std::vector<uint32_t> s = parse_ids(a.cut_s);
      const std::vector<uint32_t> t = parse_ids(a.cut_t);
      j["op"] = "cut";
      j["s"] = s;
      j["t"] = t;
      j["edges"] = engine.cut(s, t);
    }
    std::cout << j.dump() << "\n";
  });
}

void add_densest(CLI::App& app, double& alpha) {
  CLI::App* dens = app.add_subcommand(
      "densest", "peel the stdin graph for a 1/(2*alpha)-approximate densest subgraph");
  dens->add_option("--alpha", alpha, "threshold growth factor (> 1)")->required();
  dens->callback([&alpha] {
    const bcp::Graph g = bcp::parse_graph(std::cin);
    const bcp::BicliquePartition p = bcp::partition_ep(g);
    require_verified(bcp::verify_partition(g, p));
    const bcp::DensestResult res = bcp::densest_approx(bcp::CBRepr(bcp::build_sb(p)), alpha);
    json j;
    j["alpha"] = alpha;
    j["vertices"] = res.vertices;
    j["size"] = res.vertices.size();
    j["density_num"] = res.density.num;
    j["density_den"] = res.density.den;
    j["density"] = res.density.to_double();
    j["rounds"] = res.rounds;
    j["thresholds"] = res.thresholds;
    std::cout << j.dump() << "\n";
  });
}

struct FindArgs {
  std::string method = "topdeg";
  std::string algo = "ep";
  uint64_t seed = 1;
};

void add_find(CLI::App& app, FindArgs& a) {
  CLI::App* find = app.add_subcommand(
      "find-biclique", "find a large balanced complete bipartite subgraph of the stdin graph");
  find->add_option("--method", a.method, "partition | topdeg | sampled")
      ->check(CLI::IsMember({"partition", "topdeg", "sampled"}));
  find->add_option("--algo", a.algo, "partition algorithm for --method partition")
      ->check(CLI::IsMember({"ep", "density"}));
  find->add_option("--seed", a.seed, "rng seed for --method sampled");
  find->callback([&a] {
    const bcp::Graph g = bcp::parse_graph(std::cin);
    bcp::FoundBiclique f;
    if (a.method == "partition") {
      const bcp::BicliquePartition p =
          a.algo == "ep" ? bcp::partition_ep(g) : bcp::partition_density(g);
      require_verified(bcp::verify_partition(g, p));
      f = bcp::find_from_partition(g, p);
    } else if (a.method == "topdeg") {
      f = bcp::find_topdeg(g);
    } else {
      f = bcp::find_sampled(g, a.seed);
    }
    json j;
    j["method"] = a.method;
    j["t"] = f.t;
    j["a"] = f.a;
    j["b"] = f.b;
    std::cout << j.dump() << "\n";
  });
}

// Stats reads whichever object is on stdin: a graph ("n m ..."), a biclique
// partition ("bp ..."), or a d-clique partition ("dp ...").
void add_stats(CLI::App& app) {
  CLI::App* stats = app.add_subcommand(
      "stats", "summarize the stdin graph or partition: sizes, weight, loads, entropy targets");
  stats->callback([] {
    std::stringstream all;
    all << std::cin.rdbuf();
    std::string tag;
    all >> tag;
    all.clear();
    all.seekg(0);
    json j;
    if (tag == "bp") {
      const bcp::BicliquePartition p = bcp::parse_partition(all);
      const uint64_t m = covered_pairs(p);
      const double gamma = pair_density(p.n, m);
      const double h2 = gamma <= 1.0 ? bcp::binary_entropy(gamma) : 0.0;
      j = theory_record(p);
      j["kind"] = "partition";
      j["members"] = p.items.size();
      j["h2"] = h2;
      if (p.n >= 2) {
        const double lg = std::log2(static_cast<double>(p.n));
        j["target_weight"] = h2 * static_cast<double>(p.n) * p.n / (2.0 * lg);
        j["target_load"] = p.n / (2.0 * lg);
      }
    } else if (tag == "dp") {
      const bcp::DCliquePartition p = bcp::parse_dpartition(all);
      j["kind"] = "dpartition";
      j["n"] = p.n;
      j["d"] = p.d;
      j["members"] = p.items.size();
      j["m"] = covered_tuples(p);
      j["weight"] = bcp::weight(p);
      j["max_load"] = p.n == 0 ? 0 : bcp::max_load(p);
    } else {
      const bcp::Graph g = bcp::parse_graph(all);
      const double gamma = pair_density(g.vertex_count(), g.edge_count());
      const double h2 = bcp::binary_entropy(gamma);
      j["kind"] = "graph";
      j["n"] = g.vertex_count();
      j["m"] = g.edge_count();
      j["gamma"] = gamma;
      j["h2"] = h2;
      if (g.vertex_count() >= 2) {
        const double n = g.vertex_count();
        const double lg = std::log2(n);
        j["target_weight"] = h2 * n * n / (2.0 * lg);
        j["target_load"] = n / (2.0 * lg);
      }
    }
    std::cout << j.dump() << "\n";
  });
}

void add_report_theory(CLI::App& app) {
  CLI::App* rep = app.add_subcommand(
      "report-theory", "ratio record for the stdin partition: measured vs predicted limits");
  rep->callback([] {
    const bcp::BicliquePartition p = bcp::parse_partition(std::cin);
    std::cout << theory_record(p).dump() << "\n";
  });
}

struct BenchArgs {
  std::string suite = "acceptance";
  uint64_t seed = 2026;
  unsigned threads = 0;
};

int run_bench(const BenchArgs& a) {
  bcp::AcceptanceOptions opt;
  opt.seed = a.seed;
  opt.threads = resolve_bench_threads(a.threads);
  opt.log = &std::cerr;
  const std::vector<bcp::CriterionResult> results = bcp::run_acceptance(opt);
  unsigned hard = 0;
  unsigned soft = 0;
  for (const auto& r : results) {
    json j;
    j["criterion"] = r.id;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["soft"] = r.soft;
    j["details"] = r.details;
    json metrics = json::object();
    // Wall-clock fields are excluded so the report is reproducible; the
    // runtime-scaling criterion keeps its ratios, which are its substance.
    for (const auto& [key, value] : r.metrics) {
      if (key != "seconds") metrics[key] = value;
    }
    j["metrics"] = metrics;
    std::cout << j.dump() << "\n";
    if (!r.pass) (r.soft ? soft : hard)++;
  }
  json summary;
  summary["suite"] = a.suite;
  summary["seed"] = a.seed;
  summary["threads"] = opt.threads;
  summary["criteria"] = results.size();
  summary["hard_failures"] = hard;
  summary["soft_warnings"] = soft;
  summary["ok"] = (hard == 0);
  std::cout << summary.dump() << "\n";
  return hard == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biclique partition toolkit: generators, partitioners, compressed "
               "representations, queries, and the acceptance bench"};
  app.require_subcommand(1);

  GenArgs gen_args;
  PartitionArgs part_args;
  std::string dpart_algo = "stepup";
  bool decompress_partition = false;
  QueryArgs query_args;
  double densest_alpha = 2.0;
  FindArgs find_args;
  BenchArgs bench_args;

  add_gen(app, gen_args);
  add_partition(app, part_args);
  add_dpartition(app, dpart_algo);
  add_compress(app);
  add_decompress(app, decompress_partition);
  add_query(app, query_args);
  add_densest(app, densest_alpha);
  add_find(app, find_args);
  add_stats(app);
  add_report_theory(app);

  CLI::App* bench = app.add_subcommand("bench", "run a named suite, one JSON line per criterion");
  bench->add_option("--suite", bench_args.suite, "suite name")
      ->check(CLI::IsMember({"acceptance"}));
  bench->add_option("--seed", bench_args.seed, "master seed for all generated instances");
  bench->add_option("--threads", bench_args.threads,
                    "worker cap, 0 = hardware (BICLIQUE_THREADS caps either way)");

  try {
    app.parse(argc, argv);
    if (bench->parsed()) return run_bench(bench_args);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
