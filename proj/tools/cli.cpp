#include "cli.hpp"

#include <filesystem>
#include <optional>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphtok/analysis.hpp"
#include "graphtok/constructions.hpp"
#include "graphtok/graph_io.hpp"
#include "graphtok/planarity.hpp"
#include "graphtok/spectra.hpp"
#include "graphtok/token_io.hpp"
#include "graphtok/tokenizers.hpp"

namespace graphtok::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20260101;

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes via a temporary file in the same directory and renames it into
// place. "-" writes to `out`.
void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write '" + tmp.string() + "'");
    f << content;
    if (!f.flush()) throw UsageError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw UsageError("cannot move output into '" + path + "': " + ec.message());
}

Graph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const GraphError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

json pair_to_json(const GadgetPair& pair) {
  json j;
  j["g1"] = graph_to_json(pair.g1);
  j["g2"] = graph_to_json(pair.g2);
  j["label"] = pair.label;
  json delta;
  if (pair.claimed.kind == DeltaKind::planarity_flip) {
    delta["kind"] = "planarity_flip";
    delta["switching_set"] = pair.switching_set;
  } else {
    delta["kind"] = "eigenvalue_shift";
    delta["from"] = pair.claimed.eigenvalue_before;
    delta["to"] = pair.claimed.eigenvalue_after;
    delta["triangle_delta"] = pair.claimed.triangle_delta;
    delta["twins"] = {pair.twin_u, pair.twin_v};
  }
  j["claimed_delta"] = std::move(delta);
  return j;
}

GadgetPair load_pair(const std::string& path) {
  const std::string text = read_file(path);
  try {
    const auto j = parse_json_text(text);
    if (!j.is_object() || !j.contains("g1") || !j.contains("g2")) {
      throw ParseError("<root>", "expected an object with g1 and g2");
    }
    GadgetPair pair{graph_from_json(j["g1"], "g1"), graph_from_json(j["g2"], "g2"),
                    j.value("label", std::string("fixture")), {}, -1, -1, {}};
    return pair;
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const GraphError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string default_token_path(const std::string& graph_path, const std::string& family) {
  std::filesystem::path p(graph_path);
  return p.stem().string() + "." + family + ".csv";
}

// "tokens.csv" -> "tokens.csv.json"; never collides with a graph input.
std::string sidecar_path(const std::string& csv_path) { return csv_path + ".json"; }

BitMatrix parse_bits(const std::string& bits, int n, const std::string& flag) {
  if (static_cast<int>(bits.size()) != n * n) {
    throw UsageError(flag + " needs " + std::to_string(n * n) + " row-major bits");
  }
  BitMatrix m(n);
  for (int i = 0; i < n * n; ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw UsageError(flag + " may only contain 0 and 1");
    m.set(i / n, i % n, bits[i] == '1');
  }
  return m;
}

json bits_to_json(const BitMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.size; ++i) {
    json row = json::array();
    for (int j = 0; j < m.size; ++j) row.push_back(m.at(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

LaplacianKind parse_laplacian(const std::string& s) {
  return s == "sym_normalized" ? LaplacianKind::sym_normalized : LaplacianKind::combinatorial;
}

struct TokenizeArgs {
  std::string graph;
  std::string family = "spectral";
  int k = 0;
  std::string which = "smallest";
  std::string laplacian = "combinatorial";
  bool drop_trivial = false;
  int t = 8;
  int d_tr = 16;
  std::uint64_t seed = kDefaultSeed;
  int pad = 0;
  int digits = 17;
  std::string out;
};

struct GenerateArgs {
  std::string kind;
  int n = 0;
  double p = 0.5;
  int count = 10;
  std::uint64_t seed = kDefaultSeed;
  int k = 3;
  int source = -1;
  int target = -1;
  std::string a;
  std::string b;
  std::string out = "-";
};

struct VerifyArgs {
  std::vector<std::string> only;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  bool timings = false;
  std::string gm_pair;
  std::optional<double> gm_tol;
  std::optional<int> gm_max_walk;
  std::optional<int> twin_max_n;
};

struct GraphArgs {
  std::string graph;
  std::string out = "-";
  std::string spectrum_out;
  std::string laplacian = "combinatorial";
};

int cmd_tokenize(const TokenizeArgs& a, const CLI::App& sub, std::ostream& out) {
  const Graph g = load_graph(a.graph);

  SpectralOptions spec;
  if (sub.count("--k") > 0) spec.level = a.k;
  spec.kind = parse_laplacian(a.laplacian);
  spec.which = a.which == "largest" ? EigenSelection::largest : EigenSelection::smallest;
  spec.drop_trivial = a.drop_trivial;

  TokenMatrix tokens;
  try {
    if (a.family == "spectral") {
      tokens = spectral_tokens(g, spec);
    } else if (a.family == "rw") {
      tokens = rw_tokens(g, a.t);
    } else if (a.family == "adjacency") {
      tokens = adjacency_tokens(g);
    } else if (a.family == "adjacency_projected") {
      tokens = adjacency_projected_tokens(g, a.d_tr, a.seed);
    } else {
      const std::vector<TokenMatrix> parts = {spectral_tokens(g, spec), rw_tokens(g, a.t),
                                              adjacency_tokens(g)};
      tokens = combined_tokens(parts);
    }
    if (sub.count("--pad") > 0) tokens = pad_tokens(tokens, a.pad);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const std::string csv_path = a.out.empty() ? default_token_path(a.graph, a.family) : a.out;
  write_output(csv_path, tokens_to_csv(tokens, a.digits), out);
  if (csv_path != "-") {
    write_output(sidecar_path(csv_path), tokens_sidecar(tokens).dump(2) + "\n", out);
    out << "wrote " << tokens.rows() << " x " << tokens.width() << " " << a.family
        << " tokens to " << csv_path << "\n";
  }
  return kSuccess;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  Rng rng(a.seed);
  std::string text;
  try {
    if (a.kind == "gm_pair") {
      text = pair_to_json(planar_gm_pair()).dump() + "\n";
    } else if (a.kind == "bipartite_twin" || a.kind == "clique_join_twin") {
      const int n = a.n > 0 ? a.n : 6;
      const GadgetPair pair =
          a.kind == "bipartite_twin" ? bipartite_twin_pair(n) : clique_join_twin_pair(n);
      text = pair_to_json(pair).dump() + "\n";
    } else if (a.kind == "s5_gadget") {
      if (a.k < 2) throw UsageError("--k (number of permutations) must be >= 2");
      std::vector<Permutation5> perms;
      for (int i = 0; i < a.k; ++i) perms.push_back(random_permutation5(rng));
      const int s = a.source >= 0 ? a.source : std::uniform_int_distribution<int>(0, 4)(rng);
      const int t = a.target >= 0 ? a.target : std::uniform_int_distribution<int>(0, 4)(rng);
      const WalkGadget gadget = s5_walk_gadget(perms, s, t);
      json j;
      j["graph"] = graph_to_json(gadget.graph);
      j["perms"] = perms;
      j["s"] = s;
      j["t"] = t;
      j["layers"] = gadget.layers;
      j["spanning_length"] = gadget.spanning_length;
      j["accepts"] = composition_maps(perms, s, t);
      text = j.dump() + "\n";
    } else if (a.kind == "disjointness") {
      const int n = a.n > 0 ? a.n : 2;
      BitMatrix ma(n);
      BitMatrix mb(n);
      if (!a.a.empty() || !a.b.empty()) {
        ma = parse_bits(a.a, n, "--a");
        mb = parse_bits(a.b, n, "--b");
      } else {
        std::bernoulli_distribution bit(0.5);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            ma.set(i, j, bit(rng));
            mb.set(i, j, bit(rng));
          }
        }
      }
      json j;
      j["graph"] = graph_to_json(disjointness_triangle_gadget(ma, mb));
      j["a"] = bits_to_json(ma);
      j["b"] = bits_to_json(mb);
      j["intersecting"] = disjointness_witness_exists(ma, mb);
      text = j.dump() + "\n";
    } else if (a.kind == "bridge_pairs") {
      Dataset d;
      const int n = a.n > 0 ? a.n : 32;
      for (int i = 0; i < a.count; ++i) {
        const bool connected = i % 2 == 0;
        d.graphs.push_back(bridge_pair_graph(n, a.p, connected, rng));
        d.labels.push_back(connected ? 1 : 0);
      }
      text = serialize_dataset(d);
    } else if (a.kind == "er") {
      Dataset d;
      const int n = a.n > 0 ? a.n : 16;
      for (int i = 0; i < a.count; ++i) {
        d.graphs.push_back(erdos_renyi(n, a.p, rng));
        d.labels.push_back(is_connected(d.graphs.back()) ? 1 : 0);
      }
      text = serialize_dataset(d);
    }
  } catch (const ConstructionError& e) {
    throw UsageError(e.what());
  }
  write_output(a.out, text, out);
  return kSuccess;
}

int cmd_planarity(const GraphArgs& a, std::ostream& out) {
  const PlanarityVerdict v = is_planar(load_graph(a.graph));
  json j;
  j["planar"] = v.planar;
  j["method"] = v.method;
  j["edge_bound_shortcut"] = v.edge_bound_shortcut;
  write_output(a.out, j.dump(2) + "\n", out);
  return kSuccess;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  SuiteConfig config = SuiteConfig::all();
  if (!a.only.empty()) {
    config.groups.clear();
    for (const auto& name : a.only) {
      const auto g = parse_check_group(name);
      if (!g) throw UsageError("unknown check group '" + name + "'");
      config.groups.push_back(*g);
    }
  }
  config.seed = a.seed;
  config.record_timings = a.timings;
  if (!a.gm_pair.empty()) config.gm_pair_override = load_pair(a.gm_pair);
  if (a.gm_tol) config.gm_tol = *a.gm_tol;
  if (a.gm_max_walk) config.gm_max_walk = *a.gm_max_walk;
  if (a.twin_max_n) config.twin_max_n = *a.twin_max_n;

  const VerificationReport report = run_verification_suite(config);
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << "  residual=" << format_double(c.residual, 6);
    if (a.timings) out << "  " << format_double(c.elapsed_ms, 4) << " ms";
    out << "  " << c.detail << "\n";
  }
  out << (report.overall() ? "overall: PASS" : "overall: FAIL") << "\n";
  if (!a.out.empty()) write_output(a.out, report_to_json(report).dump(2) + "\n", out);
  return report.overall() ? kSuccess : kVerificationFailed;
}

int cmd_report(const GraphArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  const PlanarityVerdict v = is_planar(g);
  json j;
  j["n"] = g.n();
  j["edges"] = g.num_edges();
  j["degrees"] = g.degrees();
  j["triangles"] = triangle_count(g);
  j["connected"] = is_connected(g);
  j["planar"] = v.planar;
  j["twin_pairs"] = find_twin_pairs(g).size();
  write_output(a.out, j.dump(2) + "\n", out);

  if (!a.spectrum_out.empty()) {
    const EigenSystem es = laplacian_eigensystem(g, parse_laplacian(a.laplacian));
    std::string csv = "index,eigenvalue\n";
    for (int i = 0; i < es.size(); ++i) {
      csv += std::to_string(i) + "," + format_double(es.values(i)) + "\n";
    }
    write_output(a.spectrum_out, csv, out);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graphtok: graph tokenizations, gadget generators and verification"};
  app.require_subcommand(1);

  const std::vector<std::string> families = {"spectral", "rw", "adjacency", "adjacency_projected",
                                             "combined"};
  const std::vector<std::string> kinds = {"gm_pair", "bipartite_twin", "clique_join_twin",
                                          "s5_gadget", "disjointness", "bridge_pairs", "er"};
  const std::vector<std::string> laplacians = {"combinatorial", "sym_normalized"};

  TokenizeArgs ta;
  auto* tok = app.add_subcommand("tokenize", "Write a token matrix as CSV plus JSON sidecar");
  tok->add_option("graph", ta.graph, "Graph JSON file")->required();
  tok->add_option("--family", ta.family, "Tokenization family")->check(CLI::IsMember(families));
  tok->add_option("--k", ta.k, "Spectral level (default: full)");
  tok->add_option("--which", ta.which, "Spectral selection")
      ->check(CLI::IsMember({"smallest", "largest"}));
  tok->add_option("--laplacian", ta.laplacian, "Laplacian kind")->check(CLI::IsMember(laplacians));
  tok->add_flag("--drop-trivial", ta.drop_trivial, "Drop the smallest eigenpair");
  tok->add_option("--t", ta.t, "Random-walk length");
  tok->add_option("--d-tr", ta.d_tr, "Projection dimension");
  tok->add_option("--seed", ta.seed, "Projection seed");
  tok->add_option("--pad", ta.pad, "Zero-pad to this width");
  tok->add_option("--digits", ta.digits, "Significant digits in the CSV")
      ->check(CLI::Range(1, 17));
  tok->add_option("--out", ta.out, "CSV path ('-' for stdout)");

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "Emit a gadget or a synthetic dataset as JSON");
  gen->add_option("kind,--kind", ga.kind, "What to generate")->check(CLI::IsMember(kinds));
  gen->add_option("--n", ga.n, "Node count / matrix size");
  gen->add_option("--p", ga.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--count", ga.count, "Graphs in a dataset")->check(CLI::PositiveNumber);
  gen->add_option("--seed", ga.seed, "Random seed");
  gen->add_option("--k", ga.k, "Permutations in the S5 word");
  gen->add_option("--source", ga.source, "S5 gadget start index")->check(CLI::Range(0, 4));
  gen->add_option("--target", ga.target, "S5 gadget end index")->check(CLI::Range(0, 4));
  gen->add_option("--a", ga.a, "Disjointness matrix a, row-major bits");
  gen->add_option("--b", ga.b, "Disjointness matrix b, row-major bits");
  gen->add_option("--out", ga.out, "Output path ('-' for stdout)");

  GraphArgs pa;
  auto* plan = app.add_subcommand("planarity", "Left-right planarity verdict as JSON");
  plan->add_option("graph", pa.graph, "Graph JSON file")->required();
  plan->add_option("--out", pa.out, "Output path ('-' for stdout)");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run the construction verification suite");
  ver->add_option("--only", va.only, "Comma-separated groups: t4,t1,lemma,t3,t5,t7,rw")
      ->delimiter(',');
  ver->add_option("--seed", va.seed, "Suite seed");
  ver->add_option("--out", va.out, "Report JSON path");
  ver->add_flag("--timings", va.timings, "Record elapsed_ms per check");
  ver->add_option("--gm-pair", va.gm_pair, "Pair JSON replacing the built-in GM pair");
  ver->add_option("--gm-tol", va.gm_tol, "Tolerance for RW token equality (default 1e-10)")
      ->check(CLI::PositiveNumber);
  ver->add_option("--gm-max-walk", va.gm_max_walk, "Longest walk compared (default 24)")
      ->check(CLI::Range(1, 200));
  ver->add_option("--twin-max-n", va.twin_max_n, "Largest twin-pair size (default 64)")
      ->check(CLI::Range(5, 512));

  GraphArgs ra;
  auto* rep = app.add_subcommand("report", "Summary statistics of one graph");
  rep->add_option("graph", ra.graph, "Graph JSON file")->required();
  rep->add_option("--out", ra.out, "Output path ('-' for stdout)");
  rep->add_option("--spectrum-out", ra.spectrum_out, "Write Laplacian eigenvalues as CSV");
  rep->add_option("--laplacian", ra.laplacian, "Laplacian kind")->check(CLI::IsMember(laplacians));

  std::vector<const char*> argv = {"graphtok"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (tok->parsed()) return cmd_tokenize(ta, *tok, out);
    if (gen->parsed()) {
      if (ga.kind.empty()) throw UsageError("generate needs a kind");
      return cmd_generate(ga, out);
    }
    if (plan->parsed()) return cmd_planarity(pa, out);
    if (ver->parsed()) return cmd_verify(va, out);
    if (rep->parsed()) return cmd_report(ra, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace graphtok::cli
