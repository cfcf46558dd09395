// Copyright 2026 The FairCC Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "faircc/cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string_view>

#include "faircc/error.h"
#include "faircc/experiment.h"
#include "faircc/faircc.h"
#include "faircc/ingest.h"
#include "faircc/io.h"
#include "faircc/oracle.h"
#include "faircc/random.h"

namespace faircc {

namespace {

int ParsePositive(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(text) +
                     "': expected a positive integer");
  }
  return value;
}

std::string FormatFactor(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

// Every subcommand's options live here; CLI11 binds to the fields.
struct Options {
  // shared
  std::string graph_path;
  std::string colors_path;
  std::vector<std::string> ratios;
  std::vector<std::string> bounds;
  int base = 0;
  std::uint64_t seed = 0;
  int restarts = kDefaultRestarts;
  bool try_every_base = false;
  std::string dataset = "graph";
  bool timing = false;

  // ingest
  std::string csv_path;
  std::string schema_path;
  double tau = 0.5;
  int sample = 0;
  std::string balance;
  std::string out_graph;
  std::string out_colors;

  // cluster
  std::string algo = "faircc";
  std::string out_clustering;
  std::string out_result;
  std::string debug_dump;

  // experiment
  std::string algos = "cc,wmatch,ufaircc,ccmerge,faircc";
  int runs = 5;
  int jobs = 1;
  std::string out_csv;
  std::string out_dir;

  // verify / gen
  bool mirror_flag = false;
  std::string mirror_path;
  int random_count = 0;
  int max_n = 8;
  int random_n = 0;
  double negative_probability = 0.5;
  std::string color_counts;
};

void AddSpecOptions(CLI::App* sub, Options& o) {
  sub->add_option("--ratio", o.ratios,
                  "exact ratio 1:p, once per non-base color or once for all");
  sub->add_option("--bounds", o.bounds,
                  "ratio interval 1:p..1:q, once per non-base color or once "
                  "for all");
  sub->add_option("--base", o.base, "base color id")->capture_default_str();
}

struct Instance {
  SignedCompleteGraph graph{1};
  ColorAssignment colors;
};

Instance LoadInstance(const Options& o) {
  Instance inst{ReadGraphJson(o.graph_path), ReadColorsCsv(o.colors_path)};
  if (inst.colors.num_vertices() != inst.graph.num_vertices()) {
    throw InvalidInputError(
        o.colors_path + " has " + std::to_string(inst.colors.num_vertices()) +
        " vertices but " + o.graph_path + " has " +
        std::to_string(inst.graph.num_vertices()));
  }
  return inst;
}

FairnessSpec RequireSpec(const Options& o, const ColorAssignment& colors) {
  auto spec = SpecFromFlags(o.ratios, o.bounds, o.base, colors);
  if (!spec) {
    throw InfeasibleError(
        "global color counts are not integral multiples of the base color; "
        "pass --ratio or --bounds");
  }
  spec->CheckFeasible(colors);
  return *spec;
}

std::vector<Algorithm> ParseAlgorithmList(const std::string& text) {
  std::vector<Algorithm> algos;
  std::stringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    const auto algo = ParseAlgorithm(name);
    if (!algo) throw ParseError("unknown algorithm '" + name + "'");
    algos.push_back(*algo);
  }
  if (algos.empty()) throw ParseError("empty algorithm list");
  return algos;
}

// ---------------------------------------------------------------------------

int CmdIngest(const Options& o, std::ostream& out) {
  const Schema schema = Schema::Read(o.schema_path);
  LoadReport report = LoadCsv(o.csv_path, schema);
  TabularDataset ds = std::move(report.dataset);
  if (o.sample > 0) {
    std::optional<std::vector<int>> balance;
    if (!o.balance.empty()) balance = ParseWeights(o.balance);
    ds = Sample(ds, o.sample, o.seed, balance);
  }
  SimilarityConfig cfg;
  cfg.tau = o.tau;
  const IngestedGraph ingested = BuildGraph(ds, cfg);
  WriteGraphJson(o.out_graph, ingested.graph);
  WriteColorsCsv(o.out_colors, ingested.colors);

  out << "rows " << ds.num_rows() << " dropped " << report.dropped << "\n";
  for (std::size_t c = 0; c < ingested.color_names.size(); ++c) {
    out << "color " << c << " = " << ingested.color_names[c] << " ("
        << ingested.colors.count(static_cast<ColorId>(c)) << ")\n";
  }
  return 0;
}

int CmdCluster(const Options& o, std::ostream& out) {
  const Instance inst = LoadInstance(o);
  const auto algo = ParseAlgorithm(o.algo);
  if (!algo) throw ParseError("unknown algorithm '" + o.algo + "'");

  FairnessSpec spec;
  if (GuaranteesFairness(*algo)) {
    spec = RequireSpec(o, inst.colors);
  } else if (auto inferred =
                 SpecFromFlags(o.ratios, o.bounds, o.base, inst.colors)) {
    spec = *inferred;
  }

  RunOptions options;
  options.restarts = o.restarts;
  options.try_every_base = o.try_every_base;
  const auto start = std::chrono::steady_clock::now();
  const Clustering c =
      RunAlgorithm(*algo, inst.graph, inst.colors, spec, o.seed, options);
  const auto stop = std::chrono::steady_clock::now();
  const std::int64_t millis =
      o.timing
          ? std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
                .count()
          : 0;
  const ResultRow row = MakeResultRow(o.dataset, *algo, o.seed, inst.graph,
                                      inst.colors, spec, c, millis);

  if (!o.out_clustering.empty()) WriteClusteringJson(o.out_clustering, c);
  if (!o.out_result.empty()) {
    WriteTextFile(o.out_result, DumpJson(ResultRowToJson(row)));
  }
  if (!o.debug_dump.empty()) {
    if (spec.num_colors() == 0) {
      throw InvalidInputError("--debug-dump needs a fairness spec");
    }
    const MatchingCost kind = *algo == Algorithm::kUFairCC
                                  ? MatchingCost::kUnit
                                  : MatchingCost::kPairCost;
    WriteTextFile(o.debug_dump, DumpJson(MatchingsToJson(ComputeFairMatchings(
                                    inst.graph, inst.colors, spec, kind))));
  }
  out << kResultCsvHeader << "\n" << ResultRowCsv(row) << "\n";
  return 0;
}

int CmdExperiment(const Options& o, std::ostream& out, std::ostream& err) {
  Instance inst = LoadInstance(o);
  ExperimentPlan plan;
  plan.dataset = o.dataset;
  plan.algorithms = ParseAlgorithmList(o.algos);
  bool needs_spec = false;
  for (Algorithm a : plan.algorithms) needs_spec |= GuaranteesFairness(a);
  if (needs_spec) {
    plan.spec = RequireSpec(o, inst.colors);
  } else if (auto inferred =
                 SpecFromFlags(o.ratios, o.bounds, o.base, inst.colors)) {
    plan.spec = *inferred;
  }
  plan.graph = std::move(inst.graph);
  plan.colors = std::move(inst.colors);
  plan.seed = o.seed;
  plan.runs = o.runs;
  plan.jobs = o.jobs;
  plan.options.restarts = o.restarts;
  plan.options.try_every_base = o.try_every_base;
  plan.record_time = o.timing;

  const ExperimentResult result = RunExperiment(plan);
  const std::string csv = ExperimentCsv(result, plan);
  if (o.out_csv.empty()) {
    out << csv;
  } else {
    WriteTextFile(o.out_csv, csv);
  }
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
      const ResultRow& row = result.rows[i];
      const std::string stem = o.out_dir + "/" + row.algo + "_seed" +
                               std::to_string(row.seed);
      WriteClusteringJson(stem + ".clustering.json", result.clusterings[i]);
      WriteTextFile(stem + ".result.json", DumpJson(ResultRowToJson(row)));
    }
  }
  for (const std::string& f : result.failures) err << "FAILED: " << f << "\n";
  return result.failures.empty() ? 0 : 1;
}

// Prints every checked inequality for one instance. Returns the number of
// violations.
int VerifyInstance(const SignedCompleteGraph& g, const ColorAssignment& colors,
                   const FairnessSpec& spec, const Options& o,
                   const OracleLimit& limit, std::ostream& out) {
  int violations = 0;
  auto report = [&](const std::string& lhs, std::int64_t lv,
                    const std::string& rhs, double rv) {
    const bool ok = static_cast<double>(lv) <= rv;
    if (!ok) ++violations;
    out << "  " << lhs << " = " << lv << " <= " << rhs << " = "
        << FormatFactor(rv) << "  " << (ok ? "ok" : "VIOLATED") << "\n";
  };

  const MatchingBoundCheck check =
      CheckMatchingWeightBounds(g, colors, spec, limit);
  out << "  OPT_fair = " << check.opt_fair << "\n";
  for (std::size_t i = 0; i < check.colors.size(); ++i) {
    report("w(M_" + std::to_string(check.colors[i]) + ")", check.weights[i],
           std::to_string(check.factors[i]) + " * OPT_fair",
           static_cast<double>(check.factors[i] * check.opt_fair));
  }

  FairCCConfig config;
  config.spec = spec;
  config.pivot.seed = PivotSeedFor(o.seed);
  config.pivot.restarts = o.restarts;
  const Clustering c = FairCorrelationClustering(g, colors, config);
  const double factor = ApproximationFactor(spec);
  report("cost(faircc)", Disagreements(g, c),
         FormatFactor(factor) + " * OPT_fair",
         factor * static_cast<double>(check.opt_fair));
  return violations;
}

int VerifyMirror(const SignedCompleteGraph& g, const OracleLimit& limit,
                 std::ostream& out) {
  const OracleResult base = OptimalClustering(g, limit);
  const MirrorInstance mirror = MirrorGraph(g);
  const OracleResult fair = OptimalFairClustering(
      mirror.graph, mirror.colors, FairnessSpec::TwoColor(1), limit);
  const bool ok = fair.value == 4 * base.value;
  out << "  OPT(G) = " << base.value << "\n"
      << "  OPT_fair(mirror(G), 1:1) = " << fair.value
      << " == 4 * OPT(G) = " << 4 * base.value << "  "
      << (ok ? "ok" : "VIOLATED") << "\n";
  return ok ? 0 : 1;
}

// Random sweep over three instance families: two colors 1:1, two colors
// 1:2 and three colors 1:1:1.
int VerifyRandom(const Options& o, const OracleLimit& limit,
                 std::ostream& out) {
  if (o.max_n < 3) throw InvalidInputError("--max-n must be >= 3");
  Rng rng(o.seed);
  int violations = 0;
  for (int i = 0; i < o.random_count; ++i) {
    std::vector<int> counts;
    FairnessSpec spec;
    switch (i % 3) {
      case 0: {
        const int b = 1 + static_cast<int>(rng.Uniform(o.max_n / 2));
        counts = {b, b};
        spec = FairnessSpec::TwoColor(1);
        break;
      }
      case 1: {
        const int b = 1 + static_cast<int>(rng.Uniform(o.max_n / 3));
        counts = {b, 2 * b};
        spec = FairnessSpec::TwoColor(2);
        break;
      }
      default: {
        const int b = 1 + static_cast<int>(rng.Uniform(o.max_n / 3));
        counts = {b, b, b};
        spec = FairnessSpec::Exact(0, {1, 1, 1});
        break;
      }
    }
    const ColorAssignment colors = RandomColoring(counts, rng);
    const SignedCompleteGraph g =
        RandomSignedGraph(colors.num_vertices(), rng.UniformReal(), rng);
    out << "instance " << i << ": n=" << g.num_vertices()
        << " colors=" << colors.num_colors() << " spec=" << spec.ToString()
        << "\n";
    violations += VerifyInstance(g, colors, spec, o, limit, out);
  }
  out << "violations " << violations << " / " << o.random_count
      << " instances\n";
  return violations == 0 ? 0 : 1;
}

int CmdVerify(const Options& o, std::ostream& out) {
  const OracleLimit limit = OracleLimit::FromEnvironment();
  if (o.random_count > 0) return VerifyRandom(o, limit, out);
  if (o.graph_path.empty()) {
    throw InvalidInputError("verify needs --graph or --random");
  }
  if (o.mirror_flag) {
    const SignedCompleteGraph g = ReadGraphJson(o.graph_path);
    out << "mirror identity, n=" << g.num_vertices() << "\n";
    return VerifyMirror(g, limit, out);
  }
  if (o.colors_path.empty()) {
    throw InvalidInputError("verify needs --colors unless --mirror is set");
  }
  const Instance inst = LoadInstance(o);
  const FairnessSpec spec = RequireSpec(o, inst.colors);
  out << "instance: n=" << inst.graph.num_vertices()
      << " colors=" << inst.colors.num_colors() << " spec=" << spec.ToString()
      << "\n";
  const int violations =
      VerifyInstance(inst.graph, inst.colors, spec, o, limit, out);
  return violations == 0 ? 0 : 1;
}

int CmdGen(const Options& o, std::ostream& out) {
  if (!o.mirror_path.empty()) {
    const MirrorInstance mirror = MirrorGraph(ReadGraphJson(o.mirror_path));
    WriteGraphJson(o.out_graph, mirror.graph);
    WriteColorsCsv(o.out_colors, mirror.colors);
    out << "mirror instance n=" << mirror.graph.num_vertices() << "\n";
    return 0;
  }
  if (o.random_n < 1) throw InvalidInputError("gen needs --mirror or --random");
  std::vector<int> counts;
  if (o.color_counts.empty()) {
    counts = {o.random_n - o.random_n / 2, o.random_n / 2};
    if (counts[1] == 0) counts.pop_back();
  } else {
    counts = ParseWeights(o.color_counts);
    int total = 0;
    for (int c : counts) total += c;
    if (total != o.random_n) {
      throw InvalidInputError("--color-counts must sum to --random");
    }
  }
  if (o.negative_probability < 0.0 || o.negative_probability > 1.0) {
    throw InvalidInputError("--negative-prob must lie in [0, 1]");
  }
  Rng rng(o.seed);
  const ColorAssignment colors = RandomColoring(counts, rng);
  const SignedCompleteGraph g =
      RandomSignedGraph(o.random_n, o.negative_probability, rng);
  WriteGraphJson(o.out_graph, g);
  WriteColorsCsv(o.out_colors, colors);
  out << "random instance n=" << g.num_vertices() << "\n";
  return 0;
}

}  // namespace

int ParseRatio(const std::string& text) {
  if (text.rfind("1:", 0) != 0) {
    throw ParseError("bad ratio '" + text + "': expected 1:p");
  }
  return ParsePositive(std::string_view(text).substr(2), "ratio");
}

RatioBound ParseBounds(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    throw ParseError("bad bounds '" + text + "': expected 1:p..1:q");
  }
  const int lo = ParseRatio(text.substr(0, dots));
  const int hi = ParseRatio(text.substr(dots + 2));
  if (lo > hi) {
    throw ParseError("bad bounds '" + text + "': lower ratio exceeds upper");
  }
  return {lo, hi};
}

std::vector<int> ParseWeights(const std::string& text) {
  std::vector<int> weights;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    weights.push_back(ParsePositive(
        std::string_view(text).substr(start, colon == std::string::npos
                                                 ? std::string::npos
                                                 : colon - start),
        "weight"));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  return weights;
}

std::optional<FairnessSpec> SpecFromFlags(
    const std::vector<std::string>& ratios,
    const std::vector<std::string>& bounds, ColorId base,
    const ColorAssignment& colors) {
  const int k = colors.num_colors();
  if (base < 0 || base >= k) {
    throw InvalidInputError("--base " + std::to_string(base) +
                            " is not a color id");
  }
  if (!ratios.empty() && !bounds.empty()) {
    throw InvalidInputError("--ratio and --bounds are mutually exclusive");
  }
  const std::vector<std::string>& given = ratios.empty() ? bounds : ratios;
  std::vector<RatioBound> per_color(k);
  if (given.empty()) {
    const int nb = colors.count(base);
    for (ColorId c = 0; c < k; ++c) {
      if (c == base) continue;
      if (colors.count(c) % nb != 0 || colors.count(c) < nb) {
        return std::nullopt;
      }
      const int p = colors.count(c) / nb;
      per_color[c] = {p, p};
    }
    return FairnessSpec(base, std::move(per_color));
  }

  if (given.size() != 1 && static_cast<int>(given.size()) != k - 1) {
    throw InvalidInputError("expected 1 or " + std::to_string(k - 1) +
                            " ratio values, got " +
                            std::to_string(given.size()));
  }
  std::size_t next = 0;
  for (ColorId c = 0; c < k; ++c) {
    if (c == base) continue;
    const std::string& text = given[given.size() == 1 ? 0 : next++];
    if (ratios.empty()) {
      per_color[c] = ParseBounds(text);
    } else {
      const int p = ParseRatio(text);
      per_color[c] = {p, p};
    }
  }
  return FairnessSpec(base, std::move(per_color));
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Fair correlation clustering on signed complete graphs",
               "faircc"};
  app.require_subcommand(1);

  CLI::App* ingest = app.add_subcommand("ingest", "CSV to signed graph");
  ingest->add_option("--csv", o.csv_path)->required();
  ingest->add_option("--schema", o.schema_path)->required();
  ingest->add_option("--tau", o.tau, "similarity threshold")
      ->capture_default_str();
  ingest->add_option("--sample", o.sample, "rows to sample (0 keeps all)");
  ingest->add_option("--seed", o.seed);
  ingest->add_option("--balance", o.balance,
                     "sample weights per protected value, e.g. 1:2");
  ingest->add_option("--out-graph", o.out_graph)->required();
  ingest->add_option("--out-colors", o.out_colors)->required();

  CLI::App* cluster = app.add_subcommand("cluster", "run one algorithm");
  cluster->add_option("--graph", o.graph_path)->required();
  cluster->add_option("--colors", o.colors_path)->required();
  cluster->add_option("--algo", o.algo, "cc|wmatch|ufaircc|ccmerge|faircc")
      ->capture_default_str();
  AddSpecOptions(cluster, o);
  cluster->add_option("--seed", o.seed);
  cluster->add_option("--restarts", o.restarts)->capture_default_str();
  cluster->add_flag("--try-every-base", o.try_every_base);
  cluster->add_option("--dataset", o.dataset)->capture_default_str();
  cluster->add_option("--out-clustering", o.out_clustering);
  cluster->add_option("--out-result", o.out_result);
  cluster->add_option("--debug-dump", o.debug_dump,
                      "write cost tables and matchings as JSON");
  cluster->add_flag("--timing", o.timing, "record wall time in millis");

  CLI::App* experiment =
      app.add_subcommand("experiment", "algorithm x seed matrix");
  experiment->add_option("--graph", o.graph_path)->required();
  experiment->add_option("--colors", o.colors_path)->required();
  experiment->add_option("--algos", o.algos)->capture_default_str();
  AddSpecOptions(experiment, o);
  experiment->add_option("--seed", o.seed);
  experiment->add_option("--runs", o.runs)->capture_default_str();
  experiment->add_option("--jobs", o.jobs)->capture_default_str();
  experiment->add_option("--restarts", o.restarts)->capture_default_str();
  experiment->add_flag("--try-every-base", o.try_every_base);
  experiment->add_option("--dataset", o.dataset)->capture_default_str();
  experiment->add_option("--out", o.out_csv, "CSV path (stdout if unset)");
  experiment->add_option("--out-dir", o.out_dir,
                         "per-run clustering and result files");
  experiment->add_flag("--timing", o.timing, "record wall time in millis");

  CLI::App* verify =
      app.add_subcommand("verify", "check bounds against the oracle");
  verify->add_option("--graph", o.graph_path);
  verify->add_option("--colors", o.colors_path);
  AddSpecOptions(verify, o);
  verify->add_flag("--mirror", o.mirror_flag,
                   "check OPT_fair(mirror(G)) == 4 OPT(G)");
  verify->add_option("--random", o.random_count, "random instances to sweep");
  verify->add_option("--max-n", o.max_n)->capture_default_str();
  verify->add_option("--seed", o.seed);
  verify->add_option("--restarts", o.restarts)->capture_default_str();

  CLI::App* gen = app.add_subcommand("gen", "generate instances");
  gen->add_option("--mirror", o.mirror_path, "graph to mirror");
  gen->add_option("--random", o.random_n, "random instance size");
  gen->add_option("--negative-prob", o.negative_probability)
      ->capture_default_str();
  gen->add_option("--color-counts", o.color_counts, "e.g. 3:3");
  gen->add_option("--seed", o.seed);
  gen->add_option("--out-graph", o.out_graph)->required();
  gen->add_option("--out-colors", o.out_colors)->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : ExitCodeFor(ErrorKind::kParse);
  }

  try {
    if (ingest->parsed()) return CmdIngest(o, out);
    if (cluster->parsed()) return CmdCluster(o, out);
    if (experiment->parsed()) return CmdExperiment(o, out, err);
    if (verify->parsed()) return CmdVerify(o, out);
    if (gen->parsed()) return CmdGen(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace faircc
