// Copyright 2026 The active-scan Authors.
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

#include "active_scan/commands.h"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "active_scan/csv.h"
#include "active_scan/errors.h"
#include "active_scan/graph_io.h"
#include "active_scan/monte_carlo.h"
#include "active_scan/pipeline.h"
#include "active_scan/sbm.h"
#include "json.hpp"

namespace active_scan {
namespace {

using Json = nlohmann::ordered_json;

std::ofstream OpenOutput(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

double Milliseconds(std::chrono::steady_clock::duration d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

struct CommonOptions {
  unsigned workers = 1;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
};

struct SbmSource {
  bool paper = false;
  std::string params_path;

  SBMParams Load() const {
    if (paper && !params_path.empty()) {
      throw std::invalid_argument("use either --paper or --params, not both");
    }
    if (paper) return paper_params();
    if (params_path.empty()) {
      throw std::invalid_argument("one of --paper or --params is required");
    }
    return sbm_params_from_json(ReadFile(params_path));
  }
};

void AddWorkers(CLI::App* cmd, CommonOptions& common) {
  common.workers = default_workers();
  cmd->add_option("--workers", common.workers, "Worker threads")
      ->envname("ACTIVE_SCAN_THREADS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void AddFormat(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

// ---- detect ----------------------------------------------------------------

struct DetectArgs {
  std::string input;
  std::string sigma = "auto";
  std::string clusters = "auto";
  std::string gap_rule = "relative";
  std::size_t memory_budget_mb = 512;
  PipelineConfig config;
  CommonOptions common;
};

void RunDetect(DetectArgs& args, std::ostream& out) {
  PipelineConfig& config = args.config;
  config.input = args.input;
  config.workers = args.common.workers;
  config.seed = args.common.seed;
  config.out_dir = args.common.out;
  config.memory_budget_bytes = args.memory_budget_mb << 20;
  config.gap_rule = parse_gap_rule(args.gap_rule);
  if (args.sigma != "auto") config.sigma = ParseDouble(args.sigma);
  if (args.clusters != "auto") config.clusters = ParseUnsigned(args.clusters);
  config.Validate();

  const LoadedGraph loaded = load_graph(config.input);
  const DetectResult result = run_detect(loaded.graph, config);
  write_detect_outputs(result, loaded.original_ids, config);
  Json summary;
  summary["command"] = "detect";
  summary["q"] = result.q;
  summary["num_clusters"] = result.clustering.num_clusters;
  summary["out"] = config.out_dir.string();
  out << summary.dump() << "\n";
}

// ---- topq ------------------------------------------------------------------

struct TopqArgs {
  std::string input;
  std::size_t q = 2000;
  unsigned k = 1;
  bool omit_timing = false;
  CommonOptions common;
};

void RunTopq(const TopqArgs& args, std::ostream& out) {
  const LoadedGraph loaded = load_graph(args.input);
  const auto start = std::chrono::steady_clock::now();
  const TopQResult top =
      select_top_q(loaded.graph, args.q, args.k, args.common.workers);
  const double wall_ms = Milliseconds(std::chrono::steady_clock::now() - start);
  auto original = [&](VertexId v) {
    return loaded.original_ids.empty() ? std::uint64_t{v} : loaded.original_ids[v];
  };

  std::ofstream file;
  if (!args.common.out.empty()) file = OpenOutput(args.common.out);
  std::ostream& sink = args.common.out.empty() ? out : file;
  if (args.common.format == "json") {
    Json j;
    j["Q"] = args.q;
    j["k"] = args.k;
    j["workers"] = args.common.workers;
    j["computed_count"] = top.computed_count;
    j["est1_count"] = top.est1_count;
    j["est2_count"] = top.est2_count;
    j["scans"] = top.scans;
    if (!args.omit_timing) j["wall_ms"] = wall_ms;
    Json entries = Json::array();
    for (const ScoredVertex& e : top.entries) {
      entries.push_back({{"vertex", original(e.vertex)}, {"psi", e.value}});
    }
    j["entries"] = std::move(entries);
    sink << j.dump(2) << "\n";
  } else {
    sink << "# Q=" << args.q << "\n# k=" << args.k
         << "\n# workers=" << args.common.workers
         << "\n# computed_count=" << top.computed_count
         << "\n# est1_count=" << top.est1_count
         << "\n# est2_count=" << top.est2_count << "\n# scans=" << top.scans
         << "\n";
    if (!args.omit_timing) sink << "# wall_ms=" << FormatDouble(wall_ms) << "\n";
    CsvWriter csv(sink);
    csv.Row({"vertex", "psi"});
    for (const ScoredVertex& e : top.entries) {
      csv.Row({std::to_string(original(e.vertex)), std::to_string(e.value)});
    }
  }
}

// ---- sbm -------------------------------------------------------------------

struct SbmArgs {
  SbmSource source;
  CommonOptions common;
  bool seed_given = false;
};

void RunSbm(const SbmArgs& args, std::ostream& out) {
  SBMParams params = args.source.Load();
  if (args.seed_given || args.source.paper) params.seed = args.common.seed;
  const LabeledGraph sample = generate_sbm(params);
  const std::filesystem::path dir = args.common.out;
  std::filesystem::create_directories(dir);
  {
    auto file = OpenOutput(dir / "edges.txt");
    write_edge_list(file, sample.graph);
  }
  {
    auto file = OpenOutput(dir / "labels.csv");
    CsvWriter csv(file);
    csv.Row({"vertex", "block"});
    for (std::size_t v = 0; v < sample.labels.size(); ++v) {
      csv.Row({std::to_string(v), std::to_string(sample.labels[v])});
    }
  }
  {
    auto file = OpenOutput(dir / "params.json");
    file << sbm_params_to_json(params) << "\n";
  }
  Json summary;
  summary["command"] = "sbm";
  summary["n"] = sample.graph.num_vertices();
  summary["m"] = sample.graph.num_edges();
  summary["expected_m"] = expected_edge_count(params);
  summary["out"] = dir.string();
  out << summary.dump() << "\n";
}

// ---- eval ------------------------------------------------------------------

struct EvalArgs {
  std::string mode;
  SbmSource source;
  std::size_t runs = 200;
  unsigned k = 1;
  std::string q_values = "61,70,75,100,150,200";
  std::size_t max_clusters = 8;
  unsigned similarity_k = 1;
  std::string gap_rule = "relative";
  CommonOptions common;
};

void RunEval(const EvalArgs& args, std::ostream& out) {
  if (args.runs == 0) throw std::invalid_argument("--runs must be >= 1");
  const SBMParams params = args.source.Load();
  const std::filesystem::path dir = args.common.out;
  std::filesystem::create_directories(dir);
  const bool json = args.common.format == "json";
  Json summary;
  summary["command"] = "eval";
  summary["mode"] = args.mode;
  if (args.mode == "roc") {
    const RocSummary roc = monte_carlo_roc(params, args.runs, args.k,
                                           args.common.seed, args.common.workers);
    if (json) {
      Json j;
      j["k"] = roc.k;
      j["runs"] = args.runs;
      j["seed"] = args.common.seed;
      j["mean_auc"] = roc.mean_auc;
      j["fpr"] = roc.fpr;
      j["mean_tpr"] = roc.mean_tpr;
      j["auc"] = roc.aucs;
      auto file = OpenOutput(dir / "roc.json");
      file << j.dump(2) << "\n";
    } else {
      auto curve = OpenOutput(dir / "roc.csv");
      write_roc_csv(curve, roc);
      auto aucs = OpenOutput(dir / "auc.csv");
      write_auc_csv(aucs, roc);
    }
    summary["mean_auc"] = roc.mean_auc;
  } else {
    AriOptions options;
    options.max_clusters = args.max_clusters;
    options.similarity_k = args.similarity_k;
    options.gap_rule = parse_gap_rule(args.gap_rule);
    options.workers = args.common.workers;
    const AriSummary ari = monte_carlo_ari(params, args.runs, args.k,
                                           parse_q_values(args.q_values),
                                           args.common.seed, options);
    if (json) {
      Json j;
      j["k"] = args.k;
      j["runs"] = args.runs;
      j["seed"] = args.common.seed;
      j["q_values"] = ari.q_values;
      j["mean"] = ari.mean;
      j["sd"] = ari.sd;
      Json rows = Json::array();
      for (const AriRow& r : ari.rows) {
        rows.push_back({{"run_id", r.run}, {"Q", r.q}, {"ari", r.ari},
                        {"clusters", r.clusters}});
      }
      j["rows"] = std::move(rows);
      auto file = OpenOutput(dir / "ari.json");
      file << j.dump(2) << "\n";
    } else {
      auto runs = OpenOutput(dir / "ari_runs.csv");
      write_ari_runs_csv(runs, ari);
      auto table = OpenOutput(dir / "ari_summary.csv");
      write_ari_summary_csv(table, ari);
    }
    summary["q_values"] = ari.q_values;
    summary["mean_ari"] = ari.mean;
  }
  out << summary.dump() << "\n";
}

// ---- bench-trim ------------------------------------------------------------

struct BenchArgs {
  std::string input;
  std::string q_values;
  CommonOptions common;
};

void RunBench(const BenchArgs& args, std::ostream& out) {
  const std::vector<std::size_t> qs = parse_q_values(args.q_values);
  for (std::size_t i = 1; i < qs.size(); ++i) {
    if (qs[i] < qs[i - 1]) {
      throw std::invalid_argument("--q-values must be ascending");
    }
  }
  const LoadedGraph loaded = load_graph(args.input);
  std::ofstream file;
  if (!args.common.out.empty()) file = OpenOutput(args.common.out);
  std::ostream& sink = args.common.out.empty() ? out : file;
  CsvWriter csv(sink);
  csv.Row({"Q", "wall_ms", "computed_count", "est1_count", "est2_count"});
  for (std::size_t q : qs) {
    const auto start = std::chrono::steady_clock::now();
    const TopQResult top = topq_lstat_parallel(loaded.graph, q, args.common.workers);
    const double wall_ms = Milliseconds(std::chrono::steady_clock::now() - start);
    csv.Row({std::to_string(q), FormatDouble(wall_ms),
             std::to_string(top.computed_count), std::to_string(top.est1_count),
             std::to_string(top.est2_count)});
  }
}

int ReportError(std::ostream& err, const std::string& command,
                const std::string& kind, const std::string& message,
                const std::string& input, int code) {
  Json j;
  j["error"] = message;
  j["kind"] = kind;
  if (!command.empty()) j["command"] = command;
  if (!input.empty()) j["input"] = input;
  err << j.dump() << "\n";
  return code;
}

}  // namespace

unsigned default_workers() {
  if (const char* env = std::getenv("ACTIVE_SCAN_THREADS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::size_t> parse_q_values(std::string_view text) {
  std::vector<std::size_t> values;
  auto number = [&](std::string_view field) -> std::size_t {
    try {
      return ParseUnsigned(field);
    } catch (const ParseError&) {
      throw std::invalid_argument("bad Q value '" + std::string(field) + "'");
    }
  };
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
    const std::size_t c1 = item.find(':');
    if (c1 == std::string_view::npos) {
      values.push_back(number(item));
      continue;
    }
    const std::string_view rest = item.substr(c1 + 1);
    const std::size_t c2 = rest.find(':');
    const std::size_t start = number(item.substr(0, c1));
    const std::size_t stop = number(rest.substr(0, c2));
    const std::size_t step =
        c2 == std::string_view::npos ? 1 : number(rest.substr(c2 + 1));
    if (step == 0 || stop < start) {
      throw std::invalid_argument("bad Q range '" + std::string(item) + "'");
    }
    for (std::size_t q = start; q <= stop; q += step) values.push_back(q);
  }
  if (values.empty()) throw std::invalid_argument("no Q values given");
  return values;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Active community detection in large directed graphs"};
  app.name("active-scan");
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML/INI file");
  bool dump_config = false;
  app.add_flag("--dump-config", dump_config,
               "Print the effective configuration and exit");

  DetectArgs detect;
  CLI::App* detect_cmd = app.add_subcommand("detect", "Find active communities");
  detect_cmd->add_option("--input", detect.input, "Edge list or .bin graph")->required();
  detect_cmd->add_option("--k", detect.config.k, "Locality order for top-Q")
      ->capture_default_str();
  detect_cmd->add_option("--Q", detect.config.q, "Number of active vertices")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  detect_cmd->add_option("--similarity-k", detect.config.similarity_k,
                         "Neighborhood order for Jaccard")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  detect_cmd->add_option("--sigma", detect.sigma, "RBF width or 'auto'")
      ->capture_default_str();
  detect_cmd->add_option("--clusters", detect.clusters, "Cluster count or 'auto'")
      ->capture_default_str();
  detect_cmd->add_option("--max-clusters", detect.config.max_clusters,
                         "Cap for the automatic cluster count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  detect_cmd->add_option("--gap-rule", detect.gap_rule, "absolute or relative")
      ->check(CLI::IsMember({"absolute", "relative"}))
      ->capture_default_str();
  detect_cmd->add_option("--memory-budget-mb", detect.memory_budget_mb,
                         "Budget for materialized neighborhoods")
      ->capture_default_str();
  detect_cmd->add_flag("--write-similarity", detect.config.write_similarity,
                       "Also write similarity.csv");
  detect_cmd->add_option("--seed", detect.common.seed)->capture_default_str();
  detect_cmd->add_option("--out", detect.common.out, "Output directory")->required();
  AddWorkers(detect_cmd, detect.common);

  TopqArgs topq;
  CLI::App* topq_cmd = app.add_subcommand("topq", "Top-Q vertices by locality statistic");
  topq_cmd->add_option("--input", topq.input)->required();
  topq_cmd->add_option("--Q", topq.q)->check(CLI::PositiveNumber)->capture_default_str();
  topq_cmd->add_option("--k", topq.k)->capture_default_str();
  topq_cmd->add_option("--out", topq.common.out, "Report file (default stdout)");
  topq_cmd->add_flag("--omit-timing", topq.omit_timing,
                     "Leave wall time out so reports compare byte for byte");
  AddFormat(topq_cmd, topq.common);
  AddWorkers(topq_cmd, topq.common);

  SbmArgs sbm;
  CLI::App* sbm_cmd = app.add_subcommand("sbm", "Sample a stochastic block model graph");
  sbm_cmd->add_flag("--paper", sbm.source.paper, "Use the benchmark parameters");
  sbm_cmd->add_option("--params", sbm.source.params_path, "Parameter JSON file");
  CLI::Option* sbm_seed = sbm_cmd->add_option("--seed", sbm.common.seed)->capture_default_str();
  sbm_cmd->add_option("--out", sbm.common.out, "Output directory")->required();

  EvalArgs eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Monte Carlo ROC/AUC or ARI evaluation");
  eval_cmd->add_option("--mode", eval.mode)->required()->check(CLI::IsMember({"roc", "ari"}));
  eval_cmd->add_flag("--paper", eval.source.paper);
  eval_cmd->add_option("--params", eval.source.params_path);
  eval_cmd->add_option("--runs", eval.runs)->capture_default_str();
  eval_cmd->add_option("--k", eval.k)->capture_default_str();
  eval_cmd->add_option("--q-values", eval.q_values, "e.g. 61,70,200 or 61:200:10")
      ->capture_default_str();
  eval_cmd->add_option("--max-clusters", eval.max_clusters)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval_cmd->add_option("--similarity-k", eval.similarity_k)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval_cmd->add_option("--gap-rule", eval.gap_rule)
      ->check(CLI::IsMember({"absolute", "relative"}))
      ->capture_default_str();
  eval_cmd->add_option("--seed", eval.common.seed)->capture_default_str();
  eval_cmd->add_option("--out", eval.common.out, "Output directory")->required();
  AddFormat(eval_cmd, eval.common);
  AddWorkers(eval_cmd, eval.common);

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench-trim", "Trimming cost across Q");
  bench_cmd->add_option("--input", bench.input)->required();
  bench_cmd->add_option("--q-values", bench.q_values)->required();
  bench_cmd->add_option("--out", bench.common.out, "CSV file (default stdout)");
  AddWorkers(bench_cmd, bench.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::string command;
    for (const CLI::App* sub : app.get_subcommands()) command = sub->get_name();
    return ReportError(err, command, "usage", e.what(), "", 2);
  }
  if (dump_config) {
    // Only the invoked command's section, without unset strings, so the dump
    // can be fed back through --config.
    std::string prefix;
    for (const CLI::App* sub : app.get_subcommands()) prefix = sub->get_name() + ".";
    std::istringstream dumped(app.config_to_str(true, false));
    for (std::string line; std::getline(dumped, line);) {
      if (line.rfind(prefix, 0) != 0) continue;
      if (line.size() >= 3 && line.compare(line.size() - 3, 3, "=\"\"") == 0) continue;
      out << line << "\n";
    }
    return 0;
  }

  std::string command;
  std::string input;
  try {
    if (detect_cmd->parsed()) {
      command = "detect";
      input = detect.input;
      RunDetect(detect, out);
    } else if (topq_cmd->parsed()) {
      command = "topq";
      input = topq.input;
      RunTopq(topq, out);
    } else if (sbm_cmd->parsed()) {
      command = "sbm";
      input = sbm.source.params_path;
      sbm.seed_given = sbm_seed->count() > 0;
      RunSbm(sbm, out);
    } else if (eval_cmd->parsed()) {
      command = "eval";
      input = eval.source.params_path;
      RunEval(eval, out);
    } else if (bench_cmd->parsed()) {
      command = "bench-trim";
      input = bench.input;
      RunBench(bench, out);
    }
  } catch (const ParseError& e) {
    return ReportError(err, command, "parse", e.what(), input, 2);
  } catch (const std::invalid_argument& e) {
    return ReportError(err, command, "invalid_argument", e.what(), input, 2);
  } catch (const std::exception& e) {
    return ReportError(err, command, "failure", e.what(), input, 1);
  }
  return 0;
}

}  // namespace active_scan
