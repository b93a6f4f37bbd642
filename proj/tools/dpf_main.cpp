// dpf: replay, fuzz and benchmark the dynamic pointer-following engine.
//
//   dpf run <file> [--engine|--oracle|--both]
//   dpf fuzz --seed S --n N --ops M [--mix update=4,query=4,...] [--save out.txt]
//   dpf bench --sizes 4096,2^16,2^20 [--ops M | --ops-per-node F] --seed S [--csv out.csv]

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpf/harness.hpp"
#include "dpf/workload.hpp"

namespace {

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto caret = item.find('^');
    if (caret == std::string::npos) {
      sizes.push_back(std::stoull(item));
    } else {
      const auto base = std::stoull(item.substr(0, caret));
      const auto exp = std::stoull(item.substr(caret + 1));
      std::size_t v = 1;
      for (std::uint64_t i = 0; i < exp; ++i) v *= base;
      sizes.push_back(v);
    }
  }
  return sizes;
}

int cmd_run(const std::string& path, bool oracle_only, bool both) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  dpf::Workload workload;
  try {
    workload = dpf::parse_workload(buffer.str());
  } catch (const dpf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }

  if (both) {
    const auto result = dpf::run_both(workload);
    for (const auto& line : result.lines) std::cout << line << "\n";
    if (result.divergence) {
      std::cout << result.divergence->to_string() << "\n";
      return 1;
    }
    std::cout << "OK\n";
    return 0;
  }
  auto backend = oracle_only ? dpf::make_oracle_backend(workload.n)
                             : dpf::make_engine_backend(workload.n);
  for (const auto& line : dpf::run_single(workload, *backend)) std::cout << line << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic pointer following: replay, fuzz and benchmark harness"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Replay a workload file");
  std::string run_file;
  bool use_engine = false;
  bool use_oracle = false;
  bool use_both = false;
  run->add_option("file", run_file, "Workload file")->required()->check(CLI::ExistingFile);
  auto* engine_flag = run->add_flag("--engine", use_engine, "Run the link-cut engine (default)");
  auto* oracle_flag = run->add_flag("--oracle", use_oracle, "Run the brute-force oracle");
  auto* both_flag = run->add_flag("--both", use_both, "Run both and diff every output");
  engine_flag->excludes(oracle_flag)->excludes(both_flag);
  oracle_flag->excludes(both_flag);

  auto* fuzz = app.add_subcommand("fuzz", "Differential fuzzing against the oracle");
  std::uint64_t fuzz_seed = 1;
  std::size_t fuzz_n = 16;
  std::size_t fuzz_ops = 200;
  std::string fuzz_mix;
  std::string fuzz_save;
  fuzz->add_option("--seed", fuzz_seed, "PRNG seed")->required();
  fuzz->add_option("--n", fuzz_n, "Initial node count")->required()->check(CLI::PositiveNumber);
  fuzz->add_option("--ops", fuzz_ops, "Number of operations")->required()->check(CLI::PositiveNumber);
  fuzz->add_option("--mix", fuzz_mix, "Op weights, e.g. update=4,query=4,delete=1");
  fuzz->add_option("--save", fuzz_save, "Write the minimized failing workload here");

  auto* bench = app.add_subcommand("bench", "Engine-only scaling benchmark");
  std::string bench_sizes;
  std::uint64_t bench_ops = 0;
  std::uint64_t bench_ops_per_node = 10;
  std::uint64_t bench_seed = 1;
  std::string bench_csv_path;
  bench->add_option("--sizes", bench_sizes, "Comma-separated sizes; 2^k allowed")->required();
  auto* ops_opt = bench->add_option("--ops", bench_ops, "Operations per size");
  bench->add_option("--ops-per-node", bench_ops_per_node, "Operations per node when --ops is absent")
      ->excludes(ops_opt);
  bench->add_option("--seed", bench_seed, "PRNG seed");
  bench->add_option("--csv", bench_csv_path, "Output CSV path (stdout when absent)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(run_file, use_oracle, use_both);

    if (*fuzz) {
      const auto mix = fuzz_mix.empty() ? dpf::OpMix::defaults() : dpf::OpMix::parse(fuzz_mix);
      const auto report = dpf::fuzz(fuzz_seed, fuzz_n, fuzz_ops, mix);
      std::cout << report.to_string() << (report.ok() ? "\n" : "");
      if (!report.ok() && !fuzz_save.empty() && report.minimized) {
        std::ofstream(fuzz_save) << report.minimized->to_text();
      }
      return report.ok() ? 0 : 1;
    }

    if (*bench) {
      dpf::BenchOptions options;
      options.sizes = parse_sizes(bench_sizes);
      options.ops = bench_ops;
      options.ops_per_node = bench_ops_per_node;
      options.seed = bench_seed;
      const auto csv = dpf::bench_csv(dpf::bench(options));
      if (bench_csv_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream(bench_csv_path) << csv;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
