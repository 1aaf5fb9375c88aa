// Benchmark: runs each parallel kernel once on the serial reference path
// (threads = 1) and once at the requested worker count, reports wall times
// and the speedup, and verifies that both paths produce bit-identical
// results via checksums.  Exit code 0 only if every checksum pair matches.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lapselab/dataset.hpp"
#include "lapselab/logistic.hpp"
#include "lapselab/models.hpp"
#include "lapselab/par.hpp"
#include "lapselab/portfolio.hpp"
#include "lapselab/profile.hpp"
#include "lapselab/rng.hpp"
#include "lapselab/simulate.hpp"

namespace {

using lapselab::Dataset;
using lapselab::fnv1a64;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t mix_hash(std::uint64_t h, const void* data, std::size_t bytes) {
  std::uint64_t piece = fnv1a64(data, bytes);
  std::uint64_t both[2] = {h, piece};
  return fnv1a64(both, sizeof both);
}

std::uint64_t dataset_checksum(const Dataset& ds) {
  std::uint64_t h = fnv1a64("dataset");
  h = mix_hash(h, ds.policy_id.data(), ds.policy_id.size() * sizeof(std::int64_t));
  h = mix_hash(h, ds.calendar_year.data(), ds.calendar_year.size() * sizeof(int));
  h = mix_hash(h, ds.label.data(), ds.label.size() * sizeof(std::int8_t));
  h = mix_hash(h, ds.true_prob.data(), ds.true_prob.size() * sizeof(double));
  for (const auto& column : ds.features.columns)
    h = mix_hash(h, column.data(), column.size() * sizeof(double));
  return h;
}

std::uint64_t model_checksum(const lapselab::Model& model) {
  std::string text = model.to_json().dump();
  return fnv1a64(text.data(), text.size());
}

struct KernelResult {
  double seconds = 0.0;
  std::uint64_t checksum = 0;
};

struct Kernel {
  std::string name;
  std::function<KernelResult()> run;
};

lapselab::SurrenderProfile bench_profile() {
  lapselab::SurrenderProfile profile;
  profile.name = "bench";
  profile.intercept = -3.6;
  lapselab::StepFunction elapsed;
  elapsed.feature_key = "elapsed_duration";
  elapsed.breakpoints = {2.0, 5.0};
  elapsed.values = {0.8, 0.2, 0.0};
  profile.effects.push_back(elapsed);
  return profile;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lapselab benchmark: serial reference vs parallel kernels"};
  int threads = 0;
  std::int64_t n0 = 6000;
  int horizon = 8;
  int trees = 64;
  app.add_option("--threads", threads, "parallel worker count (0 = library default)");
  app.add_option("--n0", n0, "initial portfolio size for the simulation kernel");
  app.add_option("--horizon", horizon, "simulated years");
  app.add_option("--trees", trees, "ensemble size for the forest/boosting kernels");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const int parallel_threads = threads > 0 ? threads : lapselab::par::thread_count();
  const std::uint64_t seed = 20240915;

  // Shared input data, built once at a fixed worker count so every kernel
  // below sees identical bytes.
  lapselab::par::set_thread_count(1);
  lapselab::MakehamParams mort;
  lapselab::EconomicAssumptions econ;
  lapselab::PortfolioAssumptions assumptions;
  lapselab::SurrenderProfile profile = bench_profile();
  lapselab::RngStream portfolio_stream = lapselab::RngStream::from_key(seed, "portfolio");
  lapselab::RngStream event_stream = lapselab::RngStream::from_key(seed, "events");
  lapselab::Portfolio initial = lapselab::generate_initial_portfolio(
      n0, portfolio_stream, assumptions, econ, mort);
  Dataset base = lapselab::simulate_events(initial, profile, horizon, 0.05, mort, assumptions,
                                           econ, event_stream, portfolio_stream);
  lapselab::TimeSplit split = lapselab::split_by_time(base, 0.7);
  lapselab::preprocess(split.train, split.test);
  Dataset train = split.train;
  std::printf("input: %zu train rows, surrender rate %.4f\n", train.size(), train.label_mean());

  std::vector<Kernel> kernels;
  kernels.push_back(
      {"simulate", [&]() {
         KernelResult r;
         auto t0 = std::chrono::steady_clock::now();
         Dataset ds = lapselab::simulate_events(initial, profile, horizon, 0.05, mort,
                                                assumptions, econ, event_stream,
                                                portfolio_stream);
         r.seconds = seconds_since(t0);
         r.checksum = dataset_checksum(ds);
         return r;
       }});
  kernels.push_back(
      {"forest_train", [&]() {
         KernelResult r;
         lapselab::ForestParams params;
         params.n_estimators = trees;
         params.max_depth = 8;
         params.max_features_fraction = 0.7;
         auto t0 = std::chrono::steady_clock::now();
         auto model = lapselab::train_random_forest(
             train, params, lapselab::RngStream::from_key(seed, "train:forest"));
         r.seconds = seconds_since(t0);
         r.checksum = model_checksum(*model);
         return r;
       }});
  kernels.push_back(
      {"gbt_train", [&]() {
         KernelResult r;
         lapselab::GbtParams params;
         params.n_estimators = trees;
         params.max_depth = 3;
         params.learning_rate = 0.1;
         auto t0 = std::chrono::steady_clock::now();
         auto model = lapselab::train_gbt(train, params,
                                          lapselab::RngStream::from_key(seed, "train:gbt"));
         r.seconds = seconds_since(t0);
         r.checksum = model_checksum(*model);
         return r;
       }});
  kernels.push_back(
      {"logistic_train", [&]() {
         KernelResult r;
         lapselab::LogisticParams params;
         params.penalty = "l2";
         params.inverse_strength = 100.0;
         params.n_bag = 5;
         Dataset expanded = train;
         expanded.features = lapselab::engineer_polynomial(train.features, 4);
         auto t0 = std::chrono::steady_clock::now();
         auto model = lapselab::train_logistic(
             expanded, params, lapselab::RngStream::from_key(seed, "train:logistic"));
         r.seconds = seconds_since(t0);
         r.checksum = model_checksum(*model);
         return r;
       }});

  std::printf("%-16s %12s %12s %9s  %s\n", "kernel", "serial s", "parallel s", "speedup",
              "checksums");
  bool all_equal = true;
  for (const Kernel& kernel : kernels) {
    lapselab::par::set_thread_count(1);
    KernelResult serial = kernel.run();
    lapselab::par::set_thread_count(parallel_threads);
    KernelResult parallel = kernel.run();
    const bool equal = serial.checksum == parallel.checksum;
    all_equal = all_equal && equal;
    std::printf("%-16s %12.3f %12.3f %8.2fx  %s (%016llx)\n", kernel.name.c_str(),
                serial.seconds, parallel.seconds,
                parallel.seconds > 0.0 ? serial.seconds / parallel.seconds : 0.0,
                equal ? "equal" : "DIFFER",
                static_cast<unsigned long long>(serial.checksum));
  }
  std::printf("threads: 1 vs %d; %s\n", parallel_threads,
              all_equal ? "all kernels bit-identical" : "MISMATCH DETECTED");
  return all_equal ? 0 : 1;
}
