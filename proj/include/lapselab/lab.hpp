#pragma once
// Configuration-driven experiment orchestration: config parsing with
// path-qualified validation errors, keyed per-stage random streams, run
// manifests with file checksums, and the four pipeline commands (simulate,
// train, evaluate, bias-study).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lapselab/actuarial.hpp"
#include "lapselab/portfolio.hpp"
#include "lapselab/resample.hpp"

namespace lapselab {

inline constexpr const char* kCodeVersion = "1.0.0";

struct ExperimentConfig {
  std::uint64_t seed = 0;
  std::string output_dir;    // where datasets, models and reports land
  std::string profile_path;  // surrender profile JSON

  std::int64_t n0 = 30000;
  int horizon_years = 15;
  double new_business_rate = 0.06;
  MakehamParams mortality;
  EconomicAssumptions economics;
  PortfolioAssumptions portfolio;

  double split_share = 0.7;
  // Roster in deterministic (alphabetical) order: model name -> preset JSON.
  std::vector<std::pair<std::string, nlohmann::json>> models;
  ResamplePlan resampling;

  double band_alpha = 0.95;
  double decision_threshold = 0.5;
  double f_beta = 1.0;

  std::string bias_model = "logistic";
  std::vector<ResampleScheme> bias_schemes;

  nlohmann::json raw;  // canonical parsed document, hashed into manifests
};

// Parses and validates a config file; offending fields are reported with
// their dotted path.  A relative profile path resolves against the config
// file's directory; a relative output_dir resolves against the working
// directory (default: out/<config stem>).
ExperimentConfig load_config(const std::string& path);

// Reproducibility record written next to the outputs as
// manifest_<command>.json: config hash, code version, per-stage stream tags,
// and a checksum inventory of every produced file.
class RunManifest {
 public:
  RunManifest(const ExperimentConfig& config, std::string command);
  void note(const std::string& key, nlohmann::json value);
  void add_stage(const std::string& stage_tag);
  void add_file(const std::string& path);  // checksums current contents
  void write(const std::string& out_dir);

 private:
  nlohmann::json doc_;
  std::string command_;
};

std::string file_checksum_hex(const std::string& path);

int cmd_simulate(const ExperimentConfig& config);
// Trains the roster on (optionally resampled) persisted train data; models
// are written into `models_dir` (default <output_dir>/models).
int cmd_train(const ExperimentConfig& config, const std::string& models_dir);
int cmd_evaluate(const ExperimentConfig& config, const std::string& models_dir);
int cmd_bias_study(const ExperimentConfig& config);

}  // namespace lapselab
