#pragma once
// Policy-year observation table: model-visible feature columns plus labels,
// latent probabilities, and bookkeeping ids; CSV round-trip, chronological
// train/test split, and train-fitted scaling.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lapselab/portfolio.hpp"

namespace lapselab {

struct FeatureTable {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;  // column-major, aligned lengths

  std::size_t rows() const { return columns.empty() ? 0 : columns[0].size(); }
  std::size_t cols() const { return columns.size(); }
  int column_index(const std::string& name) const;  // -1 if absent
};

struct ScalerInfo {
  struct ColumnRange {
    std::string name;
    double min = 0.0, max = 0.0;
  };
  std::vector<ColumnRange> ranges;        // scaled columns, train statistics
  std::vector<std::string> dropped;       // constant-on-train columns, removed
};

struct Dataset {
  std::vector<std::int64_t> policy_id;
  std::vector<int> calendar_year;
  std::vector<std::int8_t> label;        // y
  std::vector<double> true_prob;         // latent probability, evaluation-only
  std::vector<std::int8_t> synthetic;    // 1 on resampler-generated rows
  FeatureTable features;
  std::optional<ScalerInfo> scaler;      // present once preprocessed
  std::optional<int> split_year;

  std::size_t size() const { return label.size(); }
  double label_mean() const;
  // Latent probabilities present (loaded CSVs without a true_p column carry
  // NaN placeholders instead).
  bool has_latent() const;
};

// Fixed model-visible column order; the three indicator columns one-hot the
// payment frequency as (upfront, annual, monthly).
const std::vector<std::string>& raw_feature_names();

// Feature row for one contract in raw_feature_names() order.
std::vector<double> observation_features(const Contract& contract);

Dataset make_empty_dataset();

// 13-column schema (policy_id, calendar_year, features..., y, true_p);
// resampled datasets append a `synthetic` provenance column.
void write_dataset_csv(const Dataset& dataset, const std::string& path,
                       bool include_synthetic = false);
Dataset read_dataset_csv(const std::string& path);

// New dataset holding the given rows (indices may repeat), feature schema and
// scaler carried over.
Dataset select_rows(const Dataset& source, const std::vector<std::size_t>& rows);

// Chronological split: train takes every record with calendar year <= the
// first year at which the cumulative share reaches `share`, capped one year
// before the last so the test side is never empty.
struct TimeSplit {
  Dataset train;
  Dataset test;
  int split_year = 0;
};
TimeSplit split_by_time(const Dataset& dataset, double share = 0.7);

// Min-max scales numeric columns to [-1, 1] with train-only statistics and
// applies the same affine map to test (values may leave [-1, 1]); indicator
// columns pass through; constant train columns are dropped from both sides
// and reported in the scaler info.
void preprocess(Dataset& train, Dataset& test);

// Applies an existing scaler to a raw dataset (used when evaluating persisted
// models on freshly loaded CSVs).
void apply_scaler(const ScalerInfo& scaler, Dataset& dataset);

// One-hot payment-frequency columns: never scaled, never expanded.
bool is_indicator_column(const std::string& name);

}  // namespace lapselab
