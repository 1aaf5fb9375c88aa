#pragma once
// Class-rebalancing schemes that preserve class-conditional feature
// distributions, plus the closed-form relationship between probabilities
// estimated on resampled data and on the original base rate.

#include <cstdint>

#include "lapselab/dataset.hpp"
#include "lapselab/rng.hpp"

namespace lapselab {

enum class ResampleScheme : std::uint8_t {
  none = 0,
  random_undersample,
  random_oversample,
  smote,
};

struct ResamplePlan {
  ResampleScheme scheme = ResampleScheme::none;
  double target_minority_share = 0.5;
  int smote_k = 5;
};

const char* to_string(ResampleScheme scheme);
ResampleScheme resample_scheme_from_string(const std::string& text);

// Keeps every minority (y=1) row and uniformly subsamples majority rows until
// the minority share reaches the target; already-balanced data is returned
// unchanged. Output preserves original row order.
Dataset undersample(const Dataset& dataset, const ResamplePlan& plan, RngStream& rng);

// Keeps every row and appends with-replacement copies of minority rows until
// the target share holds; appended rows are flagged synthetic.
Dataset oversample(const Dataset& dataset, const ResamplePlan& plan, RngStream& rng);

// Appends interpolated minority points x + u (x~ - x), u ~ U(0,1), with x~
// drawn uniformly from x's k nearest minority neighbours (exact Euclidean on
// the feature columns; ties broken by row index). Appended rows are flagged
// synthetic and inherit the base row's bookkeeping fields.
Dataset smote(const Dataset& dataset, const ResamplePlan& plan, RngStream& rng);

// Dispatch on plan.scheme; scheme none returns the dataset unchanged.
Dataset apply_resampling(const Dataset& dataset, const ResamplePlan& plan, RngStream& rng);

// Probability a model trained at `resampled_rate` assigns where an original-
// data model would output p_hat (exact closed form; identity when the rates
// match; exceeds p_hat whenever resampled_rate > base_rate).
double map_to_resampled_rate(double p_hat, double base_rate, double resampled_rate);

// Exact inverse of the map above for perfectly balanced training data
// (resampled rate 1/2): recovers the original-scale probability.
double correct_balanced_bias(double p_hat_s, double base_rate);

// Largest per-feature total-variation distance between decile-discretized
// class-conditional feature distributions of the two datasets (bin edges are
// quantiles of the pooled values, so disjoint supports always land in
// different bins). 0 = identical, 1 = disjoint support.
double consistency_stat(const Dataset& original, const Dataset& resampled,
                        int class_label, int bins = 10);

}  // namespace lapselab
