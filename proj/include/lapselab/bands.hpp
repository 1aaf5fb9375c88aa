#pragma once
// Confidence bands for mean surrender rates built from per-record predicted
// probabilities: a normal approximation for the sum of independent,
// non-identical Bernoulli outcomes gives point +/- z * sqrt(sum p(1-p)) /
// sqrt(N(N-1)), evaluated per calendar year and compared with the observed
// rate.

#include <cstddef>
#include <string>
#include <vector>

#include "lapselab/dataset.hpp"

namespace lapselab {

// Quantile of the standard normal distribution; rational initial guess
// refined by Newton steps on the erfc-based CDF (accurate far beyond 1e-9).
double inverse_normal_cdf(double p);

struct Band {
  double point = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double half_width = 0.0;
};

// `alpha` is the coverage level (0.95 gives z = 1.9599...); the band may
// leave [0,1] and is reported as-is.  Requires at least two predictions.
Band confidence_band(const std::vector<double>& predicted, double alpha);

struct BandPoint {
  int calendar_year = 0;
  double point = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double observed = 0.0;
  std::size_t n = 0;
};

// One band per calendar year over that year's predictions, with the observed
// surrender rate alongside; years with fewer than two records are skipped
// with a warning on stderr.  `predictions` is aligned with dataset rows.
std::vector<BandPoint> band_series(const Dataset& dataset,
                                   const std::vector<double>& predictions, double alpha);

// calendar_year, point, lower, upper, observed, n
void write_band_series_csv(const std::vector<BandPoint>& points, const std::string& path);

// Two-column CSV (true_p, predicted_p), one row per record.
void pp_scatter_export(const std::vector<double>& true_p,
                       const std::vector<double>& predicted_p, const std::string& path);

}  // namespace lapselab
