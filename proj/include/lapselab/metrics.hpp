#pragma once
// Frequentist model assessment: confusion-matrix summaries at a decision
// threshold, ROC / precision-recall curves with trapezoid AUC, mean binary
// cross-entropy, and error statistics against the latent probabilities that
// generated the data.  Ratio metrics that reduce to 0/0 are reported as
// absent values rather than coerced to zero.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lapselab {

struct ConfusionMatrix {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  std::size_t total() const { return tp + fp + fn + tn; }
};

// Predicted label is 1 when the probability reaches the threshold.
ConfusionMatrix confusion_matrix(const std::vector<std::int8_t>& labels,
                                 const std::vector<double>& probabilities,
                                 double threshold = 0.5);

struct ConfusionMetrics {
  ConfusionMatrix counts;
  double beta = 1.0;
  std::optional<double> accuracy;     // (tp+tn)/N
  std::optional<double> precision;    // tp/(tp+fp)
  std::optional<double> recall;       // tp/(tp+fn)
  std::optional<double> specificity;  // tn/(tn+fp)
  std::optional<double> fpr;          // fp/(fp+tn)
  std::optional<double> f_beta;       // (1+b^2) P R / (b^2 P + R)
};

ConfusionMetrics confusion_metrics(const std::vector<std::int8_t>& labels,
                                   const std::vector<double>& probabilities,
                                   double threshold = 0.5, double beta = 1.0);

struct CurvePoint {
  double x = 0.0;  // ROC: false-positive rate; PR: recall
  double y = 0.0;  // ROC: true-positive rate; PR: precision
};

// Curve swept over every distinct score threshold, descending; requires both
// classes to be present.
std::vector<CurvePoint> roc_points(const std::vector<std::int8_t>& labels,
                                   const std::vector<double>& probabilities);
std::vector<CurvePoint> pr_points(const std::vector<std::int8_t>& labels,
                                  const std::vector<double>& probabilities);

// Trapezoid rule over x (points need not be sorted on input).
double curve_auc(std::vector<CurvePoint> points);

// Mean of -[y ln p + (1-y) ln(1-p)]; probabilities are clamped into
// [1e-12, 1 - 1e-12] first, so 0/1 predictions stay finite.
double cross_entropy(const std::vector<std::int8_t>& labels,
                     const std::vector<double>& probabilities);

struct LatentErrorStats {
  double mae = 0.0;             // mean |p - p_hat|
  double error_variance = 0.0;  // population variance of (p - p_hat)
  double mean_signed = 0.0;     // mean (p_hat - p); positive = overestimation
};

LatentErrorStats latent_error_stats(const std::vector<double>& true_p,
                                    const std::vector<double>& predicted_p);

}  // namespace lapselab
