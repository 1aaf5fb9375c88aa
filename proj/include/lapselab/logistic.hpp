#pragma once
// Bagged regularized logistic regression on polynomial features.  L2 fits
// use a damped Newton method; L1 fits use accelerated proximal gradient
// steps with a soft-threshold operator.  The objective is the total
// cross-entropy plus (1/C) * sum_j |beta_j|^p with the intercept left
// unpenalized.

#include <memory>
#include <string>
#include <vector>

#include "lapselab/dataset.hpp"
#include "lapselab/models.hpp"
#include "lapselab/rng.hpp"

namespace lapselab {

// Appends x^2 .. x^max_degree for every non-indicator column, grouped per
// source column after the originals; indicator columns pass through.
FeatureTable engineer_polynomial(const FeatureTable& features, int max_degree = 4);

struct LogisticParams {
  std::string penalty = "l2";  // "l1" or "l2"
  double inverse_strength = 1.0;  // C; larger means weaker regularization
  int n_bag = 10;      // 1 trains a single member on the full data
  int max_iterations = 10000;
  double tolerance = 1e-8;  // on the max-norm of the mean gradient
};

// `train` must already be preprocessed and polynomial-expanded; members
// beyond the first bag slot are fitted on bootstrap resamples and the
// ensemble predicts the mean of member probabilities.
std::unique_ptr<Model> train_logistic(const Dataset& train, const LogisticParams& params,
                                      RngStream stream);

// Total objective and its gradient at beta = [intercept, coefficients...],
// with optional per-row multiplicities (empty = all ones).  Exposed so the
// gradient can be validated against finite differences.
double logistic_loss(const FeatureTable& features, const std::vector<std::int8_t>& labels,
                     const std::vector<std::uint32_t>& multiplicity,
                     const std::vector<double>& beta, const std::string& penalty,
                     double inverse_strength);
std::vector<double> logistic_gradient(const FeatureTable& features,
                                      const std::vector<std::int8_t>& labels,
                                      const std::vector<std::uint32_t>& multiplicity,
                                      const std::vector<double>& beta,
                                      const std::string& penalty, double inverse_strength);

}  // namespace lapselab
