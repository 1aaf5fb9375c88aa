#pragma once
// Probabilistic surrender classifiers sharing one prediction and persistence
// contract: a constant baseline, a bagged regularized logistic regression on
// polynomial features, a single classification tree, a random forest, and a
// second-order gradient-boosted tree ensemble.

#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "lapselab/dataset.hpp"
#include "lapselab/rng.hpp"
#include "lapselab/tree.hpp"

namespace lapselab {

inline double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }
inline double logit(double p) { return std::log(p / (1.0 - p)); }

// Probabilities reported by margin-based models stay inside the open unit
// interval by this margin.
inline constexpr double kProbClamp = 1e-12;
inline double clamp_probability(double p) {
  if (p < kProbClamp) return kProbClamp;
  if (p > 1.0 - kProbClamp) return 1.0 - kProbClamp;
  return p;
}

enum class ModelKind { baseline, logistic_bag, cart, random_forest, gbt };
std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

class Model {
 public:
  virtual ~Model() = default;
  virtual ModelKind kind() const = 0;

  // Per-row surrender probabilities; the table's column names must match the
  // training-time schema exactly (order included).
  std::vector<double> predict(const FeatureTable& features) const;

  nlohmann::json to_json() const;

  std::vector<std::string> feature_schema;
  nlohmann::json training_meta;  // seed, hyperparameters, base_rate

 protected:
  virtual std::vector<double> predict_checked(const FeatureTable& features) const = 0;
  virtual nlohmann::json parameters_to_json() const = 0;
  void check_schema(const FeatureTable& features) const;
};

struct BaselineModel final : Model {
  double rate = 0.0;

  ModelKind kind() const override { return ModelKind::baseline; }

 protected:
  std::vector<double> predict_checked(const FeatureTable& features) const override;
  nlohmann::json parameters_to_json() const override;
};

struct LogisticBagModel final : Model {
  struct Member {
    double intercept = 0.0;
    std::vector<double> coefficients;  // aligned with feature_schema
  };
  std::string penalty = "l2";
  double inverse_strength = 1.0;  // C
  std::vector<Member> members;

  ModelKind kind() const override { return ModelKind::logistic_bag; }

 protected:
  std::vector<double> predict_checked(const FeatureTable& features) const override;
  nlohmann::json parameters_to_json() const override;
};

struct CartModel final : Model {
  Tree tree;

  ModelKind kind() const override { return ModelKind::cart; }

 protected:
  std::vector<double> predict_checked(const FeatureTable& features) const override;
  nlohmann::json parameters_to_json() const override;
};

struct ForestModel final : Model {
  std::vector<Tree> trees;

  ModelKind kind() const override { return ModelKind::random_forest; }

 protected:
  std::vector<double> predict_checked(const FeatureTable& features) const override;
  nlohmann::json parameters_to_json() const override;
};

struct GbtModel final : Model {
  double base_margin = 0.0;  // logit of the training base rate
  double learning_rate = 0.3;
  std::vector<Tree> trees;

  ModelKind kind() const override { return ModelKind::gbt; }

 protected:
  std::vector<double> predict_checked(const FeatureTable& features) const override;
  nlohmann::json parameters_to_json() const override;
};

// ---------------------------------------------------------------------------
// Training.

std::unique_ptr<Model> train_baseline(const Dataset& train);

struct CartParams {
  int max_depth = 12;
  double min_samples_split = 2.0;
  double min_samples_leaf = 1.0;
};
std::unique_ptr<Model> train_cart(const Dataset& train, const CartParams& params);

struct ForestParams {
  int n_estimators = 300;
  int max_depth = 8;
  double max_features_fraction = 0.7;
  bool bootstrap = true;
  double min_samples_split = 2.0;
  double min_samples_leaf = 1.0;
};
std::unique_ptr<Model> train_random_forest(const Dataset& train, const ForestParams& params,
                                           RngStream stream);

struct GbtParams {
  int n_estimators = 300;
  int max_depth = 3;
  double learning_rate = 0.1;
  double reg_lambda = 1.0;
  double reg_alpha = 0.0;
  double gamma = 0.0;
  double min_child_weight = 1.0;
  double subsample = 1.0;
  double colsample_bylevel = 1.0;
};
std::unique_ptr<Model> train_gbt(const Dataset& train, const GbtParams& params,
                                 RngStream stream);

// ---------------------------------------------------------------------------
// Persistence: versioned structured text (JSON), bit-exact round trips.

nlohmann::json tree_to_json(const Tree& tree);
Tree tree_from_json(const nlohmann::json& node_list);

std::unique_ptr<Model> model_from_json(const nlohmann::json& doc);
void save_model(const Model& model, const std::string& path);
std::unique_ptr<Model> load_model(const std::string& path);

}  // namespace lapselab
