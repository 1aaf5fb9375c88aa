#pragma once
// Shared decision-tree machinery: axis-aligned binary trees grown level by
// level with exact greedy splits over presorted feature columns.  Two split
// criteria share the engine: weighted-entropy reduction with leaf
// frequencies (single trees, forests) and second-order loss statistics with
// additive leaf weights (boosting).

#include <cstdint>
#include <vector>

#include "lapselab/dataset.hpp"
#include "lapselab/rng.hpp"

namespace lapselab {

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1, right = -1;  // children; rows with x < threshold go left
  double value = 0.0;         // leaf payload
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  double eval(const FeatureTable& table, std::size_t row) const;
  int split_count() const;
};

// Presorted row indices per feature (ties by row index), shared by every
// tree grown on the same dataset.
struct TreeTrainingContext {
  const FeatureTable* features;
  std::vector<std::vector<std::uint32_t>> sorted_rows;

  explicit TreeTrainingContext(const FeatureTable& table);
};

struct ClassificationTreeParams {
  int max_depth = 6;
  double min_samples_split = 2.0;  // weighted row count required to split
  double min_samples_leaf = 1.0;   // weighted row count required per child
  double feature_fraction = 1.0;   // per-split uniform feature subset
};

// Grows one tree on integer row multiplicities (0 excludes a row). Splits
// maximize the total weighted-entropy reduction; equal gains resolve to the
// lowest feature index, then the lowest threshold.  Leaves carry the
// weighted positive-label frequency.
Tree grow_classification_tree(const TreeTrainingContext& ctx,
                              const std::vector<std::int8_t>& labels,
                              const std::vector<std::uint32_t>& row_multiplicity,
                              const ClassificationTreeParams& params,
                              RngStream tree_stream);

struct BoostedTreeParams {
  int max_depth = 3;
  double reg_lambda = 1.0;        // L2 on leaf weights
  double reg_alpha = 0.0;         // L1 on leaf weights (soft threshold)
  double min_split_gain = 0.0;    // split kept only if gain exceeds this
  double min_child_weight = 0.0;  // minimum hessian sum per child
  double colsample_bylevel = 1.0;
};

// Grows one second-order tree: per-leaf weight -soft(G, alpha)/(H + lambda),
// split gain 0.5 [SL^2/(HL+l) + SR^2/(HR+l) - S^2/(H+l)] with S = soft(G, a).
// Rows with include_row == 0 are ignored; features are subsampled per level.
Tree grow_boosted_tree(const TreeTrainingContext& ctx, const std::vector<double>& gradient,
                       const std::vector<double>& hessian,
                       const std::vector<std::uint8_t>& include_row,
                       const BoostedTreeParams& params, RngStream tree_stream);

}  // namespace lapselab
