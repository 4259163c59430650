#pragma once

#include <span>
#include <string>
#include <vector>

#include "tabdx/table.hpp"

namespace tabdx {

// Dense row-major view the classifiers train on. Built from a fully observed
// table whose feature columns are numeric; the label column holds integer
// class codes (1-based, per the encoding stage).
struct FeatureMatrix {
  std::vector<std::string> feature_names;
  size_t n_rows = 0;
  size_t n_features = 0;
  std::vector<double> x;  // row-major, n_rows * n_features
  std::vector<int> y;     // class codes; empty when built without a label
  int n_classes = 0;

  double at(size_t row, size_t col) const { return x[row * n_features + col]; }
  std::span<const double> row(size_t r) const {
    return {x.data() + r * n_features, n_features};
  }
};

struct FeatureSelection {
  // Identifier columns join the feature set only when whitelisted.
  std::vector<std::string> whitelist;
  std::vector<std::string> blacklist;
};

FeatureMatrix make_feature_matrix(const DataTable& table,
                                  const FeatureSelection& selection = {},
                                  bool require_label = true);

}  // namespace tabdx
