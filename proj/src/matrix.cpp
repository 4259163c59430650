#include "tabdx/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "tabdx/error.hpp"

namespace tabdx {
namespace {

bool contains(const std::vector<std::string>& names, const std::string& n) {
  return std::find(names.begin(), names.end(), n) != names.end();
}

}  // namespace

FeatureMatrix make_feature_matrix(const DataTable& table,
                                  const FeatureSelection& selection,
                                  bool require_label) {
  FeatureMatrix m;
  std::vector<const Column*> features;
  for (const Column& col : table.columns()) {
    if (col.kind == ColumnKind::Label) continue;
    if (contains(selection.blacklist, col.name)) continue;
    if (col.kind == ColumnKind::Identifier &&
        !contains(selection.whitelist, col.name)) {
      continue;
    }
    if (!col.numeric_storage()) {
      throw PipelineError("feature column '" + col.name +
                          "' is not numeric; encode categoricals first");
    }
    if (col.missing_count() > 0) {
      throw PipelineError("feature column '" + col.name +
                          "' has missing cells; impute before modeling");
    }
    features.push_back(&col);
  }
  if (features.empty()) {
    throw PipelineError("no usable feature columns in table");
  }

  m.n_rows = table.row_count();
  m.n_features = features.size();
  m.feature_names.reserve(features.size());
  for (const Column* col : features) m.feature_names.push_back(col->name);

  m.x.resize(m.n_rows * m.n_features);
  for (size_t j = 0; j < features.size(); ++j) {
    const std::vector<double>& vals = features[j]->numeric();
    for (size_t i = 0; i < m.n_rows; ++i) m.x[i * m.n_features + j] = vals[i];
  }

  if (require_label) {
    const Column& label = table.label_column();
    if (!label.numeric_storage()) {
      throw PipelineError("label column '" + label.name +
                          "' is not encoded; apply the label encoding first");
    }
    m.y.resize(m.n_rows);
    const std::vector<double>& vals = label.numeric();
    for (size_t i = 0; i < m.n_rows; ++i) {
      if (label.is_missing(i)) {
        throw PipelineError("label column '" + label.name +
                            "' has a missing cell at row " + std::to_string(i));
      }
      const int code = static_cast<int>(std::llround(vals[i]));
      if (code < 1 || std::abs(vals[i] - code) > 1e-9) {
        throw PipelineError("label column '" + label.name +
                            "' holds a non-code value at row " +
                            std::to_string(i));
      }
      m.y[i] = code;
      m.n_classes = std::max(m.n_classes, code);
    }
  }
  return m;
}

}  // namespace tabdx
