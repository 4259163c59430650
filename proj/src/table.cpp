#include "tabdx/table.hpp"

#include <algorithm>

#include "tabdx/error.hpp"

namespace tabdx {

const char* to_string(ColumnKind kind) {
  switch (kind) {
    case ColumnKind::Numeric: return "numeric";
    case ColumnKind::Categorical: return "categorical";
    case ColumnKind::Identifier: return "identifier";
    case ColumnKind::Label: return "label";
  }
  return "unknown";
}

ColumnKind column_kind_from_string(const std::string& text) {
  if (text == "numeric") return ColumnKind::Numeric;
  if (text == "categorical") return ColumnKind::Categorical;
  if (text == "identifier") return ColumnKind::Identifier;
  if (text == "label") return ColumnKind::Label;
  throw SchemaError("unknown column kind '" + text + "'");
}

const std::vector<double>& Column::numeric() const {
  if (!numeric_storage()) {
    throw SchemaError("column '" + name + "' holds text, expected numeric");
  }
  return std::get<std::vector<double>>(values);
}

const std::vector<std::string>& Column::text() const {
  if (numeric_storage()) {
    throw SchemaError("column '" + name + "' holds numbers, expected text");
  }
  return std::get<std::vector<std::string>>(values);
}

std::vector<double>& Column::numeric_mut() {
  if (!numeric_storage()) {
    throw SchemaError("column '" + name + "' holds text, expected numeric");
  }
  return std::get<std::vector<double>>(values);
}

std::vector<std::string>& Column::text_mut() {
  if (numeric_storage()) {
    throw SchemaError("column '" + name + "' holds numbers, expected text");
  }
  return std::get<std::vector<std::string>>(values);
}

size_t Column::size() const {
  return numeric_storage() ? std::get<std::vector<double>>(values).size()
                           : std::get<std::vector<std::string>>(values).size();
}

size_t Column::missing_count() const {
  return static_cast<size_t>(
      std::count(missing.begin(), missing.end(), uint8_t{1}));
}

Column Column::make_numeric(std::string name, std::vector<double> values,
                            ColumnKind kind) {
  Column col;
  col.name = std::move(name);
  col.kind = kind;
  col.missing.assign(values.size(), 0);
  col.values = std::move(values);
  return col;
}

Column Column::make_text(std::string name, std::vector<std::string> values,
                         ColumnKind kind) {
  Column col;
  col.name = std::move(name);
  col.kind = kind;
  col.missing.assign(values.size(), 0);
  col.values = std::move(values);
  return col;
}

void DataTable::add_column(Column col) {
  if (by_name_.count(col.name) > 0) {
    throw SchemaError("duplicate column name '" + col.name + "'");
  }
  if (col.missing.size() != col.size()) {
    throw SchemaError("column '" + col.name +
                      "': missing mask size does not match cell count");
  }
  if (sized_ && col.size() != row_count_) {
    throw SchemaError("column '" + col.name + "' has " +
                      std::to_string(col.size()) + " cells, table has " +
                      std::to_string(row_count_) + " rows");
  }
  row_count_ = col.size();
  sized_ = true;
  by_name_.emplace(col.name, columns_.size());
  columns_.push_back(std::move(col));
}

void DataTable::replace_column(size_t index, Column col) {
  const Column& old = columns_.at(index);
  if (col.name != old.name && by_name_.count(col.name) > 0) {
    throw SchemaError("duplicate column name '" + col.name + "'");
  }
  if (col.size() != row_count_ || col.missing.size() != col.size()) {
    throw SchemaError("replacement for column '" + col.name +
                      "' has wrong cell count");
  }
  by_name_.erase(old.name);
  by_name_.emplace(col.name, index);
  columns_[index] = std::move(col);
}

const Column& DataTable::column(const std::string& name) const {
  const int idx = find_column(name);
  if (idx < 0) throw SchemaError("no column named '" + name + "'");
  return columns_[static_cast<size_t>(idx)];
}

int DataTable::find_column(const std::string& name) const {
  const auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : static_cast<int>(it->second);
}

bool DataTable::has_label() const {
  return std::count_if(columns_.begin(), columns_.end(), [](const Column& c) {
           return c.kind == ColumnKind::Label;
         }) == 1;
}

const Column& DataTable::label_column() const {
  const Column* found = nullptr;
  for (const Column& col : columns_) {
    if (col.kind != ColumnKind::Label) continue;
    if (found != nullptr) {
      throw SchemaError("more than one label column ('" + found->name +
                        "' and '" + col.name + "')");
    }
    found = &col;
  }
  if (found == nullptr) throw SchemaError("table has no label column");
  return *found;
}

DataTable DataTable::select_rows(std::span<const size_t> rows) const {
  DataTable out;
  for (const Column& col : columns_) {
    Column next;
    next.name = col.name;
    next.kind = col.kind;
    next.missing.reserve(rows.size());
    for (size_t r : rows) next.missing.push_back(col.missing.at(r));
    if (col.numeric_storage()) {
      std::vector<double> vals;
      vals.reserve(rows.size());
      for (size_t r : rows) vals.push_back(col.numeric()[r]);
      next.values = std::move(vals);
    } else {
      std::vector<std::string> vals;
      vals.reserve(rows.size());
      for (size_t r : rows) vals.push_back(col.text()[r]);
      next.values = std::move(vals);
    }
    out.add_column(std::move(next));
  }
  if (out.columns_.empty()) {
    out.row_count_ = rows.size();
    out.sized_ = true;
  }
  return out;
}

DataTable DataTable::without_columns(
    const std::vector<std::string>& names) const {
  DataTable out;
  for (const Column& col : columns_) {
    if (std::find(names.begin(), names.end(), col.name) != names.end()) {
      continue;
    }
    out.add_column(col);
  }
  if (out.columns_.empty()) {
    out.row_count_ = row_count_;
    out.sized_ = true;
  }
  return out;
}

}  // namespace tabdx
