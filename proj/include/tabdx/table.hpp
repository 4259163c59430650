#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace tabdx {

enum class ColumnKind { Numeric, Categorical, Identifier, Label };

const char* to_string(ColumnKind kind);
ColumnKind column_kind_from_string(const std::string& text);

// Missingness is a per-cell state, never a sentinel value.
using MissingMask = std::vector<uint8_t>;

struct Column {
  std::string name;
  ColumnKind kind = ColumnKind::Numeric;
  std::variant<std::vector<double>, std::vector<std::string>> values;
  MissingMask missing;

  bool numeric_storage() const {
    return std::holds_alternative<std::vector<double>>(values);
  }
  const std::vector<double>& numeric() const;
  const std::vector<std::string>& text() const;
  std::vector<double>& numeric_mut();
  std::vector<std::string>& text_mut();

  size_t size() const;
  size_t missing_count() const;
  bool is_missing(size_t row) const { return missing[row] != 0; }

  static Column make_numeric(std::string name, std::vector<double> values,
                             ColumnKind kind = ColumnKind::Numeric);
  static Column make_text(std::string name, std::vector<std::string> values,
                          ColumnKind kind = ColumnKind::Categorical);
};

// Typed, named columns over a fixed row count. Immutable in use: every
// pipeline operation copies, edits the copy, and returns it.
class DataTable {
 public:
  DataTable() = default;

  void add_column(Column col);
  void replace_column(size_t index, Column col);

  size_t row_count() const { return row_count_; }
  size_t column_count() const { return columns_.size(); }

  const Column& column(size_t index) const { return columns_.at(index); }
  const Column& column(const std::string& name) const;
  const std::vector<Column>& columns() const { return columns_; }

  // -1 when absent.
  int find_column(const std::string& name) const;
  bool has_column(const std::string& name) const {
    return find_column(name) >= 0;
  }

  // The unique Label column; throws SchemaError when absent or duplicated.
  const Column& label_column() const;
  bool has_label() const;

  DataTable select_rows(std::span<const size_t> rows) const;
  DataTable without_columns(const std::vector<std::string>& names) const;

 private:
  std::vector<Column> columns_;
  std::unordered_map<std::string, size_t> by_name_;
  size_t row_count_ = 0;
  bool sized_ = false;
};

}  // namespace tabdx
