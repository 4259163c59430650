#include "tabdx/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "tabdx/error.hpp"

namespace tabdx {
namespace {

constexpr const char* kMissingToken = "NA";

bool is_missing_field(const std::string& field) {
  return field.empty() || field == kMissingToken;
}

// One logical CSV record; quoted fields may span physical lines.
// Returns false at end of input. `line_no` tracks the record's first line.
bool read_record(std::istream& in, std::vector<std::string>& fields,
                 size_t& line_no, const std::string& origin) {
  fields.clear();
  int ch = in.get();
  if (ch == EOF) return false;

  std::string field;
  bool in_quotes = false;
  bool any = false;
  const size_t start_line = line_no;
  while (ch != EOF) {
    any = true;
    const char c = static_cast<char>(ch);
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          field.push_back('"');
          in.get();
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line_no;
        field.push_back(c);
      }
    } else if (c == '"') {
      if (!field.empty()) {
        throw ParseError(origin + ":" + std::to_string(start_line) +
                         ": stray quote inside unquoted field");
      }
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\r') {
      // swallow; CRLF handled at the '\n'
    } else if (c == '\n') {
      ++line_no;
      break;
    } else {
      field.push_back(c);
    }
    ch = in.get();
  }
  if (in_quotes) {
    throw ParseError(origin + ":" + std::to_string(start_line) +
                     ": unterminated quoted field");
  }
  if (!any) return false;
  fields.push_back(std::move(field));
  return true;
}

void write_field(std::ostream& out, const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) {
    out << field;
    return;
  }
  out << '"';
  for (char c : field) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

DataTable load_csv(const std::string& path, const Schema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_csv(in, schema, path);
}

DataTable load_csv(std::istream& in, const Schema& schema,
                   const std::string& origin) {
  if (schema.empty()) throw SchemaError("empty schema");
  {
    std::unordered_set<std::string> seen;
    for (const auto& [name, kind] : schema) {
      if (!seen.insert(name).second) {
        throw SchemaError("duplicate column name '" + name + "' in schema");
      }
    }
  }

  size_t line_no = 1;
  std::vector<std::string> header;
  if (!read_record(in, header, line_no, origin)) {
    throw ParseError(origin + ": missing header row");
  }
  {
    std::unordered_set<std::string> seen;
    for (const std::string& name : header) {
      if (!seen.insert(name).second) {
        throw SchemaError(origin + ": duplicate column name '" + name +
                          "' in header");
      }
    }
  }
  if (header.size() != schema.size()) {
    throw SchemaError(origin + ": header has " + std::to_string(header.size()) +
                      " columns, schema has " + std::to_string(schema.size()));
  }

  // Columns may appear in any order; the table keeps file order.
  std::vector<ColumnKind> kinds(header.size());
  for (size_t j = 0; j < header.size(); ++j) {
    const auto it = std::find_if(schema.begin(), schema.end(),
                                 [&](const auto& entry) {
                                   return entry.first == header[j];
                                 });
    if (it == schema.end()) {
      throw SchemaError(origin + ": header column '" + header[j] +
                        "' not present in schema");
    }
    kinds[j] = it->second;
  }

  const size_t n_cols = header.size();
  std::vector<std::vector<double>> numeric(n_cols);
  std::vector<std::vector<std::string>> text(n_cols);
  std::vector<MissingMask> missing(n_cols);
  std::vector<bool> numeric_storage(n_cols);
  for (size_t j = 0; j < n_cols; ++j) {
    numeric_storage[j] = kinds[j] == ColumnKind::Numeric;
  }

  std::vector<std::string> fields;
  while (true) {
    const size_t record_line = line_no;
    if (!read_record(in, fields, line_no, origin)) break;
    if (fields.size() != n_cols) {
      throw ParseError(origin + ":" + std::to_string(record_line) + ": row has " +
                       std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(n_cols));
    }
    for (size_t j = 0; j < n_cols; ++j) {
      const std::string& field = fields[j];
      const bool miss = is_missing_field(field);
      missing[j].push_back(miss ? 1 : 0);
      if (numeric_storage[j]) {
        double value = 0.0;
        if (!miss) {
          const char* first = field.data();
          const char* last = field.data() + field.size();
          const auto res = std::from_chars(first, last, value);
          if (res.ec != std::errc{} || res.ptr != last) {
            throw ParseError(origin + ":" + std::to_string(record_line) +
                             ": column '" + header[j] + "': cannot parse '" +
                             field + "' as numeric");
          }
        }
        numeric[j].push_back(value);
      } else {
        text[j].push_back(miss ? std::string{} : field);
      }
    }
  }

  DataTable table;
  for (size_t j = 0; j < n_cols; ++j) {
    Column col;
    col.name = header[j];
    col.kind = kinds[j];
    col.missing = std::move(missing[j]);
    if (numeric_storage[j]) {
      col.values = std::move(numeric[j]);
    } else {
      col.values = std::move(text[j]);
    }
    table.add_column(std::move(col));
  }
  return table;
}

void write_csv(const DataTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PipelineError("cannot write '" + path + "'");
  write_csv(table, out);
}

void write_csv(const DataTable& table, std::ostream& out) {
  for (size_t j = 0; j < table.column_count(); ++j) {
    if (j > 0) out << ',';
    write_field(out, table.column(j).name);
  }
  out << '\n';
  for (size_t i = 0; i < table.row_count(); ++i) {
    for (size_t j = 0; j < table.column_count(); ++j) {
      if (j > 0) out << ',';
      const Column& col = table.column(j);
      if (col.is_missing(i)) continue;  // empty field
      if (col.numeric_storage()) {
        out << format_double(col.numeric()[i]);
      } else {
        write_field(out, col.text()[i]);
      }
    }
    out << '\n';
  }
}

Schema load_schema(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open schema file '" + path + "'");
  return load_schema(in, path);
}

Schema load_schema(std::istream& in, const std::string& origin) {
  Schema schema;
  std::unordered_set<std::string> seen;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw SchemaError(origin + ":" + std::to_string(line_no) +
                        ": expected 'column = kind'");
    }
    const std::string name = trim(stripped.substr(0, eq));
    const std::string kind = trim(stripped.substr(eq + 1));
    if (name.empty()) {
      throw SchemaError(origin + ":" + std::to_string(line_no) +
                        ": empty column name");
    }
    if (!seen.insert(name).second) {
      throw SchemaError(origin + ": duplicate column name '" + name + "'");
    }
    schema.emplace_back(name, column_kind_from_string(kind));
  }
  return schema;
}

void write_schema(const Schema& schema, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PipelineError("cannot write '" + path + "'");
  for (const auto& [name, kind] : schema) {
    out << name << " = " << to_string(kind) << '\n';
  }
}

Schema infer_schema(const std::string& path, const std::string& label_name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");

  size_t line_no = 1;
  std::vector<std::string> header;
  if (!read_record(in, header, line_no, path)) {
    throw ParseError(path + ": missing header row");
  }
  std::vector<bool> all_numeric(header.size(), true);
  std::vector<bool> any_value(header.size(), false);
  std::vector<std::string> fields;
  while (read_record(in, fields, line_no, path)) {
    if (fields.size() != header.size()) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": row has wrong field count");
    }
    for (size_t j = 0; j < fields.size(); ++j) {
      if (is_missing_field(fields[j])) continue;
      any_value[j] = true;
      double v = 0.0;
      const char* last = fields[j].data() + fields[j].size();
      const auto res = std::from_chars(fields[j].data(), last, v);
      if (res.ec != std::errc{} || res.ptr != last) all_numeric[j] = false;
    }
  }

  Schema schema;
  bool saw_label = false;
  for (size_t j = 0; j < header.size(); ++j) {
    ColumnKind kind =
        (any_value[j] && all_numeric[j]) ? ColumnKind::Numeric
                                         : ColumnKind::Categorical;
    if (header[j] == label_name) {
      kind = ColumnKind::Label;
      saw_label = true;
    }
    schema.emplace_back(header[j], kind);
  }
  if (!saw_label) {
    throw PipelineError(path + ": no column named '" + label_name + "'");
  }
  return schema;
}

std::string sibling_schema_path(const std::string& csv_path) {
  const auto dot = csv_path.find_last_of('.');
  const auto slash = csv_path.find_last_of("/\\");
  if (dot == std::string::npos ||
      (slash != std::string::npos && dot < slash)) {
    return csv_path + ".schema";
  }
  return csv_path.substr(0, dot) + ".schema";
}

}  // namespace tabdx
