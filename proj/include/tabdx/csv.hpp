#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tabdx/table.hpp"

namespace tabdx {

using Schema = std::vector<std::pair<std::string, ColumnKind>>;

// RFC 4180 CSV with a required header row. Empty fields and the token "NA"
// read back as missing; missing is always written as an empty field.
// Numeric cells use shortest round-trip formatting, so load -> write -> load
// is a fixed point.
DataTable load_csv(const std::string& path, const Schema& schema);
DataTable load_csv(std::istream& in, const Schema& schema,
                   const std::string& origin = "<stream>");

void write_csv(const DataTable& table, const std::string& path);
void write_csv(const DataTable& table, std::ostream& out);

// Schema files are key/value text: one "column = kind" line per column.
Schema load_schema(const std::string& path);
Schema load_schema(std::istream& in, const std::string& origin = "<stream>");
void write_schema(const Schema& schema, const std::string& path);

// Schema for an unlabeled CSV: columns whose non-missing cells all parse as
// numbers become numeric, the rest categorical; `label_name` becomes the
// label. Convenience for ad-hoc inputs without a schema file.
Schema infer_schema(const std::string& path, const std::string& label_name);

// "cohort.csv" -> "cohort.schema"; the convention the CLI uses to find the
// schema written next to a CSV.
std::string sibling_schema_path(const std::string& csv_path);

// Shortest round-trip decimal form, shared by every CSV/report writer.
std::string format_double(double value);

}  // namespace tabdx
