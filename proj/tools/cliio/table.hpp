#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace thermaljc::cli {

/// Input that cannot be parsed; the message names the offending line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Column-major numeric table, the in-memory form of every data file.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column_index(std::string_view name) const;  // throws ParseError
  std::vector<double> column(std::string_view name) const;
};

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

/// Strict full-string parse (accepts "nan" and "inf").
double parse_double(std::string_view text);

void write_csv(std::ostream& out, const Table& table);
Table read_csv(std::istream& in);

/// {"metadata": ..., "columns": [names], "data": {name: [values]}}.
void write_json(std::ostream& out, const Table& table,
                const nlohmann::ordered_json& metadata);
Table read_json(std::istream& in);

}  // namespace thermaljc::cli
