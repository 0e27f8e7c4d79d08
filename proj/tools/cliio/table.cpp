#include "cliio/table.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace thermaljc::cli {

std::size_t Table::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw ParseError("no column named '" + std::string(name) + "'");
}

std::vector<double> Table::column(std::string_view name) const {
  const auto index = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[index]);
  return out;
}

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc() || result.ptr != last) {
    throw ParseError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    out << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

Table read_csv(std::istream& in) {
  Table table;
  std::string line;
  std::size_t line_number = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line);
    if (!have_header) {
      for (const auto f : fields) {
        if (f.empty()) {
          throw ParseError("line " + std::to_string(line_number) + ": empty column name");
        }
        table.columns.emplace_back(f);
      }
      have_header = true;
      continue;
    }
    if (fields.size() != table.columns.size()) {
      std::ostringstream msg;
      msg << "line " << line_number << ": expected " << table.columns.size()
          << " fields, found " << fields.size();
      throw ParseError(msg.str());
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto f : fields) {
      try {
        row.push_back(parse_double(f));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_number) + ": " + e.what());
      }
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError("line 1: missing CSV header");
  return table;
}

void write_json(std::ostream& out, const Table& table,
                const nlohmann::ordered_json& metadata) {
  nlohmann::ordered_json doc;
  doc["metadata"] = metadata;
  doc["columns"] = table.columns;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) values.push_back(row[c]);
    data[table.columns[c]] = std::move(values);
  }
  doc["data"] = std::move(data);
  out << doc.dump(1) << '\n';
}

Table read_json(std::istream& in) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  Table table;
  try {
    table.columns = doc.at("columns").get<std::vector<std::string>>();
    const auto& data = doc.at("data");
    std::size_t length = 0;
    if (!table.columns.empty()) length = data.at(table.columns.front()).size();
    table.rows.assign(length, std::vector<double>(table.columns.size()));
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const auto& values = data.at(table.columns[c]);
      if (values.size() != length) throw ParseError("ragged data arrays");
      for (std::size_t r = 0; r < length; ++r) {
        table.rows[r][c] = values[r].is_null() ? std::nan("") : values[r].get<double>();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return table;
}

}  // namespace thermaljc::cli
