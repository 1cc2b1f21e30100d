#include "maxmin/csv_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "maxmin/errors.hpp"

namespace maxmin {

namespace {

bool is_blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

double parse_number(std::string_view field, std::string_view source,
                    std::size_t line, std::size_t column) {
  std::string_view t = trim(field);
  if (t.empty()) {
    throw ParseError(std::string(source) + ": empty field at line " +
                         std::to_string(line) + ", column " +
                         std::to_string(column),
                     line, column);
  }
  if (t.front() == '+') t.remove_prefix(1);  // from_chars rejects a leading +
  double value = 0.0;
  const auto result = std::from_chars(t.data(), t.data() + t.size(), value);
  if (result.ec != std::errc{} || result.ptr != t.data() + t.size() ||
      !std::isfinite(value)) {
    throw ParseError(std::string(source) + ": non-numeric field '" +
                         std::string(field) + "' at line " +
                         std::to_string(line) + ", column " +
                         std::to_string(column),
                     line, column);
  }
  return value;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Site names are written bare unless they need quoting.
std::string format_name(const std::string& name) {
  const bool needs_quotes =
      name.find_first_of(",\"\n") != std::string::npos ||
      (!name.empty() && (std::isspace(static_cast<unsigned char>(
                             name.front())) ||
                         std::isspace(static_cast<unsigned char>(
                             name.back()))));
  if (!needs_quotes) return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

DenseMatrix parse_matrix_csv(std::istream& in, std::string_view source_name) {
  std::vector<std::vector<double>> rows;
  std::size_t cols = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (is_blank(line)) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (!rows.empty() && fields.size() != cols) {
      throw ParseError(std::string(source_name) + ": expected " +
                           std::to_string(cols) + " fields but got " +
                           std::to_string(fields.size()) + " at line " +
                           std::to_string(line_no),
                       line_no, fields.size());
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (std::size_t j = 0; j < fields.size(); ++j) {
      row.push_back(parse_number(fields[j], source_name, line_no, j + 1));
    }
    cols = row.size();
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError(std::string(source_name) + ": no matrix rows found", 1,
                     1);
  }
  DenseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

DenseMatrix read_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open matrix file: " + path.string());
  }
  return parse_matrix_csv(in, path.string());
}

std::string format_matrix_csv(const DenseMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

void write_matrix_csv(const DenseMatrix& m,
                      const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write matrix file: " + path.string());
  }
  out << format_matrix_csv(m);
}

GeoDataset parse_geo_csv(std::istream& in, std::string_view source_name) {
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  std::vector<std::string> names;
  std::vector<std::vector<double>> values;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (is_blank(line)) continue;
    if (!saw_header) {
      if (trim(line) != "site,Twin,Rwin,Ewin,Tsum,Rsum,Esum") {
        throw ParseError(std::string(source_name) +
                             ": expected header site,Twin,Rwin,Ewin,Tsum,"
                             "Rsum,Esum",
                         line_no, 1);
      }
      saw_header = true;
      continue;
    }
    // Name field: quoted (doubled quotes escape) or bare up to the comma.
    std::string name;
    bool quoted = false;
    std::size_t pos = 0;
    if (!line.empty() && line[0] == '"') {
      quoted = true;
      pos = 1;
      bool closed = false;
      while (pos < line.size()) {
        if (line[pos] == '"') {
          if (pos + 1 < line.size() && line[pos + 1] == '"') {
            name += '"';
            pos += 2;
            continue;
          }
          ++pos;
          closed = true;
          break;
        }
        name += line[pos++];
      }
      if (!closed || (pos < line.size() && line[pos] != ',')) {
        throw ParseError(std::string(source_name) +
                             ": malformed quoted site name at line " +
                             std::to_string(line_no),
                         line_no, 1);
      }
      if (pos < line.size()) ++pos;  // the comma after the closing quote
    } else {
      const std::size_t comma = line.find(',');
      name = line.substr(0, comma == std::string::npos ? line.size() : comma);
      pos = comma == std::string::npos ? line.size() : comma + 1;
    }
    if (!quoted) name = std::string(trim(name));
    if (name.empty()) {
      throw ParseError(std::string(source_name) + ": empty site name at line " +
                           std::to_string(line_no),
                       line_no, 1);
    }
    const std::vector<std::string> fields =
        split_fields(line.substr(pos));
    if (fields.size() != 6) {
      throw ParseError(std::string(source_name) + ": expected 6 values after "
                           "the site name at line " +
                           std::to_string(line_no),
                       line_no, fields.size() + 1);
    }
    std::vector<double> row;
    row.reserve(6);
    for (std::size_t j = 0; j < 6; ++j) {
      row.push_back(parse_number(fields[j], source_name, line_no, j + 2));
    }
    names.push_back(std::move(name));
    values.push_back(std::move(row));
  }
  if (!saw_header) {
    throw ParseError(std::string(source_name) + ": missing header line", 1, 1);
  }
  if (names.empty()) {
    throw ParseError(std::string(source_name) + ": no site rows found", line_no,
                     1);
  }
  GeoDataset data;
  data.site_names = std::move(names);
  data.winter = DenseMatrix(values.size(), 3);
  data.summer = DenseMatrix(values.size(), 3);
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      data.winter(i, j) = values[i][j];
      data.summer(i, j) = values[i][j + 3];
    }
  }
  return data;
}

GeoDataset read_geo_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open dataset file: " + path.string());
  }
  return parse_geo_csv(in, path.string());
}

std::string format_scatter_csv(const GeoScoreReport& report) {
  std::string out = "site,ax,bx,score\n";
  for (const auto& s : report.per_site) {
    out += format_name(s.name);
    out += ',';
    out += format_double(s.ax);
    out += ',';
    out += format_double(s.bx);
    out += ',';
    out += format_double(s.score);
    out += '\n';
  }
  return out;
}

void write_scatter_csv(const GeoScoreReport& report,
                       const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write scatter file: " + path.string());
  }
  out << format_scatter_csv(report);
}

}  // namespace maxmin
