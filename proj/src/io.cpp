#include "boolcd/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace boolcd {

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  return line;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += ch;
    }
  }
  fields.push_back(field);
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_integer_field(const std::string& s) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  }
  return true;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open " + path.string() + " for reading");
  }
  return in;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // LF line endings on every platform
  if (!out) {
    throw DataError("cannot open " + path.string() + " for writing");
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

BoolMatrix binarize(const RealMatrix& raw, const ThresholdSpec& thresholds) {
  if (thresholds.thresholds.size() != raw.cols) {
    throw ConfigError("binarize: " + std::to_string(raw.cols) + " feature columns but " +
                      std::to_string(thresholds.thresholds.size()) + " thresholds");
  }
  BoolMatrix out(raw.rows, raw.cols);
  for (std::size_t i = 0; i < raw.rows; ++i) {
    for (std::size_t j = 0; j < raw.cols; ++j) {
      const double v = raw.at(i, j);
      if (!std::isfinite(v)) {
        throw DataError("binarize: non-finite value at cell (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      }
      out.set(i, j, v >= thresholds.thresholds[j]);
    }
  }
  return out;
}

BoolMatrix load_slot_csv(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  std::vector<std::vector<int>> rows;
  std::string line;
  std::size_t line_no = 0;
  bool first_content_line = true;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (first_content_line) {
      first_content_line = false;
      bool all_numeric = true;
      for (const std::string& f : fields) {
        if (!is_integer_field(f)) {
          all_numeric = false;
          break;
        }
      }
      if (!all_numeric) {
        continue;  // header row
      }
    }
    std::vector<int> row;
    row.reserve(fields.size());
    for (std::size_t j = 0; j < fields.size(); ++j) {
      const std::string f = trim(fields[j]);
      if (f != "0" && f != "1") {
        throw ParseError(path.string() + ":" + std::to_string(line_no) + ": cell at column " +
                         std::to_string(j + 1) + " is '" + f + "', expected 0 or 1");
      }
      row.push_back(f == "1" ? 1 : 0);
    }
    if (width == 0) {
      width = row.size();
    } else if (row.size() != width) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": ragged row with " +
                       std::to_string(row.size()) + " cells, expected " + std::to_string(width));
    }
    rows.push_back(std::move(row));
  }
  return BoolMatrix::from_rows(rows);
}

void save_slot_csv(const BoolMatrix& m, const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << (m.get(i, j) ? '1' : '0');
    }
    out << '\n';
  }
}

BoolTensor3 load_tensor_btt(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) {
    throw ParseError(path.string() + ": empty file, expected btt header");
  }
  ++line_no;
  line = strip_cr(line);
  std::istringstream header(line);
  std::string magic;
  int version = 0;
  long long o = -1, f = -1, t = -1;
  if (!(header >> magic >> version >> o >> f >> t) || magic != "btt" || version != 1 || o < 0 ||
      f < 0 || t < 0) {
    throw ParseError(path.string() + ":1: malformed header '" + line +
                     "', expected 'btt 1 <O> <F> <T>'");
  }
  BoolTensor3 x(static_cast<std::size_t>(o), static_cast<std::size_t>(f),
                static_cast<std::size_t>(t));
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (trim(line).empty()) continue;
    std::istringstream cells(line);
    long long co = -1, cf = -1, ct = -1;
    if (!(cells >> co >> cf >> ct)) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": expected 'o f t' triple, got '" + line + "'");
    }
    std::string extra;
    if (cells >> extra) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": trailing tokens after triple");
    }
    if (co < 0 || cf < 0 || ct < 0 || co >= o || cf >= f || ct >= t) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": index (" +
                       std::to_string(co) + "," + std::to_string(cf) + "," + std::to_string(ct) +
                       ") out of range for dims (" + std::to_string(o) + "," +
                       std::to_string(f) + "," + std::to_string(t) + ")");
    }
    x.set(static_cast<std::size_t>(co), static_cast<std::size_t>(cf),
          static_cast<std::size_t>(ct), true);
  }
  return x;
}

void save_tensor_btt(const BoolTensor3& x, const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  out << "btt 1 " << x.dim_o() << ' ' << x.dim_f() << ' ' << x.dim_t() << '\n';
  for (std::size_t t = 0; t < x.dim_t(); ++t) {
    for (std::size_t f = 0; f < x.dim_f(); ++f) {
      for (std::size_t o = 0; o < x.dim_o(); ++o) {
        if (x.get(o, f, t)) {
          out << o << ' ' << f << ' ' << t << '\n';
        }
      }
    }
  }
}

void save_real_csv(const RealMatrix& m, const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) out << ',';
      out << format_double(m.at(i, j));
    }
    out << '\n';
  }
}

RealMatrix load_real_csv(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (trim(line).empty()) continue;
    std::vector<double> row;
    for (const std::string& field : split_csv_line(line)) {
      try {
        row.push_back(std::stod(trim(field)));
      } catch (const std::exception&) {
        throw ParseError(path.string() + ":" + std::to_string(line_no) +
                         ": cannot parse real value '" + field + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": ragged row");
    }
    rows.push_back(std::move(row));
  }
  RealMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

}  // namespace boolcd
