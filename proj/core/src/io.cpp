#include "qchaos/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

namespace qchaos::io {

namespace {

constexpr char kMagic[8] = {'Q', 'C', 'M', 'X', '0', '0', '0', '1'};

static_assert(std::endian::native == std::endian::little, "binary dumps assume a little-endian host");

void put_u64(std::ostream& os, std::uint64_t v) { os.write(reinterpret_cast<const char*>(&v), 8); }

std::uint64_t get_u64(std::istream& is) {
  std::uint64_t v = 0;
  is.read(reinterpret_cast<char*>(&v), 8);
  return v;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

void write_matrix_binary(const std::string& path, const Mat& m) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path);
  os.write(kMagic, 8);
  put_u64(os, static_cast<std::uint64_t>(m.rows()));
  put_u64(os, static_cast<std::uint64_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      double v[2] = {m(i, j).real(), m(i, j).imag()};
      os.write(reinterpret_cast<const char*>(v), sizeof v);
    }
}

Mat read_matrix_binary(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kMagic, 8) != 0) throw std::runtime_error("bad matrix dump header: " + path);
  auto rows = get_u64(is);
  auto cols = get_u64(is);
  Mat m(rows, cols);
  for (std::uint64_t i = 0; i < rows; ++i)
    for (std::uint64_t j = 0; j < cols; ++j) {
      double v[2];
      is.read(reinterpret_cast<char*>(v), sizeof v);
      m(i, j) = cplx(v[0], v[1]);
    }
  if (!is) throw std::runtime_error("truncated matrix dump: " + path);
  return m;
}

void write_matrix_csv(const std::string& path, const Mat& m) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  os << "row,col,re,im\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      os << i << ',' << j << ',' << fmt(m(i, j).real()) << ',' << fmt(m(i, j).imag()) << '\n';
}

Mat read_matrix_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot read matrix " + path);
  std::string line;
  std::vector<std::tuple<long, long, double, double>> entries;
  long rows = 0, cols = 0;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line.rfind("row", 0) == 0) continue;
    long i, j;
    double re, im;
    if (std::sscanf(line.c_str(), "%ld,%ld,%lf,%lf", &i, &j, &re, &im) != 4 || i < 0 || j < 0)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected row,col,re,im");
    entries.emplace_back(i, j, re, im);
    rows = std::max(rows, i + 1);
    cols = std::max(cols, j + 1);
  }
  Mat m = Mat::Zero(rows, cols);
  for (auto [i, j, re, im] : entries) m(i, j) = cplx(re, im);
  return m;
}

void Table::add(const std::string& name, std::vector<double> col) {
  if (!columns.empty() && col.size() != rows()) throw std::invalid_argument("column length mismatch: " + name);
  header.push_back(name);
  columns.push_back(std::move(col));
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  for (const auto& c : t.comments) os << "# " << c << '\n';
  for (std::size_t j = 0; j < t.header.size(); ++j) os << (j ? "," : "") << t.header[j];
  os << '\n';
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << fmt(t.columns[j][i]);
    os << '\n';
  }
  return os.str();
}

void write_csv(const std::string& path, const Table& t) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  os << to_csv(t);
}

KeyValue parse_key_value(const std::string& text) {
  KeyValue kv;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) eq = line.find(':');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

KeyValue read_key_value_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot read config " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_key_value(ss.str());
}

std::string fmt(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

}  // namespace qchaos::io
