#pragma once

#include <map>
#include <string>
#include <vector>

#include "qchaos/types.hpp"

namespace qchaos::io {

// Binary dump: 8-byte magic "QCMX0001", uint64 rows, uint64 cols (little
// endian), then rows*cols (re, im) float64 pairs in row-major order.
void write_matrix_binary(const std::string& path, const Mat& m);
Mat read_matrix_binary(const std::string& path);

// CSV with columns row,col,re,im. The reader sizes the matrix from the
// largest indices; missing entries are zero.
void write_matrix_csv(const std::string& path, const Mat& m);
Mat read_matrix_csv(const std::string& path);

// Column table; all columns must have equal length.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
  std::vector<std::string> comments;

  void add(const std::string& name, std::vector<double> col);
  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

void write_csv(const std::string& path, const Table& t);
std::string to_csv(const Table& t);

// Flat `key = value` document; '#' starts a comment.
using KeyValue = std::map<std::string, std::string>;
KeyValue parse_key_value(const std::string& text);
KeyValue read_key_value_file(const std::string& path);

// Shortest round-trip formatting used for all text output.
std::string fmt(double x);

}  // namespace qchaos::io
