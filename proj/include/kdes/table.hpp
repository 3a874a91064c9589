#pragma once

#include "kdes/oracle.hpp"
#include "kdes/poly.hpp"
#include "kdes/report.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kdes {

enum class Family { A, B };
enum class Method { Oracle, Recursive, Closed };
enum class Format { Text, Csv, Json };

Family parse_family(std::string_view s);
Method parse_method(std::string_view s);
Format parse_format(std::string_view s);
std::string_view to_string(Family f);
std::string_view to_string(Method m);

struct TableRow {
  int n = 0;
  // A rows use z0 only.
  BiPoly poly;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct Table {
  Family family = Family::A;
  int k = 2;
  Method method = Method::Recursive;
  std::vector<TableRow> rows;
  friend bool operator==(const Table&, const Table&) = default;
};

Table build_table(Family family, int k, IntRange lengths, Method method, const OracleOptions& opts = {});

std::string render(const Table& t, Format format);
Table parse_table_json(const std::string& text);

struct Selector {
  enum class Kind { Constant, Top, Degree, Total } kind = Kind::Constant;
  int degree = 0;
  // -1: both z-classes added together.
  int z = -1;
};

// "const", "top", "total" or "deg:D"; z is "both", "0" or "1".
Selector parse_selector(std::string_view what, std::string_view z = "both");
std::vector<BigInt> extract_sequence(const Table& t, const Selector& sel);
// "1, 2, 2, 12"
std::string render_sequence(const std::vector<BigInt>& seq);

}  // namespace kdes
