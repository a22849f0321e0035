#pragma once

#include <optional>
#include <string>
#include <vector>

#include "siegel/dimension.hpp"
#include "siegel/rational.hpp"

namespace siegel {

/// One published reference table of dimensions: rows are levels N,
/// columns are weights k.  For the vector table the weight vector is
/// (k+1, k, k).
struct TableSpec {
  std::string id;  // n1..n6, vector_n3
  int degree;
  bool vector_weight;
  std::vector<long> k_values;
  std::vector<long> levels;
  // expected[level_index][k_index], decimal strings (values exceed 64 bits)
  std::vector<std::vector<const char*>> expected;
};

const std::vector<TableSpec>& reference_tables();

struct CellResult {
  std::string table_id;
  long k = 0;
  long level = 0;
  Path path = Path::t115;
  Int expected;
  Rational computed;
  bool ok = false;
};

/// Recomputes every cell of the table via the given path ("t115", "c12",
/// "closed", "vector" or "all"); paths inapplicable to a table are
/// skipped.  Cells are evaluated concurrently; result order is
/// deterministic.
std::vector<CellResult> verify_table(const TableSpec& table, const std::string& path);

}  // namespace siegel
