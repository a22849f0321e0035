#include "siegel/tables.hpp"

#include <future>

#include "siegel/errors.hpp"

namespace siegel {

const std::vector<TableSpec>& reference_tables() {
  static const std::vector<TableSpec> tables = {
      {"n1", 1, false,
       {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19},
       {3, 4, 5},
       {{"0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12",
         "13", "14", "15", "16"},
        {"1", "3", "5", "7", "9", "11", "13", "15", "17", "19", "21", "23",
         "25", "27", "29", "31", "33"},
        {"4", "9", "14", "19", "24", "29", "34", "39", "44", "49", "54", "59",
         "64", "69", "74", "79", "84"}}},
      {"n2", 2, false,
       {4, 5, 6, 7, 8, 9, 10, 11},
       {3, 4, 5},
       {{"15", "76", "200", "405", "709", "1130", "1686", "2395"},
        {"360", "1352", "3240", "6280", "10728", "16840", "24872", "35080"},
        {"5655", "18980", "43680", "83005", "140205", "218530", "321230",
         "451555"}}},
      {"n3", 3, false,
       {5, 6, 7, 8},
       {3, 4, 5},
       {{"41132", "260624", "1036100", "3154151"},
        {"14400512", "87671808", "345492480", "1048957952"},
        {"2189096000", "13202280000", "51921714000", "157545444875"}}},
      {"n4", 4, false,
       {6, 7, 8},
       {3, 4, 5},
       {{"4579839810", "59162254866", "456282921627"},
        {"103260267479040", "1412646545915904", "11110964624621568"},
        {"429562396640081250", "5989030815121331250",
         "47380818119506096875"}}},
      {"n5", 5, false,
       {7, 8},
       {3, 4, 5},
       {{"54749238798613788", "1961103357322399719"},
        {"320755407836707217735680", "11468658955208332371034112"},
        {"95447256764961220187148437500",
         "3412305106826559796929248046875"}}},
      {"n6", 6, false,
       {8},
       {3, 4, 5},
       {{"14338236964403459094697389537"},
        {"62657675456744807193941531065954861056"},
        {"3159011529622615201202592700939984097900390625"}}},
      {"vector_n3", 3, true,
       {5, 6, 7, 8},
       {3, 4, 5},
       {{"210210", "1178268", "4357626", "12622974"},
        {"72432640", "395006976", "1451584512", "4196369408"},
        {"10968753250", "59435649000", "218097857250", "630209284250"}}},
  };
  return tables;
}

namespace {

std::vector<Path> paths_for(const TableSpec& table, const std::string& path) {
  std::vector<Path> out;
  auto want = [&](const std::string& p) { return path == "all" || path == p; };
  if (table.vector_weight) {
    if (want("vector")) out.push_back(Path::vector);
    return out;
  }
  if (want("t115")) out.push_back(Path::t115);
  if (want("c12")) out.push_back(Path::c12);
  if (want("closed") && table.degree <= 3) out.push_back(Path::closed);
  if (want("vector")) out.push_back(Path::vector);
  return out;
}

Rational compute_cell(const TableSpec& table, long k, long N, Path p) {
  int n = table.degree;
  if (table.vector_weight) {
    WeightVector w({k + 1, k, k});
    return dim_vector(w, N).total;
  }
  switch (p) {
    case Path::t115: return dim_scalar(n, k, N).total;
    case Path::c12: return dim_scalar_via_c12(n, k, N).total;
    case Path::closed: return closed_form_low_degree(n, k, N);
    case Path::vector: {
      WeightVector w(std::vector<long>(static_cast<std::size_t>(n), k));
      return dim_vector(w, N).total;
    }
  }
  throw OutOfRangeError("unknown path");
}

}  // namespace

std::vector<CellResult> verify_table(const TableSpec& table, const std::string& path) {
  auto paths = paths_for(table, path);
  std::vector<std::future<Rational>> futures;
  std::vector<CellResult> results;
  for (std::size_t li = 0; li < table.levels.size(); ++li) {
    for (std::size_t ki = 0; ki < table.k_values.size(); ++ki) {
      for (Path p : paths) {
        CellResult cell;
        cell.table_id = table.id;
        cell.k = table.k_values[ki];
        cell.level = table.levels[li];
        cell.path = p;
        cell.expected = Int(table.expected[li][ki]);
        results.push_back(std::move(cell));
        futures.push_back(std::async(std::launch::async, compute_cell,
                                     std::cref(table), table.k_values[ki],
                                     table.levels[li], p));
      }
    }
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    results[i].computed = futures[i].get();
    results[i].ok = results[i].computed == Rational(results[i].expected);
  }
  return results;
}

}  // namespace siegel
