#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "siegel/dimension.hpp"
#include "siegel/errors.hpp"
#include "siegel/shintani.hpp"
#include "siegel/tables.hpp"

using nlohmann::ordered_json;
using namespace siegel;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitRange = 2;
constexpr int kExitMismatch = 3;

ordered_json rational_json(const Rational& v) {
  return ordered_json{{"num", v.num().str()}, {"den", v.den().str()}};
}

ordered_json report_json(const DimensionReport& rep) {
  ordered_json j;
  j["degree"] = rep.degree;
  j["weights"] = rep.weights;
  j["level"] = rep.level;
  j["path"] = path_name(rep.path);
  ordered_json terms = ordered_json::array();
  for (const auto& [r, v] : rep.terms)
    terms.push_back(ordered_json{{"r", r}, {"value", rational_json(v)}});
  j["terms"] = terms;
  j["total"] = rational_json(rep.total);
  j["proven_range"] = rep.proven_range;
  return j;
}

void print_report(const DimensionReport& rep, bool json, bool approx, bool quiet) {
  if (quiet) return;
  if (json) {
    std::cout << report_json(rep).dump(2) << "\n";
    return;
  }
  std::cout << "degree " << rep.degree << ", weights (";
  for (std::size_t i = 0; i < rep.weights.size(); ++i)
    std::cout << (i ? "," : "") << rep.weights[i];
  std::cout << "), level " << rep.level << ", path " << path_name(rep.path) << "\n";
  for (const auto& [r, v] : rep.terms)
    std::cout << "  r=" << r << ": " << v.str() << "\n";
  std::cout << "total " << rep.total.str();
  if (approx) std::cout << "  (~" << rep.total.approx() << ")";
  if (!rep.proven_range) std::cout << "  [outside proven range]";
  std::cout << "\n";
}

struct DimArgs {
  int degree = 0;
  long weight = 0;
  std::string weights_csv;
  long level = 0;
  std::string path = "";
  bool json = false;
  bool approx = false;
  bool cross_check = false;
  bool force = false;
  bool quiet = false;
};

int run_dim(const DimArgs& a) {
  std::vector<long> weights;
  if (!a.weights_csv.empty()) {
    if (a.weight != 0) {
      std::cerr << "error: --weight and --weights are mutually exclusive\n";
      return kExitInput;
    }
    std::stringstream ss(a.weights_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        weights.push_back(std::stol(tok));
      } catch (const std::exception&) {
        std::cerr << "error: bad weight entry '" << tok << "'\n";
        return kExitInput;
      }
    }
    if (weights.empty()) {
      std::cerr << "error: --weights is empty\n";
      return kExitInput;
    }
    if (a.degree != 0 && a.degree != static_cast<int>(weights.size())) {
      std::cerr << "error: --degree disagrees with the length of --weights\n";
      return kExitInput;
    }
    for (std::size_t i = 1; i < weights.size(); ++i) {
      if (weights[i] > weights[i - 1]) {
        std::cerr << "error: weights must be weakly decreasing\n";
        return kExitInput;
      }
    }
  } else {
    if (a.degree < 1 || a.weight == 0) {
      std::cerr << "error: need --degree and --weight, or --weights\n";
      return kExitInput;
    }
    weights.assign(static_cast<std::size_t>(a.degree), a.weight);
  }
  if (a.level < 1) {
    std::cerr << "error: need --level >= 1\n";
    return kExitInput;
  }

  int n = static_cast<int>(weights.size());
  bool scalar = true;
  for (long w : weights) scalar = scalar && w == weights[0];

  std::string path = a.path;
  if (path.empty()) path = scalar ? "t115" : "vector";
  if (!scalar && path != "vector" && path != "all") {
    std::cerr << "error: path " << path << " applies to scalar weights only\n";
    return kExitInput;
  }

  std::vector<Path> paths;
  if (a.cross_check || path == "all") {
    if (scalar) {
      paths = {Path::t115, Path::c12};
      if (n <= 3) paths.push_back(Path::closed);
      paths.push_back(Path::vector);
    } else {
      paths = {Path::vector};
    }
  } else if (path == "t115") {
    paths = {Path::t115};
  } else if (path == "c12") {
    paths = {Path::c12};
  } else if (path == "closed") {
    if (n > 3) {
      std::cerr << "error: closed path exists for degree <= 3 only\n";
      return kExitInput;
    }
    paths = {Path::closed};
  } else if (path == "vector") {
    paths = {Path::vector};
  } else {
    std::cerr << "error: unknown path '" << path << "'\n";
    return kExitInput;
  }

  try {
    std::vector<DimensionReport> reports;
    for (Path p : paths) {
      DimensionReport rep;
      switch (p) {
        case Path::t115:
          rep = dim_scalar(n, weights[0], a.level, a.force);
          break;
        case Path::c12:
          rep = dim_scalar_via_c12(n, weights[0], a.level, a.force);
          break;
        case Path::closed: {
          rep.degree = n;
          rep.weights = weights;
          rep.level = a.level;
          rep.path = p;
          rep.total = closed_form_low_degree(n, weights[0], a.level, a.force);
          rep.proven_range = weights[0] > n + 1 && a.level > 2;
          break;
        }
        case Path::vector:
          rep = dim_vector(WeightVector(weights), a.level, a.force);
          break;
      }
      reports.push_back(std::move(rep));
    }
    for (std::size_t i = 1; i < reports.size(); ++i) {
      if (reports[i].total != reports[0].total) {
        if (!a.quiet)
          std::cerr << "mismatch: " << path_name(reports[0].path) << " gives "
                    << reports[0].total.str() << " but " << path_name(reports[i].path)
                    << " gives " << reports[i].total.str() << "\n";
        return kExitMismatch;
      }
    }
    print_report(reports.front(), a.json, a.approx, a.quiet);
    if (!a.quiet && reports.size() > 1)
      std::cout << "cross-check: " << reports.size() << " paths agree\n";
    return kExitOk;
  } catch (const OutOfProvenRangeError& e) {
    std::cerr << "out of proven range: " << e.what() << " (use --force)\n";
    return kExitRange;
  } catch (const OutOfRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PoleOrZeroError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

struct TablesArgs {
  std::string path = "all";
  std::string only;
  bool quiet = false;
};

int run_tables(const TablesArgs& a) {
  if (a.path != "all" && a.path != "t115" && a.path != "c12" &&
      a.path != "closed" && a.path != "vector") {
    std::cerr << "error: unknown path '" << a.path << "'\n";
    return kExitInput;
  }
  bool found = false;
  bool all_ok = true;
  long cells = 0;
  for (const TableSpec& table : reference_tables()) {
    if (!a.only.empty() && table.id != a.only) continue;
    found = true;
    for (const CellResult& cell : verify_table(table, a.path)) {
      ++cells;
      all_ok = all_ok && cell.ok;
      if (!a.quiet) {
        std::cout << (cell.ok ? "PASS" : "FAIL") << " " << cell.table_id << " k="
                  << cell.k << " N=" << cell.level << " path=" << path_name(cell.path)
                  << " expected " << cell.expected.str();
        if (!cell.ok) std::cout << " got " << cell.computed.str();
        std::cout << "\n";
      }
    }
  }
  if (!found) {
    std::cerr << "error: no table named '" << a.only << "'\n";
    return kExitInput;
  }
  if (!a.quiet)
    std::cout << cells << " cells checked, " << (all_ok ? "all PASS" : "some FAIL")
              << "\n";
  return all_ok ? kExitOk : kExitMismatch;
}

void print_value(const Rational& v, bool approx, bool quiet) {
  if (quiet) return;
  std::cout << v.str();
  if (approx) std::cout << "  (~" << v.approx() << ")";
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dimension formulas for spaces of Siegel cusp forms"};
  app.require_subcommand(1);

  DimArgs dim;
  CLI::App* cmd_dim = app.add_subcommand("dim", "Evaluate one dimension");
  cmd_dim->add_option("--degree", dim.degree, "degree n");
  cmd_dim->add_option("--weight", dim.weight, "scalar weight k");
  cmd_dim->add_option("--weights", dim.weights_csv, "weight vector k1,...,kn");
  cmd_dim->add_option("--level", dim.level, "level N");
  cmd_dim->add_option("--path", dim.path, "t115|c12|closed|vector|all");
  cmd_dim->add_flag("--json", dim.json, "JSON output");
  cmd_dim->add_flag("--approx", dim.approx, "append decimal approximation");
  cmd_dim->add_flag("--cross-check", dim.cross_check, "run all applicable paths");
  cmd_dim->add_flag("--force", dim.force, "evaluate outside the proven range");
  cmd_dim->add_flag("--quiet", dim.quiet, "exit code only");

  TablesArgs tab;
  CLI::App* cmd_tables = app.add_subcommand("tables", "Recompute the reference tables");
  cmd_tables->add_option("--path", tab.path, "t115|c12|closed|vector|all");
  cmd_tables->add_option("--only", tab.only, "restrict to one table id");
  cmd_tables->add_flag("--quiet", tab.quiet, "exit code only");

  CLI::App* cmd_const = app.add_subcommand("constants", "Print one exact constant");
  cmd_const->require_subcommand(1);
  bool capprox = false, cquiet = false, cforce = false;
  cmd_const->add_flag("--approx", capprox, "append decimal approximation");
  cmd_const->add_flag("--quiet", cquiet, "exit code only");
  cmd_const->add_flag("--force", cforce, "evaluate outside the proven range");
  long cm = 0, cdeg = 0, crank = 0, clevel = 0, cweight = 0;
  std::string cweights;
  CLI::App* c_bern = cmd_const->add_subcommand("bernoulli", "B_m");
  c_bern->add_option("--m", cm)->required();
  CLI::App* c_zeta = cmd_const->add_subcommand("zeta", "zeta(1-2j)");
  c_zeta->add_option("--j", cm)->required();
  CLI::App* c_shin = cmd_const->add_subcommand("shintani", "Shintani special value");
  c_shin->add_option("--rank", crank)->required();
  c_shin->add_option("--degree", cdeg)->required();
  CLI::App* c_ifac = cmd_const->add_subcommand("ifactor", "packaged rational I(n, r)");
  c_ifac->add_option("--degree", cdeg)->required();
  c_ifac->add_option("--rank", crank)->required();
  CLI::App* c_idx = cmd_const->add_subcommand("index", "group index");
  c_idx->add_option("--degree", cdeg)->required();
  c_idx->add_option("--level", clevel)->required();
  CLI::App* c_cs = cmd_const->add_subcommand("cscalar", "scalar archimedean factor");
  c_cs->add_option("--degree", cdeg)->required();
  c_cs->add_option("--weight", cweight)->required();
  c_cs->add_option("--rank", crank)->required();
  CLI::App* c_cv = cmd_const->add_subcommand("cvector", "vector archimedean factor");
  c_cv->add_option("--weights", cweights)->required();
  c_cv->add_option("--rank", crank)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*cmd_dim) return run_dim(dim);
  if (*cmd_tables) return run_tables(tab);

  try {
    Rational v;
    if (*c_bern) {
      if (cm < 0) throw OutOfRangeError("m must be >= 0");
      v = bernoulli(static_cast<unsigned>(cm));
    } else if (*c_zeta) {
      if (cm < 1) throw OutOfRangeError("j must be >= 1");
      v = zeta_negative_odd(static_cast<unsigned>(cm));
    } else if (*c_shin) {
      v = shintani_special(static_cast<int>(crank), static_cast<int>(cdeg));
    } else if (*c_ifac) {
      v = i_factor(static_cast<int>(cdeg), static_cast<int>(crank));
    } else if (*c_idx) {
      v = Rational(index_principal(static_cast<int>(cdeg), clevel));
    } else if (*c_cs) {
      v = c_scalar(cweight, static_cast<int>(cdeg), static_cast<int>(crank));
    } else if (*c_cv) {
      std::vector<long> w;
      std::stringstream ss(cweights);
      std::string tok;
      while (std::getline(ss, tok, ',')) w.push_back(std::stol(tok));
      v = c_vector(WeightVector(w), static_cast<int>(crank), cforce);
    }
    print_value(v, capprox, cquiet);
    return kExitOk;
  } catch (const OutOfProvenRangeError& e) {
    std::cerr << "out of proven range: " << e.what() << "\n";
    return kExitRange;
  } catch (const OutOfRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
