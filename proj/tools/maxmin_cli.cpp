// Command-line front end for the maxmin solver: CSV matrices in, text and
// JSON results out. Exit codes: 0 success, 1 domain errors (for example an
// unsolvable problem), 2 usage or parse errors.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maxmin/apps.hpp"
#include "maxmin/csv_io.hpp"
#include "maxmin/errors.hpp"
#include "maxmin/json_io.hpp"
#include "maxmin/linalg.hpp"
#include "maxmin/solver.hpp"
#include "maxmin/suppvec.hpp"

namespace {

struct CliConfig {
  std::optional<double> tol_override;  // replaces range_membership_tol
  std::string json_path;
  std::string scatter_path;
  bool fixture_flag = false;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

maxmin::ToleranceConfig make_tolerances(const CliConfig& cfg) {
  maxmin::ToleranceConfig tol;
  if (cfg.tol_override) tol.range_membership_tol = *cfg.tol_override;
  return tol;
}

void write_json_file(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw maxmin::IoError("cannot write JSON file: " + path);
  out << j.dump(2) << '\n';
}

void print_solution(const maxmin::MaxminSolution& sol) {
  std::cout << "optimal value: " << fmt(sol.optimal_value) << '\n';
  std::cout << "lambda_max: " << fmt(sol.lambda_max) << '\n';
  std::cout << "case: "
            << (sol.case_used == maxmin::SolveCase::Case1 ? "Case1" : "Case2")
            << '\n';
  if (!sol.selected_indices.empty()) {
    std::cout << "selected columns:";
    for (std::size_t idx : sol.selected_indices) std::cout << ' ' << idx;
    std::cout << '\n';
  }
  if (sol.degenerate) std::cout << "degenerate: A = 0, every feasible x is optimal\n";
  std::cout << "solutions (" << sol.solutions.size() << ", sign-closed):\n";
  for (const auto& x : sol.solutions) {
    std::cout << " ";
    for (double v : x) std::cout << ' ' << fmt(v);
    std::cout << '\n';
  }
}

int run_check(const std::string& a_path, const std::string& b_path) {
  const maxmin::DenseMatrix a = maxmin::read_matrix_csv(a_path);
  const maxmin::DenseMatrix b = maxmin::read_matrix_csv(b_path);
  const maxmin::ToleranceConfig tol;
  const bool solvable = maxmin::existence_check(a, b, tol);
  std::cout << "solvable: " << (solvable ? "true" : "false") << '\n';
  std::cout << "ker(B) dim: " << maxmin::null_space(b, tol).cols() << '\n';
  std::cout << "ker(A) dim: " << maxmin::null_space(a, tol).cols() << '\n';
  return 0;
}

int run_solve(const std::string& a_path, const std::string& b_path,
              const CliConfig& cfg) {
  const maxmin::DenseMatrix a = maxmin::read_matrix_csv(a_path);
  const maxmin::DenseMatrix b = maxmin::read_matrix_csv(b_path);
  const maxmin::ToleranceConfig tol = make_tolerances(cfg);
  const maxmin::MaxminSolution sol = maxmin::solve(a, b, tol);
  print_solution(sol);
  if (!cfg.json_path.empty()) {
    write_json_file(maxmin::solution_to_json(sol, tol), cfg.json_path);
  }
  return 0;
}

int run_suppvec(const std::vector<std::string>& paths, const CliConfig& cfg) {
  std::vector<maxmin::DenseMatrix> matrices;
  matrices.reserve(paths.size());
  for (const auto& p : paths) matrices.push_back(maxmin::read_matrix_csv(p));
  const maxmin::ToleranceConfig tol = make_tolerances(cfg);
  const maxmin::SuppVecResult result =
      maxmin::supporting_vectors(matrices, tol);
  std::cout << "lambda_max: " << fmt(result.lambda_max) << '\n';
  std::cout << "special case: " << (result.used_special_case ? "yes" : "no")
            << '\n';
  std::cout << "basis (" << result.basis.cols() << " columns):\n";
  for (std::size_t j = 0; j < result.basis.cols(); ++j) {
    std::cout << " ";
    for (double v : result.basis.col(j)) std::cout << ' ' << fmt(v);
    std::cout << '\n';
  }
  if (!cfg.json_path.empty()) {
    write_json_file(maxmin::suppvec_to_json(result, tol), cfg.json_path);
  }
  return 0;
}

int run_energy(const std::string& e1_path, const std::string& e2_path,
               const std::string& l_path, const CliConfig& cfg) {
  const maxmin::DenseMatrix e1 = maxmin::read_matrix_csv(e1_path);
  const maxmin::DenseMatrix e2 = maxmin::read_matrix_csv(e2_path);
  const maxmin::DenseMatrix l = maxmin::read_matrix_csv(l_path);
  const maxmin::ToleranceConfig tol = make_tolerances(cfg);
  const maxmin::MaxminSolution sol =
      maxmin::solve_quadratic_energy(e1, e2, l, tol);
  print_solution(sol);
  if (!cfg.json_path.empty()) {
    write_json_file(maxmin::solution_to_json(sol, tol), cfg.json_path);
  }
  return 0;
}

int run_geoloc(const std::string& data_path, const CliConfig& cfg) {
  maxmin::GeoDataset data;
  if (cfg.fixture_flag) {
    data = maxmin::andalusia_fixture();
  } else {
    data = maxmin::read_geo_csv(data_path);
  }
  const maxmin::ToleranceConfig tol = make_tolerances(cfg);
  const maxmin::GeoScoreReport report = maxmin::solve_geolocation(data, tol);
  std::cout << "weights:";
  for (double w : report.weights) std::cout << ' ' << fmt(w);
  std::cout << "\nranking (best first):\n";
  // Ranked order, with the per-site scatter coordinates. Pad by display
  // width, not bytes, so accented names stay aligned.
  const auto display_width = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char ch : s) {
      if ((ch & 0xC0) != 0x80) ++w;
    }
    return w;
  };
  for (const auto& name : report.ranking) {
    for (const auto& s : report.per_site) {
      if (s.name == name) {
        const std::size_t width = display_width(name);
        std::string padded = name;
        padded.append(width < 12 ? 12 - width : 1, ' ');
        std::printf("  %sscore=% .6f  ax=% .6f  bx=% .6f\n", padded.c_str(),
                    s.score, s.ax, s.bx);
        break;
      }
    }
  }
  if (!cfg.json_path.empty()) {
    write_json_file(maxmin::geo_report_to_json(report), cfg.json_path);
  }
  if (!cfg.scatter_path.empty()) {
    maxmin::write_scatter_csv(report, cfg.scatter_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for max ||Ax|| subject to ||Bx|| <= 1"};
  app.require_subcommand(1);
  CliConfig cfg;

  std::string a_path, b_path, e1_path, e2_path, l_path, data_path;
  std::vector<std::string> suppvec_paths;

  CLI::App* check = app.add_subcommand(
      "check", "Report whether the problem has a solution (ker B in ker A)");
  check->add_option("A", a_path, "CSV matrix A")->required();
  check->add_option("B", b_path, "CSV matrix B")->required();

  CLI::App* solve = app.add_subcommand(
      "solve", "Solve max ||Ax|| subject to ||Bx|| <= 1");
  solve->add_option("A", a_path, "CSV matrix A")->required();
  solve->add_option("B", b_path, "CSV matrix B")->required();
  solve->add_option("--tol", cfg.tol_override,
                    "Range-membership tolerance override")
      ->check(CLI::PositiveNumber);
  solve->add_option("--json", cfg.json_path, "Write the solution as JSON");

  CLI::App* suppvec = app.add_subcommand(
      "suppvec", "Supporting vectors of one or more matrices");
  suppvec->add_option("matrices", suppvec_paths, "CSV matrix files")
      ->required()
      ->expected(-1);
  suppvec->add_option("--json", cfg.json_path, "Write the result as JSON");

  CLI::App* energy = app.add_subcommand(
      "energy",
      "Maximize ||E1 psi|| subject to ||E2 psi||^2 + psi^T L psi <= 1");
  energy->add_option("E1", e1_path, "CSV matrix E1")->required();
  energy->add_option("E2", e2_path, "CSV matrix E2")->required();
  energy->add_option("L", l_path, "CSV SPD matrix L")->required();
  energy->add_option("--json", cfg.json_path, "Write the solution as JSON");

  CLI::App* geoloc = app.add_subcommand(
      "geoloc", "Seasonal site scoring from a climate dataset");
  geoloc->add_option("data", data_path, "Dataset CSV (site,Twin,...,Esum)");
  geoloc->add_flag("--fixture", cfg.fixture_flag,
                   "Use the packaged 16-site Andalusian dataset");
  geoloc->add_option("--json", cfg.json_path, "Write the report as JSON");
  geoloc->add_option("--scatter", cfg.scatter_path,
                     "Write site,ax,bx,score rows for plotting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return run_check(a_path, b_path);
    if (*solve) return run_solve(a_path, b_path, cfg);
    if (*suppvec) return run_suppvec(suppvec_paths, cfg);
    if (*energy) return run_energy(e1_path, e2_path, l_path, cfg);
    if (*geoloc) {
      if (cfg.fixture_flag != data_path.empty()) {
        // exactly one source: a dataset file or --fixture
        std::cerr << "ERROR: parse: geoloc needs a dataset CSV or --fixture\n";
        return 2;
      }
      return run_geoloc(data_path, cfg);
    }
  } catch (const maxmin::ParseError& e) {
    std::cerr << "ERROR: " << e.slug() << ": " << e.what() << '\n';
    return 2;
  } catch (const maxmin::IoError& e) {
    std::cerr << "ERROR: " << e.slug() << ": " << e.what() << '\n';
    return 2;
  } catch (const maxmin::Error& e) {
    std::cerr << "ERROR: " << e.slug() << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}
