#include "hre/cli.hpp"

#include <omp.h>

#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "hre/classic.hpp"
#include "hre/errors.hpp"
#include "hre/experiments.hpp"
#include "hre/io.hpp"
#include "hre/optimality.hpp"
#include "hre/report.hpp"
#include "hre/solver.hpp"

namespace hre::cli {

namespace {

struct RankOptions {
  std::string matrix_path;
  std::string known_path;
  std::string method = "hre-geom";
  double base = 10.0;
  bool normalize = false;
  int precision = report::kDefaultPrecision;
};

struct CheckOptions {
  std::string matrix_path;
  int precision = report::kDefaultPrecision;
};

struct SimulateOptions {
  std::size_t n_min = 4;
  std::size_t n_max = 9;
  std::size_t trials = 100;
  std::vector<double> sigmas{0.5, 1.0, 2.0};
  std::uint64_t seed = 1;
  std::size_t unknowns = 0;
  double scale_bound = 9.0;
  std::string format = "json";
  int threads = 0;
  bool serial = false;
  int precision = report::kDefaultPrecision;
};

struct DiagnoseOptions {
  std::string matrix_path;
  std::string known_path;
  std::string solution_path;
  double base = 10.0;
  int precision = report::kDefaultPrecision;
};

class InputFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PcMatrix load_matrix(const std::string& path) {
  try {
    return io::parse_matrix_csv(io::read_file(path));
  } catch (const ParseError& e) {
    std::ostringstream os;
    os << path;
    if (e.line() > 0) os << ':' << e.line();
    if (e.column() > 0) os << ':' << e.column();
    os << ": " << e.what();
    throw InputFailure(os.str());
  }
}

template <typename Parse>
auto load_json(const std::string& path, Parse parse) {
  try {
    return parse(io::read_file(path));
  } catch (const ParseError& e) {
    std::ostringstream os;
    os << path;
    if (e.line() > 0) os << ':' << e.line();
    if (e.column() > 0) os << ':' << e.column();
    os << ": " << e.what();
    throw InputFailure(os.str());
  }
}

void add_precision(CLI::App* cmd, int& precision) {
  cmd->add_option("--precision", precision, "Significant digits in the report")
      ->check(CLI::Range(1, 17));
}

void emit(std::ostream& out, const report::Json& doc) { out << doc.dump(2) << '\n'; }

int cmd_rank(const RankOptions& opt, std::ostream& out, std::ostream& err, bool summary) {
  const PcMatrix matrix = load_matrix(opt.matrix_path);
  const bool hre_method = opt.method == "hre-geom" || opt.method == "hre-arith";

  std::optional<ReferenceAssignment> known;
  if (!opt.known_path.empty()) {
    known = load_json(opt.known_path, [&](const std::string& text) {
      return io::parse_known_json(text, matrix.size());
    });
  }
  if (hre_method && !known)
    throw InputFailure("method " + opt.method + " needs --known <file>");

  report::RankReport rep;
  rep.method = opt.method;
  rep.consistency = validate(matrix);
  rep.input_digest = report::input_digest(matrix, hre_method ? known : std::nullopt, opt.method,
                                          opt.method == "hre-geom" ? opt.base : 0.0);
  std::vector<std::size_t> unknowns;

  if (opt.method == "ev" || opt.method == "gm") {
    const RankingResult r = opt.method == "ev" ? ev_method(matrix) : gm_method(matrix);
    rep.raw = r.priorities.values;
    rep.normalized = r.priorities.normalized;
    rep.warnings = r.warnings;
    if (known) rep.warnings.push_back("known values are ignored by method " + opt.method);
  } else {
    const HreProblem problem(matrix, *known);
    unknowns = problem.unknowns();
    if (opt.method == "hre-geom") {
      const GeometricSolution g = solve_geometric(problem, opt.base);
      rep.raw = g.priorities.values;
      rep.normalized = g.priorities.normalized;
      rep.warnings = g.warnings;
      rep.geometric = report::GeometricDetail{g.base, problem.unknowns(), g.b, g.log_unknowns};
    } else {
      const ArithmeticOutcome a = solve_arithmetic(problem);
      rep.feasible = a.feasible;
      rep.raw = a.raw;
      if (a.priorities) rep.normalized = a.priorities->normalized;
      rep.warnings = a.warnings;
      if (!a.feasible)
        rep.warnings.push_back("arithmetic solution has a nonpositive priority; "
                               "the geometric method always yields a feasible ranking");
    }
    if (rep.feasible) {
      if (rep.consistency.reciprocal) {
        rep.optimality = optimality_report(rep.raw, matrix, unknowns);
      } else {
        rep.warnings.push_back("optimality diagnostics skipped: matrix is not reciprocal");
      }
    }
  }

  report::Json doc = report::to_json(rep, opt.precision);
  // Insert the user-facing vector where scripts look first.
  report::Json ordered;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    ordered[it.key()] = it.value();
    if (it.key() == "feasible") ordered["priorities"] = opt.normalize ? doc["normalized"] : doc["raw"];
  }
  emit(out, ordered);

  if (summary) {
    err << opt.method << ": " << (rep.feasible ? "feasible" : "INFEASIBLE") << '\n';
    for (std::size_t i = 0; i < rep.raw.size(); ++i)
      err << "  c" << i + 1 << "  " << std::setprecision(opt.precision) << rep.raw[i] << '\n';
    for (const auto& w : rep.warnings) err << "  warning: " << w << '\n';
  }
  return rep.feasible ? kOk : kArithmeticInfeasible;
}

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err, bool summary) {
  const PcMatrix matrix = load_matrix(opt.matrix_path);
  const ConsistencyReport rep = validate(matrix);
  report::Json doc;
  doc["n"] = matrix.size();
  const report::Json body = report::to_json(rep, opt.precision);
  for (const auto& [key, value] : body.items()) doc[key] = value;
  emit(out, doc);
  if (summary) {
    err << "reciprocal: " << (rep.reciprocal ? "yes" : "no")
        << ", consistent: " << (rep.consistent ? "yes" : "no");
    if (rep.koczkodaj) err << ", koczkodaj: " << *rep.koczkodaj;
    err << '\n';
  }
  return kOk;
}

int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err, bool summary) {
  ExperimentConfig config;
  config.n_min = opt.n_min;
  config.n_max = opt.n_max;
  config.trials = opt.trials;
  config.sigmas = opt.sigmas;
  config.seed = opt.seed;
  config.scale_bound = opt.scale_bound;
  if (opt.unknowns > 0) config.fixed_unknowns = opt.unknowns;
  try {
    config.check();
  } catch (const ValidationError& e) {
    throw InputFailure(std::string("invalid simulation range: ") + e.what());
  }
  if (opt.threads > 0) omp_set_num_threads(opt.threads);

  const ExperimentResult result =
      run_experiment(config, opt.serial ? Execution::serial : Execution::parallel);
  if (opt.format == "csv") {
    out << report::to_csv(result, opt.precision);
  } else {
    emit(out, report::to_json(result, opt.precision));
  }
  if (summary) {
    for (const auto& c : result.cells)
      err << "n=" << c.n << " sigma=" << c.sigma << " geometric=" << c.geometric_feasible_rate
          << " arithmetic=" << c.arithmetic_feasible_rate << '\n';
  }
  return kOk;
}

int cmd_diagnose(const DiagnoseOptions& opt, std::ostream& out, std::ostream& err, bool summary) {
  const PcMatrix matrix = load_matrix(opt.matrix_path);
  const ReferenceAssignment known = load_json(opt.known_path, [&](const std::string& text) {
    return io::parse_known_json(text, matrix.size());
  });
  const HreProblem problem(matrix, known);

  std::vector<double> mu;
  std::string source;
  if (opt.solution_path.empty()) {
    mu = solve_geometric(problem, opt.base).priorities.values;
    source = "hre-geom";
  } else {
    mu = load_json(opt.solution_path, [&](const std::string& text) {
      return io::parse_solution_json(text, matrix.size());
    });
    source = "file";
  }
  const PriorityVector pv = normalize(mu);

  report::Json doc;
  doc["solution_source"] = source;
  report::Json raw = report::Json::array();
  for (double v : mu) raw.push_back(report::round_sig(v, opt.precision));
  doc["raw"] = std::move(raw);
  doc["geometric_residual"] = report::round_sig(geometric_residual(pv, problem), opt.precision);
  std::vector<std::string> warnings;
  if (is_reciprocal(matrix)) {
    doc["optimality"] = report::to_json(optimality_report(mu, matrix, problem.unknowns()), opt.precision);
  } else {
    doc["optimality"] = nullptr;
    warnings.push_back("optimality diagnostics need a reciprocal matrix");
  }
  doc["warnings"] = warnings;
  emit(out, doc);
  if (summary)
    for (const auto& w : warnings) err << "warning: " << w << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool human_summary) {
  CLI::App app{"Priority derivation for pairwise comparisons with a reference set", "hre"};
  app.require_subcommand(1);

  RankOptions rank;
  auto* rank_cmd = app.add_subcommand("rank", "Compute priorities for every concept");
  rank_cmd->add_option("matrix", rank.matrix_path, "PC matrix CSV")->required();
  rank_cmd->add_option("--known,-k", rank.known_path, "Known values JSON");
  rank_cmd->add_option("--method,-m", rank.method, "hre-geom, hre-arith, ev or gm")
      ->check(CLI::IsMember({"hre-geom", "hre-arith", "ev", "gm"}));
  rank_cmd->add_option("--base", rank.base, "Logarithm base for reported intermediates")
      ->check(CLI::PositiveNumber);
  rank_cmd->add_flag("--normalize", rank.normalize, "Report normalized priorities first");
  add_precision(rank_cmd, rank.precision);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Reciprocity, consistency and Koczkodaj index");
  check_cmd->add_option("matrix", check.matrix_path, "PC matrix CSV")->required();
  add_precision(check_cmd, check.precision);

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo feasibility experiment");
  sim_cmd->add_option("--n-min", sim.n_min, "Smallest matrix size");
  sim_cmd->add_option("--n-max", sim.n_max, "Largest matrix size");
  sim_cmd->add_option("--trials", sim.trials, "Trials per (n, sigma) cell");
  sim_cmd->add_option("--sigma", sim.sigmas, "Comma-separated perturbation levels")
      ->delimiter(',');
  sim_cmd->add_option("--seed", sim.seed, "Master seed");
  sim_cmd->add_option("--unknowns", sim.unknowns, "Fixed unknown count (default: random)");
  sim_cmd->add_option("--scale-bound", sim.scale_bound, "Judgment cap S");
  sim_cmd->add_option("--format", sim.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sim_cmd->add_option("--threads", sim.threads, "OpenMP threads (0 keeps the default)")
      ->check(CLI::NonNegativeNumber);
  sim_cmd->add_flag("--serial", sim.serial, "Use the serial reference path");
  add_precision(sim_cmd, sim.precision);

  DiagnoseOptions diag;
  auto* diag_cmd = app.add_subcommand("diagnose", "Optimality report for a solution");
  diag_cmd->add_option("matrix", diag.matrix_path, "PC matrix CSV")->required();
  diag_cmd->add_option("--known,-k", diag.known_path, "Known values JSON")->required();
  diag_cmd->add_option("--solution", diag.solution_path,
                       "JSON array of priorities (default: fresh geometric solution)");
  diag_cmd->add_option("--base", diag.base, "Logarithm base")->check(CLI::PositiveNumber);
  add_precision(diag_cmd, diag.precision);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*rank_cmd) return cmd_rank(rank, out, err, human_summary);
    if (*check_cmd) return cmd_check(check, out, err, human_summary);
    if (*sim_cmd) return cmd_simulate(sim, out, err, human_summary);
    if (*diag_cmd) return cmd_diagnose(diag, out, err, human_summary);
  } catch (const InputFailure& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace hre::cli
