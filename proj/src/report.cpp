#include "hre/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace hre::report {

namespace {

std::string format_sig(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

Json number(double value, int precision) { return round_sig(value, precision); }

Json numbers(const std::vector<double>& values, int precision) {
  Json out = Json::array();
  for (double v : values) out.push_back(number(v, precision));
  return out;
}

Json one_based(const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (std::size_t i : indices) out.push_back(i + 1);
  return out;
}

}  // namespace

double round_sig(double value, int digits) {
  return std::strtod(format_sig(value, digits).c_str(), nullptr);
}

std::vector<std::size_t> ranking_order(const std::vector<double>& values) {
  std::vector<double> keys(values.size());
  std::transform(values.begin(), values.end(), keys.begin(),
                 [](double v) { return round_sig(v, 12); });
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] > keys[b]; });
  return order;
}

std::vector<std::size_t> competition_ranks(const std::vector<double>& values) {
  const std::vector<std::size_t> order = ranking_order(values);
  std::vector<std::size_t> ranks(values.size(), 0);
  for (std::size_t p = 0; p < order.size(); ++p) {
    const bool tie = p > 0 && round_sig(values[order[p]], 12) == round_sig(values[order[p - 1]], 12);
    ranks[order[p]] = tie ? ranks[order[p - 1]] : p + 1;
  }
  return ranks;
}

std::string input_digest(const PcMatrix& matrix, const std::optional<ReferenceAssignment>& known,
                         const std::string& method, double base) {
  std::ostringstream canon;
  canon << "n=" << matrix.size() << ";m=";
  for (double v : matrix.entries()) canon << format_sig(v, 17) << ',';
  canon << ";known=";
  if (known)
    for (const auto& [i, v] : known->known()) canon << i + 1 << ':' << format_sig(v, 17) << ',';
  canon << ";method=" << method << ";base=" << format_sig(base, 17);

  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canon.str()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

Json to_json(const ConsistencyReport& report, int precision) {
  Json out;
  out["reciprocal"] = report.reciprocal;
  out["consistent"] = report.consistent;
  out["koczkodaj"] = report.koczkodaj ? number(*report.koczkodaj, precision) : Json(nullptr);
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json item;
    item["i"] = v.i + 1;
    item["j"] = v.j + 1;
    item["product"] = number(v.product, precision);
    violations.push_back(std::move(item));
  }
  out["violations"] = std::move(violations);
  return out;
}

Json to_json(const OptimalityReport& report, int precision) {
  Json out;
  out["error_value"] = number(report.error_value, precision);
  out["gradient_max"] = number(report.gradient_max, precision);
  out["weight_bound_condition"] = report.weight_bound_condition;
  out["hessian_dominant"] = report.hessian_dominant;
  out["hessian_positive_definite"] = report.hessian_positive_definite;
  out["unknown_block_positive_definite"] = report.unknown_block_positive_definite
                                               ? Json(*report.unknown_block_positive_definite)
                                               : Json(nullptr);
  return out;
}

Json to_json(const RankReport& report, int precision) {
  Json out;
  out["method"] = report.method;
  out["feasible"] = report.feasible;
  out["raw"] = numbers(report.raw, precision);
  out["normalized"] = numbers(report.normalized, precision);
  if (report.feasible) {
    out["order"] = one_based(ranking_order(report.raw));
    Json ranks = Json::array();
    for (std::size_t r : competition_ranks(report.raw)) ranks.push_back(r);
    out["ranks"] = std::move(ranks);
  } else {
    out["order"] = Json::array();
    out["ranks"] = Json::array();
  }
  if (report.geometric) {
    Json g;
    g["base"] = number(report.geometric->base, precision);
    g["unknowns"] = one_based(report.geometric->unknowns);
    g["b"] = numbers(report.geometric->b, precision);
    g["log_priorities"] = numbers(report.geometric->log_unknowns, precision);
    out["intermediate"] = std::move(g);
  }
  out["consistency"] = to_json(report.consistency, precision);
  out["optimality"] = report.optimality ? to_json(*report.optimality, precision) : Json(nullptr);
  out["warnings"] = report.warnings;
  out["input_digest"] = report.input_digest;
  return out;
}

Json to_json(const ExperimentResult& result, int precision) {
  Json config;
  config["n_min"] = result.config.n_min;
  config["n_max"] = result.config.n_max;
  config["unknowns"] =
      result.config.fixed_unknowns ? Json(*result.config.fixed_unknowns) : Json("random");
  config["trials"] = result.config.trials;
  config["sigmas"] = numbers(result.config.sigmas, precision);
  config["scale_bound"] = number(result.config.scale_bound, precision);
  config["seed"] = result.config.seed;

  Json cells = Json::array();
  for (const auto& c : result.cells) {
    Json cell;
    cell["n"] = c.n;
    cell["sigma"] = number(c.sigma, precision);
    cell["trials"] = c.trials;
    cell["geometric_feasible_rate"] = number(c.geometric_feasible_rate, precision);
    cell["arithmetic_feasible_rate"] = number(c.arithmetic_feasible_rate, precision);
    cell["mean_koczkodaj"] = number(c.mean_koczkodaj, precision);
    cell["geometric_singular"] = c.geometric_singular;
    cell["arithmetic_singular"] = c.arithmetic_singular;
    cell["geometric_max_weight_error"] = number(c.geometric_max_weight_error, precision);
    cell["arithmetic_max_weight_error"] = number(c.arithmetic_max_weight_error, precision);
    cells.push_back(std::move(cell));
  }
  Json out;
  out["config"] = std::move(config);
  out["cells"] = std::move(cells);
  return out;
}

std::string to_csv(const ExperimentResult& result, int precision) {
  std::ostringstream os;
  os << "n,sigma,trials,geometric_feasible_rate,arithmetic_feasible_rate,mean_koczkodaj,"
        "geometric_singular,arithmetic_singular,geometric_max_weight_error,"
        "arithmetic_max_weight_error\n";
  for (const auto& c : result.cells) {
    os << c.n << ',' << format_sig(c.sigma, precision) << ',' << c.trials << ','
       << format_sig(c.geometric_feasible_rate, precision) << ','
       << format_sig(c.arithmetic_feasible_rate, precision) << ','
       << format_sig(c.mean_koczkodaj, precision) << ',' << c.geometric_singular << ','
       << c.arithmetic_singular << ',' << format_sig(c.geometric_max_weight_error, precision)
       << ',' << format_sig(c.arithmetic_max_weight_error, precision) << '\n';
  }
  return os.str();
}

}  // namespace hre::report
