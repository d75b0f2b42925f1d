#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hre/experiments.hpp"
#include "hre/optimality.hpp"
#include "hre/pc_matrix.hpp"

namespace hre::report {

using Json = nlohmann::ordered_json;

inline constexpr int kDefaultPrecision = 6;

/// Rounds to `digits` significant decimal digits.
double round_sig(double value, int digits);

/// Concept indices (0-based) by descending priority. Priorities equal to 12
/// significant digits tie and fall back to ascending index.
std::vector<std::size_t> ranking_order(const std::vector<double>& values);

/// Standard competition ranks (1, 2, 2, 4) aligned with concept order.
std::vector<std::size_t> competition_ranks(const std::vector<double>& values);

/// Intermediate quantities of the geometric method, in the reporting base.
struct GeometricDetail {
  double base = 10.0;
  std::vector<std::size_t> unknowns;
  std::vector<double> b;
  std::vector<double> log_unknowns;
};

struct RankReport {
  std::string method;
  bool feasible = true;
  std::vector<double> raw;
  /// Empty when infeasible.
  std::vector<double> normalized;
  ConsistencyReport consistency;
  std::optional<GeometricDetail> geometric;
  std::optional<OptimalityReport> optimality;
  std::vector<std::string> warnings;
  std::string input_digest;
};

/// 64-bit FNV-1a over a canonical rendering of the inputs, as 16 hex digits.
std::string input_digest(const PcMatrix& matrix,
                         const std::optional<ReferenceAssignment>& known,
                         const std::string& method, double base);

Json to_json(const ConsistencyReport& report, int precision);
Json to_json(const OptimalityReport& report, int precision);
Json to_json(const RankReport& report, int precision);
Json to_json(const ExperimentResult& result, int precision);

std::string to_csv(const ExperimentResult& result, int precision);

}  // namespace hre::report
