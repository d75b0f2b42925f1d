#include "hre/classic.hpp"

#include <cmath>
#include <sstream>

#include "hre/dense.hpp"

namespace hre {

std::string non_reciprocal_warning(const PcMatrix& matrix) {
  const ConsistencyReport report = validate(matrix, Execution::serial);
  std::ostringstream os;
  os << "matrix is not reciprocal (" << report.violations.size()
     << " violating pair" << (report.violations.size() == 1 ? "" : "s") << ")";
  return os.str();
}

RankingResult ev_method(const PcMatrix& matrix, double tol, int max_iter) {
  const std::size_t n = matrix.size();
  const DenseMatrix m(n, n, std::vector<double>(matrix.entries().begin(),
                                                matrix.entries().end()));
  const EigenPair pair = power_iteration(m, tol, max_iter);
  RankingResult out{normalize(pair.vector), {}};
  if (!is_reciprocal(matrix)) out.warnings.push_back(non_reciprocal_warning(matrix));
  return out;
}

RankingResult gm_method(const PcMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<double> means(n);
  for (std::size_t i = 0; i < n; ++i) {
    double log_sum = 0.0;
    for (double v : matrix.row(i)) log_sum += std::log(v);
    means[i] = std::exp(log_sum / static_cast<double>(n));
  }
  RankingResult out{normalize(means), {}};
  if (!is_reciprocal(matrix)) out.warnings.push_back(non_reciprocal_warning(matrix));
  return out;
}

}  // namespace hre
