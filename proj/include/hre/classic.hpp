#pragma once

#include <string>
#include <vector>

#include "hre/pc_matrix.hpp"

namespace hre {

/// A derived ranking plus any advisory notes about the input.
struct RankingResult {
  PriorityVector priorities;
  std::vector<std::string> warnings;
};

/// Principal eigenvector of the matrix rescaled to sum 1. Reciprocity is not
/// required; a warning is attached when it fails. ConvergenceError from the
/// power iteration propagates.
RankingResult ev_method(const PcMatrix& matrix, double tol = 1e-10,
                        int max_iter = 10000);

/// Row geometric means, computed in log space and rescaled to sum 1.
RankingResult gm_method(const PcMatrix& matrix);

std::string non_reciprocal_warning(const PcMatrix& matrix);

}  // namespace hre
