#include "hre/pc_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hre/errors.hpp"

namespace hre {

namespace {

std::string cell_name(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "(" << i + 1 << ", " << j + 1 << ")";
  return os.str();
}

bool near_one(double x, double tol) { return std::abs(x - 1.0) <= tol; }

double triad_value(double direct, double indirect) {
  return std::min(std::abs(1.0 - direct / indirect),
                  std::abs(1.0 - indirect / direct));
}

}  // namespace

PcMatrix::PcMatrix(std::size_t n, std::vector<double> entries,
                   std::vector<std::string> labels)
    : n_(n), entries_(std::move(entries)), labels_(std::move(labels)) {
  if (n_ < 2) throw ValidationError("PC matrix needs at least 2 concepts");
  if (entries_.size() != n_ * n_) {
    throw ValidationError("PC matrix entry count does not match n*n");
  }
  if (!labels_.empty() && labels_.size() != n_) {
    throw ValidationError("label count does not match matrix size");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double v = entries_[i * n_ + j];
      if (!std::isfinite(v) || v <= 0.0) {
        throw ValidationError("entry " + cell_name(i, j) +
                                  " must be finite and strictly positive",
                              i, j);
      }
    }
    if (!near_one(entries_[i * n_ + i], kDiagonalTolerance)) {
      throw ValidationError("diagonal entry " + cell_name(i, i) + " must be 1",
                            i, i);
    }
  }
}

PcMatrix PcMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ValidationError("row " + std::to_string(i + 1) + " has " +
                            std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(n));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return PcMatrix(n, std::move(flat));
}

PcMatrix PcMatrix::reciprocal_transpose() const {
  std::vector<double> out(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i * n_ + j] = 1.0 / (*this)(j, i);
  return PcMatrix(n_, std::move(out), labels_);
}

ReferenceAssignment::ReferenceAssignment(std::map<std::size_t, double> known)
    : known_(std::move(known)) {
  if (known_.empty()) throw ValidationError("reference set must not be empty");
  for (const auto& [index, value] : known_) {
    if (!std::isfinite(value) || value <= 0.0) {
      throw ValidationError("reference value for concept " +
                            std::to_string(index + 1) +
                            " must be finite and strictly positive");
    }
  }
}

ReferenceAssignment ReferenceAssignment::scaled(double factor) const {
  std::map<std::size_t, double> out;
  for (const auto& [index, value] : known_) out.emplace(index, value * factor);
  return ReferenceAssignment(std::move(out));
}

HreProblem::HreProblem(PcMatrix matrix, ReferenceAssignment reference)
    : matrix_(std::move(matrix)), reference_(std::move(reference)) {
  const std::size_t n = matrix_.size();
  for (const auto& [index, value] : reference_.known()) {
    if (index >= n) {
      throw ValidationError("reference concept " + std::to_string(index + 1) +
                            " is outside 1.." + std::to_string(n));
    }
  }
  if (reference_.size() >= n) {
    throw ValidationError("at least one concept must be unknown");
  }
  for (std::size_t i = 0; i < n; ++i) {
    (reference_.contains(i) ? knowns_ : unknowns_).push_back(i);
  }
  order_ = unknowns_;
  order_.insert(order_.end(), knowns_.begin(), knowns_.end());
  position_of_.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) position_of_[order_[p]] = p;
}

PriorityVector normalize(std::span<const double> values) {
  if (values.empty()) throw ValidationError("cannot normalize an empty vector");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] <= 0.0) {
      throw ValidationError("priority " + std::to_string(i + 1) +
                            " must be finite and strictly positive");
    }
  }
  PriorityVector out;
  out.values.assign(values.begin(), values.end());
  const double sum = std::accumulate(values.begin(), values.end(), 0.0);
  out.normalized.reserve(values.size());
  for (double v : values) out.normalized.push_back(v / sum);
  return out;
}

bool is_reciprocal(const PcMatrix& matrix) {
  const std::size_t n = matrix.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!near_one(matrix(i, j) * matrix(j, i), kReciprocityTolerance))
        return false;
  return true;
}

ConsistencyReport validate(const PcMatrix& matrix, Execution exec) {
  const std::size_t n = matrix.size();
  ConsistencyReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double product = matrix(i, j) * matrix(j, i);
      if (!near_one(product, kReciprocityTolerance))
        report.violations.push_back({i, j, product});
    }
  }
  report.reciprocal = report.violations.empty();

  report.consistent = report.reciprocal;
  for (std::size_t i = 0; i < n && report.consistent; ++i)
    for (std::size_t j = 0; j < n && report.consistent; ++j)
      for (std::size_t k = 0; k < n && report.consistent; ++k)
        if (!near_one(matrix(i, j) * matrix(j, k) * matrix(k, i),
                      kReciprocityTolerance))
          report.consistent = false;

  if (report.reciprocal && n > 2) report.koczkodaj = koczkodaj_index(matrix, exec);
  return report;
}

double koczkodaj_index(const PcMatrix& matrix, Execution exec) {
  const std::size_t n = matrix.size();
  if (n <= 2) {
    throw UndefinedIndexError("Koczkodaj's index requires n > 2, got n = " +
                              std::to_string(n));
  }
  if (!is_reciprocal(matrix)) {
    throw NonReciprocalError(
        "Koczkodaj's index requires a reciprocal matrix; see the reciprocity "
        "violations reported by validate()");
  }

  // Under reciprocity the six orderings of {i, j, k} share one triad value.
  const auto n_signed = static_cast<long long>(n);
  double worst = 0.0;
  if (exec == Execution::parallel) {
#pragma omp parallel for reduction(max : worst) schedule(dynamic)
    for (long long i = 0; i < n_signed; ++i) {
      const auto a = static_cast<std::size_t>(i);
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          worst = std::max(worst, triad_value(matrix(a, b),
                                              matrix(a, c) * matrix(c, b)));
    }
  } else {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          worst = std::max(worst, triad_value(matrix(a, b),
                                              matrix(a, c) * matrix(c, b)));
  }
  return worst;
}

}  // namespace hre
