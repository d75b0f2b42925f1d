#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hre/execution.hpp"

namespace hre {

/// Relative slack for m_ij * m_ji == 1 and for the cyclic triad product.
inline constexpr double kReciprocityTolerance = 1e-6;
/// Relative slack for m_ii == 1.
inline constexpr double kDiagonalTolerance = 1e-9;

/// Square matrix of strictly positive pairwise judgments. Concepts are
/// addressed by 0-based index; labels are carried for reporting only.
class PcMatrix {
 public:
  /// Throws ValidationError naming the first offending cell if an entry is
  /// non-finite or not positive, or if a diagonal entry is not 1.
  PcMatrix(std::size_t n, std::vector<double> entries,
           std::vector<std::string> labels = {});

  static PcMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * n_, n_};
  }
  std::span<const double> entries() const { return entries_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Element-wise reciprocal of the transpose: entry (i, j) becomes 1/m_ji.
  PcMatrix reciprocal_transpose() const;

 private:
  std::size_t n_;
  std::vector<double> entries_;
  std::vector<std::string> labels_;
};

/// Concepts whose priorities are known in advance: index -> value.
class ReferenceAssignment {
 public:
  explicit ReferenceAssignment(std::map<std::size_t, double> known);

  const std::map<std::size_t, double>& known() const { return known_; }
  std::size_t size() const { return known_.size(); }
  bool contains(std::size_t i) const { return known_.count(i) != 0; }
  double at(std::size_t i) const { return known_.at(i); }

  ReferenceAssignment scaled(double factor) const;

 private:
  std::map<std::size_t, double> known_;
};

/// A judgment matrix together with a reference set. Unknown concepts are
/// ordered first (ascending), then known concepts (ascending).
class HreProblem {
 public:
  HreProblem(PcMatrix matrix, ReferenceAssignment reference);

  const PcMatrix& matrix() const { return matrix_; }
  const ReferenceAssignment& reference() const { return reference_; }
  std::size_t size() const { return matrix_.size(); }
  std::size_t unknown_count() const { return unknowns_.size(); }

  /// Original indices of the unknown concepts, ascending.
  const std::vector<std::size_t>& unknowns() const { return unknowns_; }
  /// Original indices of the known concepts, ascending.
  const std::vector<std::size_t>& knowns() const { return knowns_; }
  /// order()[position] is the original index at that internal position.
  const std::vector<std::size_t>& order() const { return order_; }
  /// position_of()[original] inverts order().
  const std::vector<std::size_t>& position_of() const { return position_of_; }

 private:
  PcMatrix matrix_;
  ReferenceAssignment reference_;
  std::vector<std::size_t> unknowns_;
  std::vector<std::size_t> knowns_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_of_;
};

/// Strictly positive ranking values alongside their sum-to-one rescaling.
struct PriorityVector {
  std::vector<double> values;
  std::vector<double> normalized;

  std::size_t size() const { return values.size(); }
};

/// Throws ValidationError if any value is non-finite or not positive.
PriorityVector normalize(std::span<const double> values);

struct ReciprocityViolation {
  std::size_t i;
  std::size_t j;
  double product;  // m_ij * m_ji
};

struct ConsistencyReport {
  bool reciprocal = false;
  std::vector<ReciprocityViolation> violations;
  bool consistent = false;
  /// Absent when n <= 2 or the matrix is not reciprocal.
  std::optional<double> koczkodaj;
};

bool is_reciprocal(const PcMatrix& matrix);

/// Reciprocity, consistency, and Koczkodaj's index when it is defined.
ConsistencyReport validate(const PcMatrix& matrix,
                           Execution exec = Execution::parallel);

/// Koczkodaj's inconsistency index over unordered triples i < j < k.
/// Throws UndefinedIndexError for n <= 2 and NonReciprocalError when the
/// matrix fails the reciprocity check.
double koczkodaj_index(const PcMatrix& matrix,
                       Execution exec = Execution::parallel);

}  // namespace hre
