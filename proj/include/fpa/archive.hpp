#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "fpa/types.hpp"

namespace fpa {

/// True iff a is no worse than b everywhere and strictly better somewhere.
/// Throws std::invalid_argument on a length mismatch.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

struct ArchiveEntry {
  SolutionVector solution;
  ObjectiveVector objectives;
  double violation = 0.0;
};

/// Bounded set of mutually non-dominated entries.
///
/// When an insertion pushes the size over capacity, the entry with the
/// smallest nearest-neighbour distance in min-max normalized objective space
/// is evicted (ties: smaller second-nearest distance, then lower position).
/// The minimizer of each objective is never evicted. A candidate whose
/// objectives equal an archived entry's is rejected.
class ParetoArchive {
 public:
  static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

  explicit ParetoArchive(std::size_t capacity = kUnbounded);

  /// Returns true when the candidate was admitted.
  bool insert(ArchiveEntry candidate);

  const std::vector<ArchiveEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t capacity() const { return capacity_; }

  /// Objectives as columns of an m x size() matrix.
  Matrix objective_matrix() const;

 private:
  void prune();

  std::vector<ArchiveEntry> entries_;
  std::size_t capacity_;
};

}  // namespace fpa
