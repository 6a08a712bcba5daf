#include "fpa/archive.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpa {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dominates: objective vectors differ in length");
  }
  return (a.array() <= b.array()).all() && (a.array() < b.array()).any();
}

ParetoArchive::ParetoArchive(std::size_t capacity) : capacity_(capacity) {
  if (capacity_ < 1) throw std::invalid_argument("ParetoArchive: capacity must be positive");
}

bool ParetoArchive::insert(ArchiveEntry candidate) {
  for (const auto& e : entries_) {
    if (dominates(e.objectives, candidate.objectives) || e.objectives == candidate.objectives) {
      return false;
    }
  }
  std::erase_if(entries_, [&](const ArchiveEntry& e) { return dominates(candidate.objectives, e.objectives); });
  entries_.push_back(std::move(candidate));
  if (entries_.size() > capacity_) prune();
  return true;
}

Matrix ParetoArchive::objective_matrix() const {
  if (entries_.empty()) return Matrix();
  Matrix m(entries_.front().objectives.size(), static_cast<Index>(entries_.size()));
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    m.col(static_cast<Index>(i)) = entries_[i].objectives;
  }
  return m;
}

void ParetoArchive::prune() {
  while (entries_.size() > capacity_) {
    const Matrix f = objective_matrix();
    const Index m = f.rows();
    const Index k = f.cols();

    Vector lo = f.rowwise().minCoeff();
    Vector span = f.rowwise().maxCoeff() - lo;
    span = (span.array() > 0.0).select(span, 1.0);
    const Matrix normalized = (f.colwise() - lo).array().colwise() / span.array();

    std::vector<bool> is_protected(static_cast<std::size_t>(k), false);
    for (Index r = 0; r < m; ++r) {
      Index arg = 0;
      f.row(r).minCoeff(&arg);
      is_protected[static_cast<std::size_t>(arg)] = true;
    }

    Index victim = -1;
    double victim_first = 0.0;
    double victim_second = 0.0;
    for (Index i = 0; i < k; ++i) {
      if (is_protected[static_cast<std::size_t>(i)]) continue;
      double first = std::numeric_limits<double>::infinity();
      double second = first;
      for (Index j = 0; j < k; ++j) {
        if (j == i) continue;
        const double dist = (normalized.col(i) - normalized.col(j)).squaredNorm();
        if (dist < first) {
          second = first;
          first = dist;
        } else if (dist < second) {
          second = dist;
        }
      }
      if (victim < 0 || first < victim_first || (first == victim_first && second < victim_second)) {
        victim = i;
        victim_first = first;
        victim_second = second;
      }
    }
    // Capacity below the number of protected extremes: drop the newest entry.
    if (victim < 0) victim = k - 1;
    entries_.erase(entries_.begin() + victim);
  }
}

}  // namespace fpa
