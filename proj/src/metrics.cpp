#include "fpa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fpa {

namespace {

void check_nonempty(const Matrix& points, const char* what) {
  if (points.cols() == 0) throw std::invalid_argument(std::string(what) + ": empty front sample");
}

}  // namespace

double point_to_front_distance(const ObjectiveVector& q, const FrontSample& front) {
  check_nonempty(front.points, "point_to_front_distance");
  if (q.size() != front.points.rows()) {
    throw std::invalid_argument("point_to_front_distance: dimension mismatch");
  }
  return std::sqrt((front.points.colwise() - q).colwise().squaredNorm().minCoeff());
}

FrontIndex::FrontIndex(const Matrix& points) {
  check_nonempty(points, "FrontIndex");
  std::vector<Index> order(static_cast<std::size_t>(points.cols()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return points(0, a) < points(0, b); });
  sorted_.resize(points.rows(), points.cols());
  keys_.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted_.col(static_cast<Index>(i)) = points.col(order[i]);
    keys_[i] = points(0, order[i]);
  }
}

double FrontIndex::distance(const ObjectiveVector& q) const {
  if (q.size() != sorted_.rows()) throw std::invalid_argument("FrontIndex: dimension mismatch");
  const auto n = static_cast<Index>(keys_.size());
  const Index start = std::lower_bound(keys_.begin(), keys_.end(), q[0]) - keys_.begin();
  double best = std::numeric_limits<double>::infinity();
  for (Index i = start; i < n; ++i) {
    const double dx = keys_[static_cast<std::size_t>(i)] - q[0];
    if (dx * dx >= best) break;
    best = std::min(best, (sorted_.col(i) - q).squaredNorm());
  }
  for (Index i = start - 1; i >= 0; --i) {
    const double dx = q[0] - keys_[static_cast<std::size_t>(i)];
    if (dx * dx >= best) break;
    best = std::min(best, (sorted_.col(i) - q).squaredNorm());
  }
  return std::sqrt(best);
}

Vector nearest_distances(const Matrix& estimated, const FrontIndex& truth) {
  Vector d(estimated.cols());
  for (Index j = 0; j < estimated.cols(); ++j) {
    d[j] = truth.distance(estimated.col(j));
  }
  return d;
}

FrontMetrics front_metrics(const Matrix& estimated, const FrontIndex& truth) {
  check_nonempty(estimated, "front_metrics");
  const double sum_sq = nearest_distances(estimated, truth).squaredNorm();
  return {sum_sq, std::sqrt(sum_sq) / static_cast<double>(estimated.cols())};
}

double front_error(const FrontSample& estimated, const FrontSample& truth) {
  return front_metrics(estimated.points, FrontIndex(truth)).error;
}

double generalized_distance(const FrontSample& estimated, const FrontSample& truth) {
  return front_metrics(estimated.points, FrontIndex(truth)).generalized_distance;
}

}  // namespace fpa
