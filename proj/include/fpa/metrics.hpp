#pragma once

#include <vector>

#include "fpa/types.hpp"

namespace fpa {

enum class FrontSource { analytic, archive };

/// Points in objective space, one per column (m x N).
struct FrontSample {
  Matrix points;
  FrontSource source = FrontSource::archive;

  Index size() const { return points.cols(); }
  Index objectives() const { return points.rows(); }
};

/// Euclidean distance from q to the nearest point of the sample.
///
/// This is a sample-nearest distance, not the perpendicular distance to the
/// underlying curve; a dense truth sample keeps the two close.
double point_to_front_distance(const ObjectiveVector& q, const FrontSample& front);

/// Exact nearest-point lookup over a fixed sample. Points are kept sorted by
/// the first objective so a query only scans the slab that can still beat the
/// best distance found so far.
class FrontIndex {
 public:
  explicit FrontIndex(const Matrix& points);
  explicit FrontIndex(const FrontSample& sample) : FrontIndex(sample.points) {}

  double distance(const ObjectiveVector& q) const;
  Index size() const { return sorted_.cols(); }

 private:
  Matrix sorted_;
  std::vector<double> keys_;
};

/// Distance of every estimated point to the truth sample.
Vector nearest_distances(const Matrix& estimated, const FrontIndex& truth);

struct FrontMetrics {
  double error = 0.0;                 // E_f
  double generalized_distance = 0.0;  // D_g
};

/// Both measures from one set of distances, so D_g * N == sqrt(E_f).
FrontMetrics front_metrics(const Matrix& estimated, const FrontIndex& truth);

/// E_f = sum of squared nearest distances.
double front_error(const FrontSample& estimated, const FrontSample& truth);

/// D_g = sqrt(sum of squared nearest distances) / N.
double generalized_distance(const FrontSample& estimated, const FrontSample& truth);

}  // namespace fpa
