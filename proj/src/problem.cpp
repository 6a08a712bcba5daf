#include "fpa/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fpa {

Bounds::Bounds(Vector lo, Vector hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size()) {
    throw std::invalid_argument("Bounds: lower and upper differ in length");
  }
  if (lower.size() == 0) {
    throw std::invalid_argument("Bounds: empty");
  }
  if (!(lower.array() < upper.array()).all()) {
    throw std::invalid_argument("Bounds: every lower bound must be below its upper bound");
  }
}

Bounds Bounds::uniform(Index d, double lo, double hi) {
  return Bounds(Vector::Constant(d, lo), Vector::Constant(d, hi));
}

bool Bounds::contains(const Vector& x) const {
  return x.size() == lower.size() && (x.array() >= lower.array()).all() &&
         (x.array() <= upper.array()).all();
}

namespace {

double tolerance(const Vector& scale, Index k) {
  const double s = k < scale.size() ? std::abs(scale[k]) : 1.0;
  return kFeasibilityRelTol * std::max(1.0, s);
}

}  // namespace

ConstraintReport ConstraintReport::make(Vector inequality, const Vector& inequality_scale,
                                        Vector equality, const Vector& equality_scale) {
  ConstraintReport report;
  double total = 0.0;
  for (Index k = 0; k < inequality.size(); ++k) {
    if (inequality[k] > tolerance(inequality_scale, k)) total += inequality[k];
  }
  for (Index j = 0; j < equality.size(); ++j) {
    if (std::abs(equality[j]) > tolerance(equality_scale, j)) total += std::abs(equality[j]);
  }
  report.inequality = std::move(inequality);
  report.equality = std::move(equality);
  report.total_violation = total;
  return report;
}

Index ProblemDefinition::discrete_count() const {
  return static_cast<Index>(std::count(discrete_mask.begin(), discrete_mask.end(), true));
}

double ProblemDefinition::violation(const SolutionVector& x) const {
  return constrained() ? constraints(x).total_violation : 0.0;
}

SolutionVector ProblemDefinition::repair(const SolutionVector& x) const {
  SolutionVector y = bounds.clamp(x);
  for (std::size_t i = 0; i < discrete_mask.size(); ++i) {
    if (discrete_mask[i]) {
      const auto k = static_cast<Index>(i);
      y[k] = std::clamp(std::round(y[k]), std::ceil(bounds.lower[k]), std::floor(bounds.upper[k]));
    }
  }
  return y;
}

}  // namespace fpa
