#pragma once

#include <Eigen/Dense>

namespace fpa {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// A point in decision space.
using SolutionVector = VectorX<double>;
/// Objective values of one point, minimization throughout.
using ObjectiveVector = VectorX<double>;
using Vector = VectorX<double>;
using Matrix = MatrixX<double>;
using Index = Eigen::Index;

}  // namespace fpa
