#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace subcrank {

using Vector = Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;

}  // namespace subcrank
