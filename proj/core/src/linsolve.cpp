#include "subcrank/linsolve.hpp"

#include <cmath>
#include <string>

#include "subcrank/errors.hpp"
#include "subcrank/stats.hpp"

namespace subcrank {

SpdFactorization::SpdFactorization(const SparseMatrix& K, SolveBackend backend)
    : dim_(K.rows()), backend_(backend) {
  if (K.rows() != K.cols()) {
    throw ParameterError("factor: matrix must be square");
  }
  if (dim_ == 0) {
    throw ParameterError("factor: matrix is empty");
  }
  stats::factorizations.fetch_add(1, std::memory_order_relaxed);

  if (backend_ == SolveBackend::cholesky) {
    auto llt = std::make_shared<Eigen::SimplicialLLT<SparseMatrix>>();
    llt->compute(K);
    if (llt->info() != Eigen::Success) {
      throw NumericError("factor: sparse Cholesky failed (matrix not SPD?)");
    }
    llt_ = std::move(llt);
    return;
  }

  matrix_ = K;
  inv_diag_.resize(dim_);
  for (Eigen::Index i = 0; i < dim_; ++i) {
    const double d = matrix_.coeff(i, i);
    if (!(d > 0.0)) {
      throw NumericError("factor: nonpositive diagonal entry, matrix not SPD");
    }
    inv_diag_[i] = 1.0 / d;
  }
}

Vector SpdFactorization::solve(const Vector& b) const {
  if (dim_ == 0) {
    throw ParameterError("solve: factorization is empty");
  }
  if (b.size() != dim_) {
    throw ParameterError("solve: right-hand side has size " +
                         std::to_string(b.size()) + ", expected " +
                         std::to_string(dim_));
  }
  if (backend_ == SolveBackend::cholesky) {
    return llt_->solve(b);
  }

  // Jacobi-preconditioned conjugate gradients, relative tolerance 1e-12.
  const double bnorm = b.norm();
  Vector x = Vector::Zero(dim_);
  if (bnorm == 0.0) {
    return x;
  }
  Vector r = b;
  Vector z = inv_diag_.cwiseProduct(r);
  Vector p = z;
  double rz = r.dot(z);
  const double tol = 1e-12 * bnorm;
  const Eigen::Index max_iters = 10 * dim_;
  for (Eigen::Index it = 0; it < max_iters; ++it) {
    if (r.norm() <= tol) {
      return x;
    }
    const Vector Kp = matrix_ * p;
    const double pKp = p.dot(Kp);
    if (!(pKp > 0.0)) {
      throw NumericError("solve: conjugate gradients hit a nonpositive "
                         "curvature direction, matrix not SPD");
    }
    const double step = rz / pKp;
    x += step * p;
    r -= step * Kp;
    z = inv_diag_.cwiseProduct(r);
    const double rz_next = r.dot(z);
    p = z + (rz_next / rz) * p;
    rz = rz_next;
  }
  if (r.norm() <= tol) {
    return x;
  }
  throw NumericError("solve: conjugate gradients failed to reach the "
                     "residual tolerance");
}

}  // namespace subcrank
