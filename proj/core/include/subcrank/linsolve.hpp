#pragma once

#include <memory>

#include <Eigen/SparseCholesky>

#include "subcrank/types.hpp"

namespace subcrank {

enum class SolveBackend {
  cholesky,            // sparse Cholesky with AMD ordering (default)
  conjugate_gradient,  // Jacobi-preconditioned CG, portable fallback
};

/// Reusable factorization of a sparse SPD matrix. Immutable after
/// construction; concurrent solves against one factorization are safe.
class SpdFactorization {
 public:
  SpdFactorization() = default;

  /// Factors K. Throws NumericError if K is not positive-definite.
  explicit SpdFactorization(const SparseMatrix& K,
                            SolveBackend backend = SolveBackend::cholesky);

  /// Solves K x = b to relative residual <= 1e-12.
  /// Throws ParameterError on dimension mismatch.
  Vector solve(const Vector& b) const;

  Eigen::Index dimension() const { return dim_; }
  SolveBackend backend() const { return backend_; }

 private:
  Eigen::Index dim_ = 0;
  SolveBackend backend_ = SolveBackend::cholesky;
  std::shared_ptr<const Eigen::SimplicialLLT<SparseMatrix>> llt_;
  SparseMatrix matrix_;  // retained by the CG backend only
  Vector inv_diag_;      // Jacobi preconditioner
};

inline SpdFactorization factor(const SparseMatrix& K,
                               SolveBackend backend = SolveBackend::cholesky) {
  return SpdFactorization(K, backend);
}

inline Vector solve(const SpdFactorization& fact, const Vector& b) {
  return fact.solve(b);
}

}  // namespace subcrank
