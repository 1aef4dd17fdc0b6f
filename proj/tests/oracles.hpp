// Test-only reference computations, independent of the library's assembly
// and special-function paths: brute-force quadrature of the P1 forms, the
// Gamma integral, and pointwise evaluation of P1 fields.
#pragma once

#include <functional>

#include <Eigen/Dense>

#include "subcrank/mesh_fem.hpp"

namespace oracle {

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

/// Adaptive Simpson quadrature of f over [a, b].
double integrate(const Fn1& f, double a, double b, double tol);

/// Gamma(x) by quadrature of the integral definition; valid for x >= 1.
double gamma_by_quadrature(double x);

/// Dense mass and stiffness over interior nodes by per-element Gauss
/// quadrature (16 points per axis) of the hat products.
Eigen::MatrixXd brute_mass(const subcrank::Mesh& mesh);
Eigen::MatrixXd brute_stiffness(const subcrank::Mesh& mesh);

/// Load vector by per-element quadrature. graded_at_origin switches on a
/// geometric subdivision of the first 1D element for integrands singular
/// at x = 0.
Eigen::VectorXd brute_load(const subcrank::Mesh& mesh, const Fn2& g,
                           bool graded_at_origin = false);

/// Pointwise value of the P1 field with the given interior coefficients
/// (boundary values zero).
double eval_p1(const subcrank::Mesh& mesh, const Eigen::VectorXd& coeffs,
               double x, double y = 0.0);

}  // namespace oracle
