#pragma once

#include <array>
#include <functional>
#include <vector>

#include "subcrank/types.hpp"

namespace subcrank {

/// Spatial data profile: right-hand-side factor g(x) or initial datum.
struct SpatialProfile {
  enum class Kind { zero, xpow14, box1d, box2d, callable };

  Kind kind = Kind::zero;
  std::function<double(double, double)> fn;  // callable only; y ignored in 1D

  static SpatialProfile zero() { return {Kind::zero, {}}; }
  /// g(x) = x^{-1/4} on the unit interval.
  static SpatialProfile xpow14() { return {Kind::xpow14, {}}; }
  /// Indicator of [1/4, 3/4].
  static SpatialProfile box1d() { return {Kind::box1d, {}}; }
  /// Indicator of [1/4, 3/4]^2.
  static SpatialProfile box2d() { return {Kind::box2d, {}}; }
  static SpatialProfile callable(std::function<double(double, double)> f) {
    return {Kind::callable, std::move(f)};
  }
};

/// Uniform mesh of the unit interval (1D) or the unit square (2D).
/// The 2D mesh is the Friedrichs–Keller pattern: every grid cell split by
/// the diagonal from its lower-left to its upper-right corner.
/// Degrees of freedom are the interior vertices (homogeneous Dirichlet).
struct Mesh {
  int dimension = 1;
  int subdivisions = 0;  // M cells per axis
  double h = 0.0;        // 1/M

  std::vector<int> interior_nodes;  // global vertex ids, dof order
  std::vector<int> dof_index;       // vertex id -> dof, or -1 on the boundary
  std::vector<std::array<int, 2>> segments;   // 1D elements
  std::vector<std::array<int, 3>> triangles;  // 2D elements

  int num_dofs() const { return static_cast<int>(interior_nodes.size()); }
  int num_vertices() const;
  double vertex_x(int v) const;
  double vertex_y(int v) const;
};

/// Builds the uniform mesh. Requires dimension in {1, 2} and M >= 2.
Mesh build_mesh(int dimension, int subdivisions);

/// Assembled P1 Galerkin system over the interior nodes.
struct FemSystem {
  Mesh mesh;
  SparseMatrix mass;       // SPD
  SparseMatrix stiffness;  // SPD, operator -Laplace
};

/// Assembles mass and stiffness from the exact elementwise P1 formulas.
FemSystem assemble(const Mesh& mesh);

/// Load vector b_i = integral of g * phi_i over the domain.
/// xpow14 and the box indicators are integrated exactly (closed forms /
/// mesh-aligned geometry); callables use fixed-order Gauss quadrature.
/// Throws AlignmentError for a 2D box on a grid not divisible by 4.
Vector load_vector(const Mesh& mesh, const SpatialProfile& g);

/// L2 projection: solves mass * c = load_vector(g).
Vector l2_project(const FemSystem& system, const SpatialProfile& g);

/// Discrete L2 norm sqrt(v' M v).
double l2_norm(const FemSystem& system, const Vector& v);

}  // namespace subcrank
