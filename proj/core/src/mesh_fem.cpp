#include "subcrank/mesh_fem.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "subcrank/errors.hpp"
#include "subcrank/linsolve.hpp"

namespace subcrank {

namespace {

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr int kGaussN = 8;
constexpr double kGaussX[kGaussN] = {
    -0.9602898564975362316, -0.7966664774136267395, -0.5255324099163289858,
    -0.1834346424956498049, 0.1834346424956498049,  0.5255324099163289858,
    0.7966664774136267395,  0.9602898564975362316};
constexpr double kGaussW[kGaussN] = {
    0.1012285362903762591, 0.2223810344533744705, 0.3137066458778872873,
    0.3626837833783619830, 0.3626837833783619830, 0.3137066458778872873,
    0.2223810344533744705, 0.1012285362903762591};

constexpr double kBoxLo = 0.25;
constexpr double kBoxHi = 0.75;

}  // namespace

int Mesh::num_vertices() const {
  const int n = subdivisions + 1;
  return dimension == 1 ? n : n * n;
}

double Mesh::vertex_x(int v) const {
  return dimension == 1 ? h * v : h * (v % (subdivisions + 1));
}

double Mesh::vertex_y(int v) const {
  return dimension == 1 ? 0.0 : h * (v / (subdivisions + 1));
}

Mesh build_mesh(int dimension, int subdivisions) {
  if (dimension != 1 && dimension != 2) {
    throw ParameterError("build_mesh: dimension must be 1 or 2, got " +
                         std::to_string(dimension));
  }
  if (subdivisions < 2) {
    throw ParameterError("build_mesh: need at least 2 subdivisions, got " +
                         std::to_string(subdivisions));
  }
  Mesh mesh;
  mesh.dimension = dimension;
  mesh.subdivisions = subdivisions;
  mesh.h = 1.0 / subdivisions;
  const int m = subdivisions;

  if (dimension == 1) {
    mesh.dof_index.assign(m + 1, -1);
    for (int i = 1; i < m; ++i) {
      mesh.dof_index[i] = static_cast<int>(mesh.interior_nodes.size());
      mesh.interior_nodes.push_back(i);
    }
    mesh.segments.reserve(m);
    for (int e = 0; e < m; ++e) {
      mesh.segments.push_back({e, e + 1});
    }
    return mesh;
  }

  const int stride = m + 1;
  mesh.dof_index.assign(stride * stride, -1);
  for (int j = 1; j < m; ++j) {
    for (int i = 1; i < m; ++i) {
      const int v = j * stride + i;
      mesh.dof_index[v] = static_cast<int>(mesh.interior_nodes.size());
      mesh.interior_nodes.push_back(v);
    }
  }
  // Friedrichs-Keller: both triangles of a cell share the lower-left to
  // upper-right diagonal; 2 M^2 triangles in total.
  mesh.triangles.reserve(2 * m * m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      const int v00 = j * stride + i;
      const int v10 = v00 + 1;
      const int v01 = v00 + stride;
      const int v11 = v01 + 1;
      mesh.triangles.push_back({v00, v10, v11});
      mesh.triangles.push_back({v00, v11, v01});
    }
  }
  return mesh;
}

FemSystem assemble(const Mesh& mesh) {
  const int dofs = mesh.num_dofs();
  std::vector<Eigen::Triplet<double>> mass_t;
  std::vector<Eigen::Triplet<double>> stiff_t;

  auto add = [&](int vi, int vj, double m_val, double s_val) {
    const int di = mesh.dof_index[vi];
    const int dj = mesh.dof_index[vj];
    if (di < 0 || dj < 0) return;
    mass_t.emplace_back(di, dj, m_val);
    stiff_t.emplace_back(di, dj, s_val);
  };

  if (mesh.dimension == 1) {
    const double h = mesh.h;
    for (const auto& seg : mesh.segments) {
      // Exact P1 element matrices on an interval of length h.
      const double m_diag = h / 3.0, m_off = h / 6.0;
      const double s_diag = 1.0 / h, s_off = -1.0 / h;
      add(seg[0], seg[0], m_diag, s_diag);
      add(seg[1], seg[1], m_diag, s_diag);
      add(seg[0], seg[1], m_off, s_off);
      add(seg[1], seg[0], m_off, s_off);
    }
  } else {
    for (const auto& tri : mesh.triangles) {
      double x[3], y[3];
      for (int k = 0; k < 3; ++k) {
        x[k] = mesh.vertex_x(tri[k]);
        y[k] = mesh.vertex_y(tri[k]);
      }
      const double area =
          0.5 * ((x[1] - x[0]) * (y[2] - y[0]) - (x[2] - x[0]) * (y[1] - y[0]));
      // Gradient of the P1 hat at vertex k is (b_k, c_k) / (2 area).
      const double b[3] = {y[1] - y[2], y[2] - y[0], y[0] - y[1]};
      const double c[3] = {x[2] - x[1], x[0] - x[2], x[1] - x[0]};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const double m_val = area / 12.0 * (i == j ? 2.0 : 1.0);
          const double s_val = (b[i] * b[j] + c[i] * c[j]) / (4.0 * area);
          add(tri[i], tri[j], m_val, s_val);
        }
      }
    }
  }

  FemSystem system;
  system.mesh = mesh;
  system.mass.resize(dofs, dofs);
  system.stiffness.resize(dofs, dofs);
  system.mass.setFromTriplets(mass_t.begin(), mass_t.end());
  system.stiffness.setFromTriplets(stiff_t.begin(), stiff_t.end());
  system.mass.makeCompressed();
  system.stiffness.makeCompressed();
  return system;
}

namespace {

// integral of x^{3/4} resp. x^{-1/4} over [a, b], a >= 0
double int_x34(double a, double b) {
  return 4.0 / 7.0 * (std::pow(b, 1.75) - std::pow(a, 1.75));
}
double int_xm14(double a, double b) {
  return 4.0 / 3.0 * (std::pow(b, 0.75) - std::pow(a, 0.75));
}

Vector load_xpow14(const Mesh& mesh) {
  Vector out = Vector::Zero(mesh.num_dofs());
  const double h = mesh.h;
  for (const auto& seg : mesh.segments) {
    const double xl = mesh.vertex_x(seg[0]);
    const double xr = mesh.vertex_x(seg[1]);
    // x^{-1/4} times the rising resp. falling hat, integrated exactly.
    const double i34 = int_x34(xl, xr);
    const double i14 = int_xm14(xl, xr);
    const double rise = (i34 - xl * i14) / h;
    const double fall = (xr * i14 - i34) / h;
    if (mesh.dof_index[seg[0]] >= 0) out[mesh.dof_index[seg[0]]] += fall;
    if (mesh.dof_index[seg[1]] >= 0) out[mesh.dof_index[seg[1]]] += rise;
  }
  return out;
}

Vector load_box1d(const Mesh& mesh) {
  Vector out = Vector::Zero(mesh.num_dofs());
  const double h = mesh.h;
  for (const auto& seg : mesh.segments) {
    const double xl = mesh.vertex_x(seg[0]);
    const double xr = mesh.vertex_x(seg[1]);
    const double lo = std::max(xl, kBoxLo);
    const double hi = std::min(xr, kBoxHi);
    if (lo >= hi) continue;
    const double rise = ((hi - xl) * (hi - xl) - (lo - xl) * (lo - xl)) / (2.0 * h);
    const double fall = ((xr - lo) * (xr - lo) - (xr - hi) * (xr - hi)) / (2.0 * h);
    if (mesh.dof_index[seg[0]] >= 0) out[mesh.dof_index[seg[0]]] += fall;
    if (mesh.dof_index[seg[1]] >= 0) out[mesh.dof_index[seg[1]]] += rise;
  }
  return out;
}

Vector load_box2d(const Mesh& mesh) {
  if (mesh.subdivisions % 4 != 0) {
    throw AlignmentError(
        "load_vector: the 2D box indicator requires the subdivision count "
        "to be divisible by 4 so the box edges lie on mesh lines (got M = " +
        std::to_string(mesh.subdivisions) + ")");
  }
  Vector out = Vector::Zero(mesh.num_dofs());
  const double tri_area = 0.5 * mesh.h * mesh.h;
  for (const auto& tri : mesh.triangles) {
    // Aligned box: every triangle is entirely inside or outside, so the
    // centroid decides, and each inside triangle contributes |T|/3 per hat.
    double cx = 0.0, cy = 0.0;
    for (int k = 0; k < 3; ++k) {
      cx += mesh.vertex_x(tri[k]);
      cy += mesh.vertex_y(tri[k]);
    }
    cx /= 3.0;
    cy /= 3.0;
    if (cx < kBoxLo || cx > kBoxHi || cy < kBoxLo || cy > kBoxHi) continue;
    for (int k = 0; k < 3; ++k) {
      if (mesh.dof_index[tri[k]] >= 0) {
        out[mesh.dof_index[tri[k]]] += tri_area / 3.0;
      }
    }
  }
  return out;
}

Vector load_callable(const Mesh& mesh,
                     const std::function<double(double, double)>& fn) {
  Vector out = Vector::Zero(mesh.num_dofs());
  if (mesh.dimension == 1) {
    for (const auto& seg : mesh.segments) {
      const double xl = mesh.vertex_x(seg[0]);
      const double xr = mesh.vertex_x(seg[1]);
      const double mid = 0.5 * (xl + xr);
      const double half = 0.5 * (xr - xl);
      double fall = 0.0, rise = 0.0;
      for (int q = 0; q < kGaussN; ++q) {
        const double xq = mid + half * kGaussX[q];
        const double wq = half * kGaussW[q];
        const double g = fn(xq, 0.0);
        const double lam = (xq - xl) / (xr - xl);
        rise += wq * g * lam;
        fall += wq * g * (1.0 - lam);
      }
      if (mesh.dof_index[seg[0]] >= 0) out[mesh.dof_index[seg[0]]] += fall;
      if (mesh.dof_index[seg[1]] >= 0) out[mesh.dof_index[seg[1]]] += rise;
    }
    return out;
  }
  for (const auto& tri : mesh.triangles) {
    double x[3], y[3];
    for (int k = 0; k < 3; ++k) {
      x[k] = mesh.vertex_x(tri[k]);
      y[k] = mesh.vertex_y(tri[k]);
    }
    const double area =
        0.5 * std::abs((x[1] - x[0]) * (y[2] - y[0]) - (x[2] - x[0]) * (y[1] - y[0]));
    // Duffy map from the unit square: barycentrics (1-u, u(1-v), uv),
    // Jacobian 2 |T| u. Tensor Gauss per axis.
    for (int qu = 0; qu < kGaussN; ++qu) {
      const double u = 0.5 * (1.0 + kGaussX[qu]);
      const double wu = 0.5 * kGaussW[qu];
      for (int qv = 0; qv < kGaussN; ++qv) {
        const double v = 0.5 * (1.0 + kGaussX[qv]);
        const double wv = 0.5 * kGaussW[qv];
        const double lam[3] = {1.0 - u, u * (1.0 - v), u * v};
        const double xq = lam[0] * x[0] + lam[1] * x[1] + lam[2] * x[2];
        const double yq = lam[0] * y[0] + lam[1] * y[1] + lam[2] * y[2];
        const double w = wu * wv * 2.0 * area * u * fn(xq, yq);
        for (int k = 0; k < 3; ++k) {
          if (mesh.dof_index[tri[k]] >= 0) {
            out[mesh.dof_index[tri[k]]] += w * lam[k];
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

Vector load_vector(const Mesh& mesh, const SpatialProfile& g) {
  switch (g.kind) {
    case SpatialProfile::Kind::zero:
      return Vector::Zero(mesh.num_dofs());
    case SpatialProfile::Kind::xpow14:
      if (mesh.dimension != 1) {
        throw ParameterError("load_vector: x^{-1/4} profile is 1D only");
      }
      return load_xpow14(mesh);
    case SpatialProfile::Kind::box1d:
      if (mesh.dimension != 1) {
        throw ParameterError("load_vector: box1d profile requires a 1D mesh");
      }
      return load_box1d(mesh);
    case SpatialProfile::Kind::box2d:
      if (mesh.dimension != 2) {
        throw ParameterError("load_vector: box2d profile requires a 2D mesh");
      }
      return load_box2d(mesh);
    case SpatialProfile::Kind::callable:
      if (!g.fn) {
        throw ParameterError("load_vector: callable profile has no function");
      }
      return load_callable(mesh, g.fn);
  }
  throw ParameterError("load_vector: unknown spatial profile kind");
}

Vector l2_project(const FemSystem& system, const SpatialProfile& g) {
  const Vector b = load_vector(system.mesh, g);
  return factor(system.mass).solve(b);
}

double l2_norm(const FemSystem& system, const Vector& v) {
  if (v.size() != system.mass.rows()) {
    throw ParameterError("l2_norm: vector has size " + std::to_string(v.size()) +
                         ", expected " + std::to_string(system.mass.rows()));
  }
  const double q = v.dot(system.mass * v);
  return std::sqrt(std::max(0.0, q));
}

}  // namespace subcrank
