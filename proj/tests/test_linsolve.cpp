#include <random>
#include <vector>

#include <doctest.h>

#include "subcrank/errors.hpp"
#include "subcrank/linsolve.hpp"
#include "subcrank/stats.hpp"

using namespace subcrank;

namespace {

SparseMatrix from_dense(const Eigen::MatrixXd& dense) {
  SparseMatrix out = dense.sparseView();
  out.makeCompressed();
  return out;
}

// A = B'B + I with a fixed seed, guaranteed SPD.
SparseMatrix random_spd(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = dist(rng);
  const Eigen::MatrixXd a =
      b.transpose() * b + Eigen::MatrixXd::Identity(n, n);
  return from_dense(a);
}

Vector random_vector(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = dist(rng);
  return v;
}

const std::vector<SolveBackend> kBackends = {SolveBackend::cholesky,
                                             SolveBackend::conjugate_gradient};

}  // namespace

TEST_SUITE_BEGIN("linsolve");

TEST_CASE("identity solves return the input") {
  SparseMatrix eye(7, 7);
  eye.setIdentity();
  for (auto backend : kBackends) {
    const auto fact = factor(eye, backend);
    const Vector b = random_vector(7, 11);
    CHECK((fact.solve(b) - b).lpNorm<Eigen::Infinity>() <= 1e-14);
  }
}

TEST_CASE("two-by-two row-sum solve") {
  Eigen::MatrixXd k(2, 2);
  k << 2, -1, -1, 2;
  const Vector b = Vector::Ones(2);
  for (auto backend : kBackends) {
    const Vector x = factor(from_dense(k), backend).solve(b);
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("random SPD residual contract") {
  const SparseMatrix k = random_spd(50, 42);
  const Vector b = random_vector(50, 7);
  for (auto backend : kBackends) {
    const Vector x = factor(k, backend).solve(b);
    CHECK((k * x - b).norm() <= 1e-12 * b.norm());
  }
}

TEST_CASE("solve(factor(K), K v) recovers v") {
  const SparseMatrix k = random_spd(40, 3);
  const Vector v = random_vector(40, 5);
  for (auto backend : kBackends) {
    const Vector got = factor(k, backend).solve(k * v);
    CHECK((got - v).norm() <= 1e-10 * v.norm());
  }
}

TEST_CASE("zero right-hand side yields zero") {
  const SparseMatrix k = random_spd(12, 9);
  for (auto backend : kBackends) {
    CHECK(factor(k, backend).solve(Vector::Zero(12)).norm() == 0.0);
  }
}

TEST_CASE("non-SPD matrices are rejected") {
  Eigen::MatrixXd bad(2, 2);
  bad << 1, 0, 0, -1;
  for (auto backend : kBackends) {
    CHECK_THROWS_AS(factor(from_dense(bad), backend), NumericError);
  }
}

TEST_CASE("dimension mismatches are parameter errors") {
  const auto fact = factor(random_spd(6, 1));
  CHECK_THROWS_AS(fact.solve(Vector::Zero(5)), ParameterError);
  SparseMatrix rect(3, 4);
  CHECK_THROWS_AS(factor(rect), ParameterError);
  CHECK_THROWS_AS(SpdFactorization().solve(Vector::Zero(1)), ParameterError);
}

TEST_CASE("factorization counter increments once per factor") {
  const auto before = stats::factorizations.load();
  const auto fact = factor(random_spd(10, 2));
  CHECK(stats::factorizations.load() == before + 1);
  // Repeated solves reuse the factorization.
  for (int i = 0; i < 5; ++i) fact.solve(random_vector(10, i));
  CHECK(stats::factorizations.load() == before + 1);
}

TEST_SUITE_END();
