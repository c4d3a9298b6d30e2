#pragma once

// Shared deterministic test-data generators and small oracles.

#include <cmath>
#include <cstdint>
#include <vector>

#include "fov/complex_matrix.hpp"
#include "fov/linalg.hpp"
#include "fov/rng.hpp"

namespace fov::testing {

inline ComplexMatrix random_matrix(std::size_t n, SplitMix64& rng, double scale = 1.0) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = scale * Complex(2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0);
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const ComplexMatrix g = random_matrix(n, rng);
  return 0.5 * (g + g.adjoint());
}

inline ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  return hermitian_eigen(random_hermitian(n, seed)).eigenvectors;
}

inline std::vector<Complex> random_points(std::size_t n, std::uint64_t seed, double scale = 2.0) {
  SplitMix64 rng(seed);
  std::vector<Complex> pts(n);
  for (Complex& p : pts)
    p = scale * Complex(2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0);
  return pts;
}

inline ComplexMatrix random_normal_matrix(std::size_t n, std::uint64_t seed,
                                          std::vector<Complex>* spectrum = nullptr) {
  const std::vector<Complex> lambda = random_points(n, seed ^ 0x5eedf00dull);
  const ComplexMatrix u = random_unitary(n, seed);
  if (spectrum) *spectrum = lambda;
  return u * ComplexMatrix::diagonal(lambda) * u.adjoint();
}

// Upper triangular: not normal (generically), spectrum = diagonal.
inline ComplexMatrix random_triangular(std::size_t n, std::uint64_t seed,
                                       std::vector<Complex>* spectrum = nullptr) {
  SplitMix64 rng(seed);
  ComplexMatrix t(n, n);
  std::vector<Complex> lambda(n);
  for (std::size_t i = 0; i < n; ++i) {
    lambda[i] = 2.0 * Complex(2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0);
    t(i, i) = lambda[i];
    for (std::size_t j = i + 1; j < n; ++j)
      t(i, j) = Complex(2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0);
  }
  if (spectrum) *spectrum = lambda;
  return t;
}

// Unitarily similar to a triangular matrix: dense, non-normal, known spectrum.
inline ComplexMatrix random_known_spectrum(std::size_t n, std::uint64_t seed,
                                           std::vector<Complex>* spectrum = nullptr) {
  const ComplexMatrix t = random_triangular(n, seed, spectrum);
  const ComplexMatrix q = random_unitary(n, seed ^ 0xabcdefull);
  return q * t * q.adjoint();
}

inline ComplexMatrix jordan2() {
  ComplexMatrix j(2, 2);
  j(0, 1) = 1.0;
  return j;
}

// diag(2,-2,2i,-2i) (+) nilpotent Jordan: convexoid but not normal.
inline ComplexMatrix square_plus_jordan() {
  return direct_sum(ComplexMatrix::diagonal({2.0, -2.0, Complex(0, 2), Complex(0, -2)}), jordan2());
}

inline std::vector<Complex> square_plus_jordan_spectrum() {
  return {2.0, -2.0, Complex(0, 2), Complex(0, -2), 0.0, 0.0};
}

// Reference 4x4 fixture: a real orthogonal U and a complex diagonal D whose
// product U D U^T is normal with a quadrilateral spectral polygon.
inline ComplexMatrix fixture_unitary() {
  const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  ComplexMatrix u(4, 4);
  const double vals[4][4] = {
      {0.5, s3 / 2.0, 0.0, 0.0},
      {0.5, -s3 / 6.0, 0.0, s6 / 3.0},
      {0.5, -s3 / 6.0, s2 / 2.0, -s6 / 6.0},
      {0.5, -s3 / 6.0, -s2 / 2.0, -s6 / 6.0},
  };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) u(i, j) = vals[i][j];
  return u;
}

inline std::vector<Complex> fixture_diagonal() {
  return {Complex(-1, -5), Complex(-2, 0), Complex(3, -2), Complex(2, 5)};
}

inline ComplexMatrix fixture_matrix() {
  const ComplexMatrix u = fixture_unitary();
  return u * ComplexMatrix::diagonal(fixture_diagonal()) * u.adjoint();
}

// fixture spectrum in the (Re, Im)-ascending order the decomposition reports
inline std::vector<Complex> fixture_sorted_eigenvalues() {
  return {Complex(-2, 0), Complex(-1, -5), Complex(2, 5), Complex(3, -2)};
}

inline double eigen_residual(const ComplexMatrix& h, const EigenDecomposition& eig) {
  const ComplexMatrix lhs = h * eig.eigenvectors;
  const ComplexMatrix rhs = eig.eigenvectors * ComplexMatrix::diagonal(ComplexVector(
                                                   eig.eigenvalues.begin(), eig.eigenvalues.end()));
  return (lhs - rhs).frobenius_norm();
}

inline double unitarity_error(const ComplexMatrix& q) {
  return (q.adjoint() * q - ComplexMatrix::identity(q.rows())).frobenius_norm();
}

// Support function of the convex hull of a point set.
inline double points_support(const std::vector<Complex>& pts, double theta) {
  double best = -1e300;
  for (const Complex& p : pts) best = std::max(best, (std::polar(1.0, -theta) * p).real());
  return best;
}

}  // namespace fov::testing
