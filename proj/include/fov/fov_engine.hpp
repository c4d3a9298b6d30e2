#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "fov/complex_matrix.hpp"

namespace fov {

inline constexpr std::size_t kDefaultAngles = 360;

/// One direction of the support sweep. The support value is the maximal
/// extent of F(A) along the unit direction e^{i theta}.
struct SupportSample {
  double theta = 0.0;
  double support = 0.0;
  Complex boundary_point;
  ComplexVector witness;  // unit vector x with x^* A x = boundary_point
};

struct FovBoundary {
  std::vector<SupportSample> samples;  // strictly increasing theta on a uniform grid
  std::size_t source_dim = 0;
};

/// (e^{-i theta} A + e^{i theta} A^*) / 2.
ComplexMatrix rotated_hermitian_part(const ComplexMatrix& A, double theta);

SupportSample support(const ComplexMatrix& A, double theta);

FovBoundary boundary(const ComplexMatrix& A, std::size_t n_angles = kDefaultAngles);

/// Support values alone on the uniform angle grid; the cheap path for tight
/// verification loops that never look at witnesses.
std::vector<double> support_values(const ComplexMatrix& A, std::size_t n_angles);

/// Outer support-function membership test against a precomputed sweep:
/// true iff Re(e^{-i theta} z) <= support(theta) + tol at every sampled angle.
/// A negative tol demands strict interiority by that margin.
bool contains(const FovBoundary& sweep, Complex z, double tol);
bool contains(const ComplexMatrix& A, Complex z, std::size_t n_angles, double tol);

/// Rayleigh quotients of pseudorandom unit vectors; reproducible from seed.
std::vector<Complex> random_field_samples(const ComplexMatrix& A, std::size_t count,
                                          std::uint64_t seed);

struct SupportGap {
  double max_gap = 0.0;
  double worst_theta = 0.0;
};

/// Max over grid angles of [support of F(A)] - [support of co(eigenvalues)].
/// Nonnegative up to solver noise; <= tol means numerically convexoid.
SupportGap support_gap_details(const ComplexMatrix& A, const std::vector<Complex>& eigenvalues,
                               std::size_t n_angles);
double support_gap_to_hull(const ComplexMatrix& A, const std::vector<Complex>& eigenvalues,
                           std::size_t n_angles);

}  // namespace fov
