#pragma once

#include <cstddef>
#include <vector>

#include "fov/complex_matrix.hpp"
#include "fov/fov_engine.hpp"

namespace fov {

/// Grid-based verdict: a "true" result certifies the support gap only at the
/// sampled angles.
struct ConvexoidVerdict {
  bool is_convexoid = false;
  double max_support_gap = 0.0;
  std::size_t n_angles = 0;
  double worst_angle = 0.0;
  bool is_normal = false;
  double tol = 0.0;  // tolerance the verdict was decided at
};

ConvexoidVerdict is_convexoid_numeric(const ComplexMatrix& A, const std::vector<Complex>& eigenvalues,
                                      std::size_t n_angles, double tol);
/// Defaults: 360 angles, tol = 1e-8 * (1 + ||A||_F).
ConvexoidVerdict is_convexoid_numeric(const ComplexMatrix& A, const std::vector<Complex>& eigenvalues);

/// Checks a claimed block decomposition U^* A U = A1 (+) A2 with A1 normal
/// and F(A2) inside F(A1), compared at grid angles. Verifier only; nothing
/// here searches for (U, split).
bool verify_johnson_decomposition(const ComplexMatrix& A, const ComplexMatrix& U, std::size_t split,
                                  double tol, std::size_t n_angles = kDefaultAngles);

struct NormalDecomposition {
  std::vector<Complex> eigenvalues;  // ascending by (Re, Im)
  ComplexMatrix unitary;             // columns are unit eigenvectors, same order
};

/// Diagonalizes a normal matrix through its Hermitian and skew-Hermitian
/// parts: eigenvectors of (A+A*)/2, then per eigenvalue cluster a second
/// Hermitian solve of the compressed (A-A*)/(2i).
NormalDecomposition eigen_decompose_normal(const ComplexMatrix& A, double tol = 1e-10);

}  // namespace fov
