#pragma once

#include <cstddef>
#include <vector>

#include "fov/complex_matrix.hpp"

namespace fov {

/// Components with |v_k| <= kZeroComponentRel * ||v|| are treated as zero when
/// dispatching the contact-point cases. Shared across the library so the case
/// split stays deterministic.
inline constexpr double kZeroComponentRel = 1e-12;

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unit columns, column j for eigenvalues[j]
};

struct JacobiOptions {
  double hermitian_tol_rel = 1e-12;  // input check: ||H - H*||_F <= rel * (1 + ||H||_F)
  double off_tol_rel = 1e-14;        // convergence: off-diagonal Frobenius <= rel * ||H||_F
  int max_sweeps = 100;
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix. Unconditionally
/// accurate for the small orders used here (n <= 64).
EigenDecomposition hermitian_eigen(const ComplexMatrix& H, const JacobiOptions& options = {});

/// Same solver, started from a unitary guess basis. When H varies smoothly
/// along a parameter sweep, passing the previous eigenvector basis leaves an
/// almost-diagonal problem and cuts the sweep count sharply. Results satisfy
/// the same residual bounds as the cold start.
EigenDecomposition hermitian_eigen_warm(const ComplexMatrix& H, const ComplexMatrix& basis,
                                        const JacobiOptions& options = {});

bool is_unitary(const ComplexMatrix& U, double tol);
bool is_normal(const ComplexMatrix& A, double tol);

/// Unitary DFT matrix with entries w^(row*col)/sqrt(n), w = exp(-2*pi*i/n).
ComplexMatrix dft_matrix(std::size_t n);

/// Multiplies v by a unit scalar so that entry k becomes real and positive.
ComplexVector phase_normalize(const ComplexVector& v, std::size_t k);

/// n x (n-1) matrix whose columns are the standard basis vectors e_j, j != k.
ComplexMatrix deletion_projector(std::size_t n, std::size_t k);

/// P^T y for the deletion projector; requires y_k = 0 (up to the zero threshold).
ComplexVector project_down(const ComplexVector& y, std::size_t k);

/// Deletes row k and column k.
ComplexMatrix principal_submatrix(const ComplexMatrix& A, std::size_t k);

/// x^* A x for a unit vector x.
Complex rayleigh(const ComplexMatrix& A, const ComplexVector& x);

}  // namespace fov
