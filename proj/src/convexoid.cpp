#include "fov/convexoid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "fov/linalg.hpp"

namespace fov {

ConvexoidVerdict is_convexoid_numeric(const ComplexMatrix& A, const std::vector<Complex>& eigenvalues,
                                      std::size_t n_angles, double tol) {
  if (n_angles < 90) throw Error(Errc::invalid_argument, "convexoid test requires n_angles >= 90");
  if (tol <= 0.0) throw Error(Errc::invalid_argument, "convexoid test requires tol > 0");
  const SupportGap gap = support_gap_details(A, eigenvalues, n_angles);
  ConvexoidVerdict v;
  v.max_support_gap = gap.max_gap;
  v.worst_angle = gap.worst_theta;
  v.n_angles = n_angles;
  v.tol = tol;
  v.is_convexoid = gap.max_gap <= tol;
  v.is_normal = is_normal(A, 1e-10);
  return v;
}

ConvexoidVerdict is_convexoid_numeric(const ComplexMatrix& A, const std::vector<Complex>& eigenvalues) {
  return is_convexoid_numeric(A, eigenvalues, kDefaultAngles, 1e-8 * (1.0 + A.frobenius_norm()));
}

bool verify_johnson_decomposition(const ComplexMatrix& A, const ComplexMatrix& U, std::size_t split,
                                  double tol, std::size_t n_angles) {
  if (!A.is_square() || !U.is_square() || U.rows() != A.rows())
    throw Error(Errc::dimension_mismatch, "decomposition verifier shape mismatch");
  const std::size_t n = A.rows();
  if (split < 1 || split >= n) throw Error(Errc::bad_split, "split must satisfy 1 <= split < n");
  if (n_angles == 0) throw Error(Errc::invalid_argument, "n_angles must be >= 1");

  if (!is_unitary(U, tol)) return false;

  const ComplexMatrix b = U.adjoint() * A * U;
  const double scale = 1.0 + A.frobenius_norm();
  double off = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i < split) != (j < split)) off += std::norm(b(i, j));
  if (std::sqrt(off) > tol * scale) return false;

  const ComplexMatrix a1 = b.block(0, 0, split, split);
  const ComplexMatrix a2 = b.block(split, split, n - split, n - split);
  if (!is_normal(a1, tol)) return false;

  for (std::size_t j = 0; j < n_angles; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_angles);
    if (support(a2, theta).support > support(a1, theta).support + tol * scale) return false;
  }
  return true;
}

NormalDecomposition eigen_decompose_normal(const ComplexMatrix& A, double tol) {
  if (!A.is_square()) throw Error(Errc::non_square, "eigen_decompose_normal requires a square matrix");
  if (!is_normal(A, tol)) throw Error(Errc::not_normal, "matrix is not normal within tolerance");

  const std::size_t n = A.rows();
  const double scale = 1.0 + A.frobenius_norm();
  const ComplexMatrix herm = 0.5 * (A + A.adjoint());
  const ComplexMatrix skew = Complex(0.0, -0.5) * (A - A.adjoint());

  EigenDecomposition eh = hermitian_eigen(herm);
  ComplexMatrix u = eh.eigenvectors;

  // Within each cluster of (numerically) equal Hermitian-part eigenvalues,
  // rotate the basis to diagonalize the compressed skew part as well.
  const double cluster_tol = 1e-7 * scale;
  std::size_t begin = 0;
  while (begin < n) {
    std::size_t end = begin + 1;
    while (end < n && eh.eigenvalues[end] - eh.eigenvalues[end - 1] <= cluster_tol) ++end;
    const std::size_t m = end - begin;
    if (m > 1) {
      ComplexMatrix basis(n, m);
      for (std::size_t c = 0; c < m; ++c) basis.set_column(c, u.column(begin + c));
      const ComplexMatrix compressed = basis.adjoint() * skew * basis;
      const EigenDecomposition es = hermitian_eigen(compressed);
      const ComplexMatrix rotated = basis * es.eigenvectors;
      for (std::size_t c = 0; c < m; ++c) u.set_column(begin + c, rotated.column(c));
    }
    begin = end;
  }

  // Eigenvalues as diagonal Rayleigh quotients of the joint basis.
  std::vector<Complex> lambda(n);
  for (std::size_t j = 0; j < n; ++j) {
    const ComplexVector col = u.column(j);
    Complex s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex row = 0.0;
      for (std::size_t t = 0; t < n; ++t) row += A(i, t) * col[t];
      s += std::conj(col[i]) * row;
    }
    lambda[j] = s;
  }

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (lambda[a].real() != lambda[b].real()) return lambda[a].real() < lambda[b].real();
    return lambda[a].imag() < lambda[b].imag();
  });

  NormalDecomposition out;
  out.eigenvalues.resize(n);
  out.unitary = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = lambda[perm[j]];
    out.unitary.set_column(j, u.column(perm[j]));
  }

  const ComplexMatrix recon =
      out.unitary * ComplexMatrix::diagonal(out.eigenvalues) * out.unitary.adjoint();
  if ((A - recon).frobenius_norm() > 1e-9 * scale)
    throw Error(Errc::not_normal, "joint diagonalization residual exceeds bound");
  return out;
}

}  // namespace fov
