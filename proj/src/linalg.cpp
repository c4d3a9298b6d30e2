#include "fov/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace fov {

namespace {

double off_diagonal_norm_sq(const ComplexMatrix& w) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (i != j) s += std::norm(w(i, j));
  return s;
}

// One complex Jacobi rotation annihilating w(p, q). Maintains Hermitian
// storage of w and accumulates the rotation into q_acc (right-multiplied).
// Pivots at or below skip_tol are left alone: if every pivot is that small,
// the off-diagonal norm is already below the convergence threshold.
void jacobi_rotate(ComplexMatrix& w, ComplexMatrix& q_acc, std::size_t p, std::size_t q,
                   double skip_tol) {
  const Complex g = w(p, q);
  const double ag = std::abs(g);
  if (ag <= skip_tol) return;

  const double app = w(p, p).real();
  const double aqq = w(q, q).real();
  const double tau = (aqq - app) / (2.0 * ag);
  const double root = std::sqrt(1.0 + tau * tau);
  const double t = (tau >= 0.0) ? 1.0 / (tau + root) : -1.0 / (-tau + root);
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex phase = g / ag;

  const std::size_t n = w.rows();
  w(p, p) = Complex(app - t * ag, 0.0);
  w(q, q) = Complex(aqq + t * ag, 0.0);
  w(p, q) = 0.0;
  w(q, p) = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const Complex wrp = w(r, p);
    const Complex wrq = w(r, q);
    const Complex new_p = c * wrp - s * std::conj(phase) * wrq;
    const Complex new_q = s * phase * wrp + c * wrq;
    w(r, p) = new_p;
    w(p, r) = std::conj(new_p);
    w(r, q) = new_q;
    w(q, r) = std::conj(new_q);
  }
  for (std::size_t r = 0; r < n; ++r) {
    const Complex qrp = q_acc(r, p);
    const Complex qrq = q_acc(r, q);
    q_acc(r, p) = c * qrp - s * std::conj(phase) * qrq;
    q_acc(r, q) = s * phase * qrp + c * qrq;
  }
}

}  // namespace

namespace {

// Core sweep loop: w is the (Hermitian, real-diagonal) working matrix already
// expressed in the basis stored in q; scale fixes the convergence threshold.
EigenDecomposition jacobi_run(ComplexMatrix w, ComplexMatrix q, double scale,
                              const JacobiOptions& options) {
  const std::size_t n = w.rows();
  if (n >= 2) {
    const double off_tol = options.off_tol_rel * scale;
    const double skip_tol = off_tol / static_cast<double>(n);
    int sweep = 0;
    while (off_diagonal_norm_sq(w) > off_tol * off_tol) {
      if (sweep >= options.max_sweeps)
        throw Error(Errc::no_convergence, "Jacobi sweep limit exceeded");
      ++sweep;
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t qq = p + 1; qq < n; ++qq) jacobi_rotate(w, q, p, qq, skip_tol);
    }
  }

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return w(a, a).real() < w(b, b).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = w(perm[j], perm[j]).real();
    out.eigenvectors.set_column(j, q.column(perm[j]));
  }
  return out;
}

void check_hermitian(const ComplexMatrix& H, double scale, const JacobiOptions& options) {
  if (!H.is_square()) throw Error(Errc::non_square, "hermitian_eigen requires a square matrix");
  double asym = 0.0;
  for (std::size_t i = 0; i < H.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double d = std::norm(H(i, j) - std::conj(H(j, i)));
      asym += (i == j) ? d : 2.0 * d;
    }
  if (std::sqrt(asym) > options.hermitian_tol_rel * (1.0 + scale))
    throw Error(Errc::non_hermitian, "input is not Hermitian within tolerance");
}

ComplexMatrix symmetrized(const ComplexMatrix& H) {
  const std::size_t n = H.rows();
  ComplexMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = 0.5 * (H(i, j) + std::conj(H(j, i)));
    w(i, i) = Complex(w(i, i).real(), 0.0);
  }
  return w;
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& H, const JacobiOptions& options) {
  const double scale = H.is_square() ? H.frobenius_norm() : 0.0;
  check_hermitian(H, scale, options);
  return jacobi_run(symmetrized(H), ComplexMatrix::identity(H.rows()), scale, options);
}

EigenDecomposition hermitian_eigen_warm(const ComplexMatrix& H, const ComplexMatrix& basis,
                                        const JacobiOptions& options) {
  const double scale = H.is_square() ? H.frobenius_norm() : 0.0;
  check_hermitian(H, scale, options);
  if (!basis.is_square() || basis.rows() != H.rows())
    throw Error(Errc::dimension_mismatch, "warm-start basis shape mismatch");
  return jacobi_run(symmetrized(basis.adjoint() * H * basis), basis, scale, options);
}

bool is_unitary(const ComplexMatrix& U, double tol) {
  if (!U.is_square()) throw Error(Errc::non_square, "is_unitary requires a square matrix");
  const ComplexMatrix d = U.adjoint() * U - ComplexMatrix::identity(U.rows());
  return d.frobenius_norm() <= tol;
}

bool is_normal(const ComplexMatrix& A, double tol) {
  if (!A.is_square()) throw Error(Errc::non_square, "is_normal requires a square matrix");
  const ComplexMatrix c = A.adjoint() * A - A * A.adjoint();
  const double f = A.frobenius_norm();
  return c.frobenius_norm() <= tol * (1.0 + f * f);
}

ComplexMatrix dft_matrix(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "dft_matrix requires n >= 1");
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Complex> roots(n);
  for (std::size_t m = 0; m < n; ++m)
    roots[m] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
  ComplexMatrix f(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) f(r, c) = inv_sqrt_n * roots[(r * c) % n];
  return f;
}

ComplexVector phase_normalize(const ComplexVector& v, std::size_t k) {
  if (k >= v.size()) throw Error(Errc::index_out_of_range, "phase_normalize index out of range");
  const double nv = norm2(v);
  const double ak = std::abs(v[k]);
  if (ak <= kZeroComponentRel * nv)
    throw Error(Errc::zero_component, "component k is zero within threshold");
  const Complex phase = std::conj(v[k]) / ak;  // exp(-i arg(v_k))
  ComplexVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = phase * v[i];
  w[k] = Complex(ak, 0.0);
  return w;
}

ComplexMatrix deletion_projector(std::size_t n, std::size_t k) {
  if (n < 2) throw Error(Errc::invalid_argument, "deletion_projector requires n >= 2");
  if (k >= n) throw Error(Errc::index_out_of_range, "deletion index out of range");
  ComplexMatrix p(n, n - 1);
  std::size_t col = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) continue;
    p(j, col++) = 1.0;
  }
  return p;
}

ComplexVector project_down(const ComplexVector& y, std::size_t k) {
  if (k >= y.size()) throw Error(Errc::index_out_of_range, "project_down index out of range");
  if (std::abs(y[k]) > kZeroComponentRel * norm2(y))
    throw Error(Errc::nonzero_deleted_entry, "deleted entry is not zero within threshold");
  ComplexVector x;
  x.reserve(y.size() - 1);
  for (std::size_t i = 0; i < y.size(); ++i)
    if (i != k) x.push_back(y[i]);
  return x;
}

ComplexMatrix principal_submatrix(const ComplexMatrix& A, std::size_t k) {
  if (!A.is_square()) throw Error(Errc::non_square, "principal_submatrix requires a square matrix");
  const std::size_t n = A.rows();
  if (n < 2) throw Error(Errc::too_small, "no principal submatrix of a 1x1 matrix");
  if (k >= n) throw Error(Errc::index_out_of_range, "deletion index out of range");
  ComplexMatrix s(n - 1, n - 1);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    std::size_t c = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      s(r, c++) = A(i, j);
    }
    ++r;
  }
  return s;
}

Complex rayleigh(const ComplexMatrix& A, const ComplexVector& x) {
  if (!A.is_square() || A.cols() != x.size())
    throw Error(Errc::dimension_mismatch, "rayleigh shape mismatch");
  if (std::abs(norm2(x) - 1.0) > 1e-10) throw Error(Errc::not_unit, "rayleigh requires a unit vector");
  Complex s = 0.0;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Complex row = 0.0;
    for (std::size_t j = 0; j < A.cols(); ++j) row += A(i, j) * x[j];
    s += std::conj(x[i]) * row;
  }
  return s;
}

}  // namespace fov
