#include "fov/fov_engine.hpp"

#include <cmath>
#include <numbers>

#include "fov/linalg.hpp"
#include "fov/rng.hpp"

namespace fov {

double SplitMix64::gaussian() {
  const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ComplexVector random_unit_vector(std::size_t n, SplitMix64& rng) {
  ComplexVector v(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.complex_gaussian();
    if (norm2(v) > 0.0) break;
  }
  return normalized(v);
}

namespace {

// Continuation along an angle sweep: each solve warm-starts from the previous
// eigenbasis, which is nearly diagonalizing for the next grid angle.
struct AngleSweepSolver {
  ComplexMatrix basis;
  bool warm = false;

  EigenDecomposition solve(const ComplexMatrix& h) {
    EigenDecomposition eig = warm ? hermitian_eigen_warm(h, basis) : hermitian_eigen(h);
    basis = eig.eigenvectors;
    warm = true;
    return eig;
  }
};

}  // namespace

ComplexMatrix rotated_hermitian_part(const ComplexMatrix& A, double theta) {
  if (!A.is_square()) throw Error(Errc::non_square, "rotated_hermitian_part requires a square matrix");
  const std::size_t n = A.rows();
  const Complex phase = std::polar(1.0, -theta);
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (phase * A(i, j) + std::conj(phase * A(j, i)));
    h(i, i) = Complex(h(i, i).real(), 0.0);
  }
  return h;
}

SupportSample support(const ComplexMatrix& A, double theta) {
  const EigenDecomposition eig = hermitian_eigen(rotated_hermitian_part(A, theta));
  const std::size_t top = A.rows() - 1;
  SupportSample s;
  s.theta = theta;
  s.support = eig.eigenvalues[top];
  s.witness = eig.eigenvectors.column(top);
  s.boundary_point = rayleigh(A, s.witness);
  return s;
}

FovBoundary boundary(const ComplexMatrix& A, std::size_t n_angles) {
  if (!A.is_square()) throw Error(Errc::non_square, "boundary requires a square matrix");
  if (n_angles < 3) throw Error(Errc::invalid_argument, "boundary requires n_angles >= 3");
  FovBoundary b;
  b.source_dim = A.rows();
  b.samples.reserve(n_angles);
  AngleSweepSolver solver;
  const std::size_t top = A.rows() - 1;
  for (std::size_t j = 0; j < n_angles; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_angles);
    const EigenDecomposition eig = solver.solve(rotated_hermitian_part(A, theta));
    SupportSample s;
    s.theta = theta;
    s.support = eig.eigenvalues[top];
    s.witness = eig.eigenvectors.column(top);
    s.boundary_point = rayleigh(A, s.witness);
    b.samples.push_back(std::move(s));
  }
  return b;
}

std::vector<double> support_values(const ComplexMatrix& A, std::size_t n_angles) {
  if (!A.is_square()) throw Error(Errc::non_square, "support_values requires a square matrix");
  if (n_angles == 0) throw Error(Errc::invalid_argument, "support_values requires n_angles >= 1");
  std::vector<double> out(n_angles);
  const std::size_t top = A.rows() - 1;
  AngleSweepSolver solver;
  for (std::size_t j = 0; j < n_angles; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_angles);
    out[j] = solver.solve(rotated_hermitian_part(A, theta)).eigenvalues[top];
  }
  return out;
}

bool contains(const FovBoundary& sweep, Complex z, double tol) {
  for (const SupportSample& s : sweep.samples) {
    const Complex rotated = std::polar(1.0, -s.theta) * z;
    if (rotated.real() > s.support + tol) return false;
  }
  return true;
}

bool contains(const ComplexMatrix& A, Complex z, std::size_t n_angles, double tol) {
  if (!A.is_square()) throw Error(Errc::non_square, "contains requires a square matrix");
  if (n_angles == 0) throw Error(Errc::invalid_argument, "contains requires n_angles >= 1");
  for (std::size_t j = 0; j < n_angles; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_angles);
    const Complex rotated = std::polar(1.0, -theta) * z;
    if (rotated.real() > support(A, theta).support + tol) return false;
  }
  return true;
}

std::vector<Complex> random_field_samples(const ComplexMatrix& A, std::size_t count,
                                          std::uint64_t seed) {
  if (!A.is_square()) throw Error(Errc::non_square, "random_field_samples requires a square matrix");
  SplitMix64 rng(seed);
  std::vector<Complex> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) out.push_back(rayleigh(A, random_unit_vector(A.rows(), rng)));
  return out;
}

SupportGap support_gap_details(const ComplexMatrix& A, const std::vector<Complex>& eigenvalues,
                               std::size_t n_angles) {
  if (!A.is_square()) throw Error(Errc::non_square, "support_gap requires a square matrix");
  if (eigenvalues.empty()) throw Error(Errc::empty_input, "support_gap requires eigenvalues");
  if (n_angles == 0) throw Error(Errc::invalid_argument, "support_gap requires n_angles >= 1");
  SupportGap g;
  bool first = true;
  const std::vector<double> sweep = support_values(A, n_angles);
  for (std::size_t j = 0; j < n_angles; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_angles);
    const Complex phase = std::polar(1.0, -theta);
    double hull_support = (phase * eigenvalues[0]).real();
    for (std::size_t t = 1; t < eigenvalues.size(); ++t)
      hull_support = std::max(hull_support, (phase * eigenvalues[t]).real());
    const double gap = sweep[j] - hull_support;
    if (first || gap > g.max_gap) {
      g.max_gap = gap;
      g.worst_theta = theta;
      first = false;
    }
  }
  return g;
}

double support_gap_to_hull(const ComplexMatrix& A, const std::vector<Complex>& eigenvalues,
                           std::size_t n_angles) {
  return support_gap_details(A, eigenvalues, n_angles).max_gap;
}

}  // namespace fov
