#include "fov/complex_matrix.hpp"

#include <cmath>
#include <utility>

namespace fov {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::non_hermitian: return "NonHermitian";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::non_square: return "NonSquare";
    case Errc::zero_component: return "ZeroComponent";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::nonzero_deleted_entry: return "NonzeroDeletedEntry";
    case Errc::too_small: return "TooSmall";
    case Errc::not_unit: return "NotUnit";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_orthogonal: return "NotOrthogonal";
    case Errc::empty_input: return "EmptyInput";
    case Errc::degenerate: return "Degenerate";
    case Errc::not_normal: return "NotNormal";
    case Errc::bad_split: return "BadSplit";
    case Errc::midpoint_assertion_failed: return "MidpointAssertionFailed";
    case Errc::parse_error: return "ParseError";
    case Errc::shape_error: return "ShapeError";
    case Errc::io_error: return "IoError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw Error(Errc::dimension_mismatch, "entry count does not match matrix shape");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const ComplexVector& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
  if (j >= cols_) throw Error(Errc::index_out_of_range, "column index out of range");
  ComplexVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void ComplexMatrix::set_column(std::size_t j, const ComplexVector& v) {
  if (j >= cols_ || v.size() != rows_)
    throw Error(Errc::dimension_mismatch, "column assignment shape mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

ComplexMatrix ComplexMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows,
                                   std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_)
    throw Error(Errc::index_out_of_range, "block exceeds matrix bounds");
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(row0 + i, col0 + j);
  return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(Errc::dimension_mismatch, "matrix addition shape mismatch");
  ComplexMatrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
  return m;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(Errc::dimension_mismatch, "matrix subtraction shape mismatch");
  ComplexMatrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
  ComplexMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  }
  return m;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = s * a.data_[i];
  return m;
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x) {
  if (a.cols_ != x.size()) throw Error(Errc::dimension_mismatch, "matrix-vector shape mismatch");
  ComplexVector y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < a.cols_; ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

double norm2(const ComplexVector& v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Complex dot(const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != y.size()) throw Error(Errc::dimension_mismatch, "dot product length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

ComplexVector normalized(const ComplexVector& v) {
  const double n = norm2(v);
  if (n == 0.0) throw Error(Errc::zero_component, "cannot normalize the zero vector");
  ComplexVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / n;
  return w;
}

bool all_finite(const ComplexVector& v) {
  for (const Complex& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

bool all_finite(const ComplexMatrix& m) {
  for (const Complex& z : m.data())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

}  // namespace fov
