#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fov/errors.hpp"

namespace fov {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix. Sizes stay small here (n <= 64), so all
/// arithmetic is plain O(n^3) with no blocking.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const ComplexVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  double frobenius_norm() const;
  double max_abs() const;

  ComplexVector column(std::size_t j) const;
  void set_column(std::size_t j, const ComplexVector& v);
  ComplexMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
  friend ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x);
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

double norm2(const ComplexVector& v);
Complex dot(const ComplexVector& x, const ComplexVector& y);  // x^* y
ComplexVector normalized(const ComplexVector& v);
bool all_finite(const ComplexVector& v);
bool all_finite(const ComplexMatrix& m);

}  // namespace fov
