#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fov/fov_engine.hpp"
#include "fov/linalg.hpp"
#include "fov/polygon.hpp"
#include "support/fixtures.hpp"

using namespace fov;
using namespace fov::testing;

namespace {

// Largest violation of the convexity cross-product test along an angle-ordered
// boundary (negative values mean a right turn).
double min_cross_product(const FovBoundary& b) {
  double worst = 0.0;
  const std::size_t m = b.samples.size();
  for (std::size_t t = 0; t < m; ++t) {
    const Complex p0 = b.samples[t].boundary_point;
    const Complex p1 = b.samples[(t + 1) % m].boundary_point;
    const Complex p2 = b.samples[(t + 2) % m].boundary_point;
    const Complex u = p1 - p0, v = p2 - p1;
    worst = std::min(worst, u.real() * v.imag() - u.imag() * v.real());
  }
  return worst;
}

}  // namespace

TEST_CASE("support: segment, identity, and nilpotent Jordan block") {
  const ComplexMatrix seg = ComplexMatrix::diagonal({0.0, 1.0});
  const SupportSample s0 = support(seg, 0.0);
  CHECK(s0.support == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(s0.boundary_point - Complex(1, 0)) <= 1e-10);

  const ComplexMatrix id = ComplexMatrix::identity(3);
  for (const double theta : {0.0, 0.4, 1.7, 3.0, 5.5}) {
    const SupportSample s = support(id, theta);
    CHECK(s.support == doctest::Approx(std::cos(theta)).epsilon(1e-12));
    CHECK(std::abs(s.boundary_point - Complex(1, 0)) <= 1e-10);
  }

  // field of the 2x2 nilpotent Jordan block is the closed disk of radius 1/2
  const ComplexMatrix j = jordan2();
  for (const double theta : {0.0, 0.3, 1.0, 2.2, 4.4, 6.0})
    CHECK(support(j, theta).support == doctest::Approx(0.5).epsilon(1e-12));
  const std::vector<Complex> samples = random_field_samples(j, 20000, 2024);
  double max_abs = 0.0;
  for (const Complex& z : samples) max_abs = std::max(max_abs, std::abs(z));
  CHECK(max_abs <= 0.5 + 1e-6);  // sampling oracle for the disk
  CHECK(max_abs > 0.45);         // and the boundary is nearly reached
}

TEST_CASE("support invariant: the witness realizes the support value") {
  const ComplexMatrix a = random_known_spectrum(5, 31);
  for (const double theta : {0.1, 2.0, 4.0}) {
    const SupportSample s = support(a, theta);
    CHECK(std::abs(norm2(s.witness) - 1.0) <= 1e-10);
    CHECK(std::abs((std::polar(1.0, -theta) * s.boundary_point).real() - s.support) <= 1e-9);
  }
}

TEST_CASE("boundary: normal matrix boundary lies on the spectral polygon") {
  const std::vector<Complex> eigs = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
  const FovBoundary b = boundary(ComplexMatrix::diagonal(eigs), 360);
  const SpectralPolygon square = convex_hull(eigs);
  for (const SupportSample& s : b.samples)
    CHECK(distance_to_boundary(square, s.boundary_point) <= 1e-8);
  for (std::size_t t = 1; t < b.samples.size(); ++t)
    CHECK(b.samples[t].theta > b.samples[t - 1].theta);
}

TEST_CASE("boundary: Hermitian matrix gives a real interval") {
  const ComplexMatrix h = random_hermitian(5, 7);
  const auto eig = hermitian_eigen(h);
  const FovBoundary b = boundary(h, 180);
  double lo = 1e300, hi = -1e300;
  for (const SupportSample& s : b.samples) {
    CHECK(std::abs(s.boundary_point.imag()) <= 1e-10);
    lo = std::min(lo, s.boundary_point.real());
    hi = std::max(hi, s.boundary_point.real());
  }
  CHECK(lo == doctest::Approx(eig.eigenvalues.front()).epsilon(1e-9));
  CHECK(hi == doctest::Approx(eig.eigenvalues.back()).epsilon(1e-9));
}

TEST_CASE("boundary: Jordan block traces the circle of radius 1/2") {
  const FovBoundary b = boundary(jordan2(), 360);
  for (const SupportSample& s : b.samples)
    CHECK(std::abs(std::abs(s.boundary_point) - 0.5) <= 1e-8);
  CHECK_THROWS_AS(boundary(jordan2(), 2), Error);
}

TEST_CASE("contains: outer support test") {
  const ComplexMatrix seg = ComplexMatrix::diagonal({0.0, 1.0});
  CHECK(contains(seg, Complex(0.5, 0.0), 360, 1e-9));
  CHECK_FALSE(contains(seg, Complex(2.0, 0.0), 360, 1e-9));

  // spectrum sits inside the field
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    std::vector<Complex> spectrum;
    const ComplexMatrix a = random_known_spectrum(4 + seed % 4, seed, &spectrum);
    const FovBoundary sweep = boundary(a, 360);
    for (const Complex& z : spectrum) CHECK(contains(sweep, z, 1e-8));
  }
}

TEST_CASE("random_field_samples: reproducible and inside the field") {
  const ComplexMatrix id = ComplexMatrix::identity(4);
  for (const Complex& z : random_field_samples(id, 100, 9))
    CHECK(std::abs(z - Complex(1, 0)) <= 1e-12);

  const ComplexMatrix seg = ComplexMatrix::diagonal({0.0, 1.0});
  for (const Complex& z : random_field_samples(seg, 200, 10)) {
    CHECK(z.imag() == 0.0);
    CHECK(z.real() >= -1e-12);
    CHECK(z.real() <= 1.0 + 1e-12);
  }

  const std::vector<Complex> a = random_field_samples(seg, 50, 123);
  const std::vector<Complex> b = random_field_samples(seg, 50, 123);
  CHECK(a == b);
  CHECK(a != random_field_samples(seg, 50, 124));

  const ComplexMatrix g = random_known_spectrum(5, 77);
  const FovBoundary sweep = boundary(g, 360);
  for (const Complex& z : random_field_samples(g, 500, 5)) CHECK(contains(sweep, z, 1e-8));
}

TEST_CASE("support_gap_to_hull") {
  std::vector<Complex> spectrum;
  const ComplexMatrix normal = random_normal_matrix(6, 42, &spectrum);
  CHECK(support_gap_to_hull(normal, spectrum, 360) <= 1e-9);
  CHECK(support_gap_to_hull(normal, spectrum, 360) >= -1e-9);

  // disk of radius 1/2 against the one-point hull {0}
  const double jordan_gap = support_gap_to_hull(jordan2(), {0.0, 0.0}, 360);
  CHECK(jordan_gap == doctest::Approx(0.5).epsilon(1e-8));

  CHECK(support_gap_to_hull(square_plus_jordan(), square_plus_jordan_spectrum(), 360) <= 1e-9);

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    std::vector<Complex> sp;
    const ComplexMatrix a = random_known_spectrum(5, 400 + seed, &sp);
    CHECK(support_gap_to_hull(a, sp, 180) >= -1e-9 * (1.0 + a.frobenius_norm()));
  }
}

TEST_CASE("direct sum support equals the max of the summand supports") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const ComplexMatrix a = random_known_spectrum(3 + seed % 3, seed * 3 + 1);
    const ComplexMatrix b = random_normal_matrix(2 + seed % 4, seed * 7 + 2);
    const ComplexMatrix ab = direct_sum(a, b);
    for (std::size_t j = 0; j < 90; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / 90.0;
      const double lhs = support(ab, theta).support;
      const double rhs = std::max(support(a, theta).support, support(b, theta).support);
      CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + ab.frobenius_norm()));
    }
  }
}

TEST_CASE("submatrix support never exceeds the full support") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const ComplexMatrix a = (seed % 2) ? random_known_spectrum(5, seed)
                                       : random_normal_matrix(5, seed);
    const double tol = 1e-9 * (1.0 + a.frobenius_norm());
    for (std::size_t k = 0; k < a.rows(); ++k) {
      const ComplexMatrix sub = principal_submatrix(a, k);
      for (std::size_t j = 0; j < 90; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / 90.0;
        CHECK(support(sub, theta).support <= support(a, theta).support + tol);
      }
    }
  }
}

TEST_CASE("boundary convexity: angle-ordered points only turn left") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const ComplexMatrix a = (seed % 2) ? random_known_spectrum(6, seed + 50)
                                       : random_normal_matrix(6, seed + 50);
    CHECK(min_cross_product(boundary(a, 360)) >= -1e-8 * (1.0 + a.frobenius_norm()));
  }
  CHECK(min_cross_product(boundary(jordan2(), 360)) >= -1e-8 * (1.0 + jordan2().frobenius_norm()));
}
