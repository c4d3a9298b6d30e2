#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fov/convexoid.hpp"
#include "fov/linalg.hpp"
#include "support/fixtures.hpp"

using namespace fov;
using namespace fov::testing;

namespace {

// multiset comparison after (Re, Im) sorting
void check_same_spectrum(std::vector<Complex> a, std::vector<Complex> b, double tol) {
  REQUIRE(a.size() == b.size());
  auto lex = [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  };
  std::sort(a.begin(), a.end(), lex);
  std::sort(b.begin(), b.end(), lex);
  for (std::size_t t = 0; t < a.size(); ++t) CHECK(std::abs(a[t] - b[t]) <= tol);
}

}  // namespace

TEST_CASE("is_convexoid_numeric: normal matrices are convexoid") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    std::vector<Complex> spectrum;
    const ComplexMatrix a = random_normal_matrix(3 + seed % 6, seed, &spectrum);
    const ConvexoidVerdict v = is_convexoid_numeric(a, spectrum);
    CHECK(v.is_convexoid);
    CHECK(v.is_normal);
    CHECK(v.max_support_gap <= 1e-8 * (1.0 + a.frobenius_norm()));
    CHECK(v.max_support_gap >= -1e-9 * (1.0 + a.frobenius_norm()));
  }
}

TEST_CASE("is_convexoid_numeric: nilpotent Jordan block is not convexoid") {
  const ConvexoidVerdict v = is_convexoid_numeric(jordan2(), {0.0, 0.0});
  CHECK_FALSE(v.is_convexoid);
  CHECK_FALSE(v.is_normal);
  CHECK(v.max_support_gap == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("is_convexoid_numeric: square hull absorbing a disk is convexoid") {
  const ComplexMatrix a = square_plus_jordan();
  const ConvexoidVerdict v = is_convexoid_numeric(a, square_plus_jordan_spectrum());
  CHECK(v.is_convexoid);
  CHECK_FALSE(v.is_normal);
}

TEST_CASE("is_convexoid_numeric: precondition checks") {
  CHECK_THROWS_AS(is_convexoid_numeric(jordan2(), {0.0, 0.0}, 50, 1e-8), Error);
  CHECK_THROWS_AS(is_convexoid_numeric(jordan2(), {0.0, 0.0}, 360, 0.0), Error);
}

TEST_CASE("verify_johnson_decomposition") {
  const ComplexMatrix a = square_plus_jordan();
  const ComplexMatrix id6 = ComplexMatrix::identity(6);
  CHECK(verify_johnson_decomposition(a, id6, 4, 1e-8));

  // at split 2 the leading block spans only the real axis and cannot
  // dominate the disk: the support comparison fails at theta = pi/2
  CHECK_FALSE(verify_johnson_decomposition(a, id6, 2, 1e-8));

  CHECK_FALSE(verify_johnson_decomposition(a, Complex(2.0, 0.0) * id6, 4, 1e-8));

  try {
    verify_johnson_decomposition(a, id6, 0, 1e-8);
    FAIL("expected BadSplit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_split);
  }
  CHECK_THROWS_AS(verify_johnson_decomposition(a, id6, 6, 1e-8), Error);

  // a genuinely rotated decomposition passes through a non-identity unitary
  const ComplexMatrix u = random_unitary(6, 17);
  CHECK(verify_johnson_decomposition(u * a * u.adjoint(), u, 4, 1e-8));
}

TEST_CASE("eigen_decompose_normal: diagonal input") {
  const ComplexMatrix d = ComplexMatrix::diagonal({Complex(2, 1), Complex(-1, 0), Complex(0, 3)});
  const NormalDecomposition nd = eigen_decompose_normal(d);
  check_same_spectrum(nd.eigenvalues, {Complex(2, 1), Complex(-1, 0), Complex(0, 3)}, 1e-12);
  const ComplexMatrix recon = nd.unitary * ComplexMatrix::diagonal(nd.eigenvalues) * nd.unitary.adjoint();
  CHECK((d - recon).frobenius_norm() <= 1e-12);
  // ascending (Re, Im) ordering
  for (std::size_t t = 1; t < nd.eigenvalues.size(); ++t)
    CHECK(nd.eigenvalues[t - 1].real() <= nd.eigenvalues[t].real());
}

TEST_CASE("eigen_decompose_normal: fixture spectrum recovered") {
  const NormalDecomposition nd = eigen_decompose_normal(fixture_matrix());
  check_same_spectrum(nd.eigenvalues, fixture_diagonal(), 1e-9);
  CHECK(unitarity_error(nd.unitary) <= 1e-9);
}

TEST_CASE("eigen_decompose_normal: DFT conjugation preserves the spectrum") {
  const std::vector<Complex> lambda = random_points(5, 321);
  const ComplexMatrix f = dft_matrix(5);
  const ComplexMatrix a = f * ComplexMatrix::diagonal(lambda) * f.adjoint();
  check_same_spectrum(eigen_decompose_normal(a).eigenvalues, lambda, 1e-9);
}

TEST_CASE("eigen_decompose_normal: repeated eigenvalues") {
  const ComplexMatrix u = random_unitary(4, 55);
  const std::vector<Complex> lambda = {Complex(1, 1), Complex(1, 1), Complex(-2, 0), Complex(0, 3)};
  const ComplexMatrix a = u * ComplexMatrix::diagonal(lambda) * u.adjoint();
  const NormalDecomposition nd = eigen_decompose_normal(a);
  check_same_spectrum(nd.eigenvalues, lambda, 1e-9);
  const ComplexMatrix recon = nd.unitary * ComplexMatrix::diagonal(nd.eigenvalues) * nd.unitary.adjoint();
  CHECK((a - recon).frobenius_norm() <= 1e-9 * (1.0 + a.frobenius_norm()));
}

TEST_CASE("eigen_decompose_normal: residual bound over random normal matrices") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexMatrix a = random_normal_matrix(2 + seed % 9, seed + 600);
    const NormalDecomposition nd = eigen_decompose_normal(a);
    const ComplexMatrix recon =
        nd.unitary * ComplexMatrix::diagonal(nd.eigenvalues) * nd.unitary.adjoint();
    CHECK((a - recon).frobenius_norm() <= 1e-9 * (1.0 + a.frobenius_norm()));
    CHECK(unitarity_error(nd.unitary) <= 1e-9);
  }
}

TEST_CASE("eigen_decompose_normal: spectrum is permutation-similarity invariant") {
  std::vector<Complex> spectrum;
  const ComplexMatrix a = random_normal_matrix(5, 888, &spectrum);
  ComplexMatrix perm(5, 5);
  const std::size_t cycle[5] = {2, 0, 4, 1, 3};
  for (std::size_t i = 0; i < 5; ++i) perm(cycle[i], i) = 1.0;
  const ComplexMatrix b = perm * a * perm.transpose();
  check_same_spectrum(eigen_decompose_normal(a).eigenvalues, eigen_decompose_normal(b).eigenvalues,
                      1e-9);
}

TEST_CASE("eigen_decompose_normal: rejects non-normal input") {
  try {
    eigen_decompose_normal(jordan2());
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_normal);
  }
}
