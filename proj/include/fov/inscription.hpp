#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fov/complex_matrix.hpp"
#include "fov/convexoid.hpp"
#include "fov/polygon.hpp"

namespace fov {

enum class ContactCase { vertex_i, vertex_j, full_edge, interior };
const char* contact_case_name(ContactCase c);
ContactCase contact_case_from_name(const std::string& name);

/// One contact of F(A_(k)) with a polygon side co(lambda_i, lambda_j).
///   interior : contact = alpha^2 lambda_i + beta^2 lambda_j, both weights in (0,1)
///   vertex_i / vertex_j : the endpoint itself lies in F(A_(k))
///   full_edge: the whole side lies in F(A_(k)); the midpoint is reported
struct EdgeContact {
  std::size_t eigen_i = 0, eigen_j = 0;  // indices into the eigenvalue list
  ContactCase case_tag = ContactCase::interior;
  Complex contact_point;
  std::optional<double> alpha_sq, beta_sq;  // interior case only
  ComplexVector witness;                    // unit x of length n-1, x^* A_(k) x = contact_point
  std::string note;
};

struct TangencyReport {
  std::size_t k = 0;  // deletion index
  SpectralPolygon polygon;
  std::vector<EdgeContact> contacts;  // one per edge, in edge order
  bool all_verified = false;
  std::string note;
};

/// Constructive contact for one side, from unit eigenvectors v, w of a normal
/// matrix (eigenvalues lambda_i, lambda_j). Case dispatch on the k-th
/// components; eigen_i/eigen_j are left for the caller to fill.
EdgeContact contact_point(const ComplexVector& v, const ComplexVector& w, Complex lambda_i,
                          Complex lambda_j, std::size_t k);

/// Full tangency report for a normal matrix and one deletion index.
TangencyReport inscribe(const ComplexMatrix& A, std::size_t k, double tol = 1e-8);

/// Builds A = F diag(eigenvalues) F^* and inscribes; asserts that every
/// interior contact is the midpoint of its side.
TangencyReport dft_inscribe(const std::vector<Complex>& eigenvalues, std::size_t k);

/// Re-checks a report: contacts on their edges, witnessed by their vectors,
/// inside F(A_(k)), and F(A_(k)) inside F(A) at grid angles. tol is relative,
/// scaled by (1 + ||A||_F).
bool verify_inscription(const ComplexMatrix& A, std::size_t k, const TangencyReport& report,
                        std::size_t n_angles = kDefaultAngles, double tol = 1e-8);

/// Both sign choices of (alpha, beta) must land on the same contact point.
bool sign_invariance_check(const ComplexVector& v, const ComplexVector& w, Complex lambda_i,
                           Complex lambda_j, std::size_t k);

/// Search path for matrices without a constructive decomposition: minimizes
/// the support deficit of F(A_sub) along each polygon side (the deficit is
/// convex along a segment, so a ternary search certifies the minimum).
struct EdgeSearchResult {
  std::size_t edge_index = 0;
  Complex point;
  double deficit = 0.0;
  bool found = false;
};
std::vector<EdgeSearchResult> edge_intersection_search(const ComplexMatrix& A_sub,
                                                       const SpectralPolygon& poly,
                                                       std::size_t n_angles, double tol);

}  // namespace fov
