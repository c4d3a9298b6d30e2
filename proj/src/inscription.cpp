#include "fov/inscription.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fov/fov_engine.hpp"
#include "fov/linalg.hpp"

namespace fov {

namespace {

// Zeroes entry k (known to vanish analytically), renormalizes, projects down.
ComplexVector project_witness(ComplexVector u, std::size_t k) {
  u[k] = 0.0;
  return project_down(normalized(u), k);
}

// Unit eigenvector for the vertex eigenvalue at eigen index `rep`, chosen
// within its eigenspace to minimize |v_k|. With multiplicity >= 2 the k-th
// component can always be rotated away, which turns the contact into the
// stronger vertex case.
struct VertexVector {
  ComplexVector v;
  std::size_t multiplicity;
};

VertexVector eigenvector_for_vertex(const NormalDecomposition& nd, std::size_t rep, std::size_t k,
                                    double collapse_tol) {
  std::vector<std::size_t> cluster;
  for (std::size_t t = 0; t < nd.eigenvalues.size(); ++t)
    if (std::abs(nd.eigenvalues[t] - nd.eigenvalues[rep]) <= collapse_tol) cluster.push_back(t);

  if (cluster.size() == 1) return {nd.unitary.column(rep), 1};

  const std::size_t m = cluster.size();
  std::vector<Complex> row(m);
  for (std::size_t t = 0; t < m; ++t) row[t] = nd.unitary(k, cluster[t]);

  std::vector<Complex> coeff(m, Complex{});
  std::size_t t0 = 0;
  for (std::size_t t = 1; t < m; ++t)
    if (std::abs(row[t]) > std::abs(row[t0])) t0 = t;
  if (std::abs(row[t0]) == 0.0) {
    coeff[0] = 1.0;
  } else {
    std::size_t t1 = (t0 == 0) ? 1 : 0;
    for (std::size_t t = 0; t < m; ++t)
      if (t != t0 && std::abs(row[t]) < std::abs(row[t1])) t1 = t;
    // row . coeff = 0 by construction
    coeff[t0] = -row[t1];
    coeff[t1] = row[t0];
    const double nc = norm2(coeff);
    for (Complex& c : coeff) c /= nc;
  }

  ComplexVector v(nd.unitary.rows(), Complex{});
  for (std::size_t t = 0; t < m; ++t) {
    const ComplexVector col = nd.unitary.column(cluster[t]);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += coeff[t] * col[i];
  }
  return {v, m};
}

}  // namespace

const char* contact_case_name(ContactCase c) {
  switch (c) {
    case ContactCase::vertex_i: return "VERTEX_I";
    case ContactCase::vertex_j: return "VERTEX_J";
    case ContactCase::full_edge: return "FULL_EDGE";
    case ContactCase::interior: return "INTERIOR";
  }
  return "?";
}

ContactCase contact_case_from_name(const std::string& name) {
  if (name == "VERTEX_I") return ContactCase::vertex_i;
  if (name == "VERTEX_J") return ContactCase::vertex_j;
  if (name == "FULL_EDGE") return ContactCase::full_edge;
  if (name == "INTERIOR") return ContactCase::interior;
  throw Error(Errc::shape_error, "unknown contact case: " + name);
}

EdgeContact contact_point(const ComplexVector& v, const ComplexVector& w, Complex lambda_i,
                          Complex lambda_j, std::size_t k) {
  if (v.size() != w.size()) throw Error(Errc::dimension_mismatch, "eigenvector length mismatch");
  if (k >= v.size()) throw Error(Errc::index_out_of_range, "deletion index out of range");
  if (std::abs(norm2(v) - 1.0) > 1e-8 || std::abs(norm2(w) - 1.0) > 1e-8)
    throw Error(Errc::not_unit, "contact_point requires unit eigenvectors");
  if (std::abs(dot(v, w)) > 1e-8)
    throw Error(Errc::not_orthogonal, "contact_point requires orthogonal eigenvectors");

  const double threshold = kZeroComponentRel;  // vectors are unit
  const bool v_zero = std::abs(v[k]) <= threshold;
  const bool w_zero = std::abs(w[k]) <= threshold;

  EdgeContact c;
  if (v_zero && w_zero) {
    c.case_tag = ContactCase::full_edge;
    c.contact_point = 0.5 * (lambda_i + lambda_j);
    ComplexVector u(v.size());
    const double inv = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < v.size(); ++i) u[i] = inv * (v[i] + w[i]);
    c.witness = project_witness(std::move(u), k);
    return c;
  }
  if (v_zero) {
    c.case_tag = ContactCase::vertex_i;
    c.contact_point = lambda_i;
    c.witness = project_witness(v, k);
    return c;
  }
  if (w_zero) {
    c.case_tag = ContactCase::vertex_j;
    c.contact_point = lambda_j;
    c.witness = project_witness(w, k);
    return c;
  }

  const ComplexVector vn = phase_normalize(v, k);
  const ComplexVector wn = phase_normalize(w, k);
  const double vk = vn[k].real();
  const double wk = wn[k].real();
  const double denom = std::sqrt(vk * vk + wk * wk);
  const double alpha = -wk / denom;
  const double beta = vk / denom;

  c.case_tag = ContactCase::interior;
  c.alpha_sq = alpha * alpha;
  c.beta_sq = beta * beta;
  c.contact_point = (*c.alpha_sq) * lambda_i + (*c.beta_sq) * lambda_j;
  ComplexVector u(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) u[i] = alpha * vn[i] + beta * wn[i];
  c.witness = project_witness(std::move(u), k);
  return c;
}

TangencyReport inscribe(const ComplexMatrix& A, std::size_t k, double tol) {
  if (!A.is_square()) throw Error(Errc::non_square, "inscribe requires a square matrix");
  const std::size_t n = A.rows();
  if (n < 2) throw Error(Errc::too_small, "inscribe requires n >= 2");
  if (k >= n) throw Error(Errc::index_out_of_range, "deletion index out of range");
  if (!is_normal(A, tol)) throw Error(Errc::not_normal, "inscribe requires a normal matrix");

  const NormalDecomposition nd = eigen_decompose_normal(A, tol);
  double max_abs = 0.0;
  for (const Complex& z : nd.eigenvalues) max_abs = std::max(max_abs, std::abs(z));
  const double collapse_tol = 1e-9 * (1.0 + max_abs);

  TangencyReport rep;
  rep.k = k;
  rep.polygon = convex_hull(nd.eigenvalues, collapse_tol);

  if (rep.polygon.degree() == 1) {
    rep.note = "single-point spectrum; polygon has no sides";
    rep.all_verified = verify_inscription(A, k, rep, kDefaultAngles, tol);
    return rep;
  }
  if (rep.polygon.degree() == 2)
    rep.note = "collinear spectrum; the two direction-paired edges coincide geometrically";

  for (const auto& [i, j] : adjacent_vertex_pairs(rep.polygon)) {
    const VertexVector vi = eigenvector_for_vertex(nd, i, k, collapse_tol);
    const VertexVector vj = eigenvector_for_vertex(nd, j, k, collapse_tol);
    EdgeContact c = contact_point(vi.v, vj.v, nd.eigenvalues[i], nd.eigenvalues[j], k);
    c.eigen_i = i;
    c.eigen_j = j;
    if (vi.multiplicity > 1 || vj.multiplicity > 1)
      c.note = "eigenvector chosen within a repeated eigenspace to minimize the deleted component";
    rep.contacts.push_back(std::move(c));
  }

  rep.all_verified = verify_inscription(A, k, rep, kDefaultAngles, tol);
  return rep;
}

TangencyReport dft_inscribe(const std::vector<Complex>& eigenvalues, std::size_t k) {
  const std::size_t n = eigenvalues.size();
  if (n < 2) throw Error(Errc::too_small, "dft_inscribe requires n >= 2");
  if (k >= n) throw Error(Errc::index_out_of_range, "deletion index out of range");

  const ComplexMatrix f = dft_matrix(n);
  const ComplexMatrix a = f * ComplexMatrix::diagonal(eigenvalues) * f.adjoint();
  TangencyReport rep = inscribe(a, k);

  if (rep.polygon.degree() >= 2) {
    double max_abs = 0.0;
    for (const Complex& z : eigenvalues) max_abs = std::max(max_abs, std::abs(z));
    const std::vector<Complex> mids = edge_midpoints(rep.polygon);
    for (std::size_t e = 0; e < rep.contacts.size(); ++e) {
      if (rep.contacts[e].case_tag != ContactCase::interior) continue;
      if (std::abs(rep.contacts[e].contact_point - mids[e]) > 1e-9 * (1.0 + max_abs))
        throw Error(Errc::midpoint_assertion_failed,
                    "interior contact is not the side midpoint; this indicates a computation bug");
    }
  }
  return rep;
}

bool verify_inscription(const ComplexMatrix& A, std::size_t k, const TangencyReport& report,
                        std::size_t n_angles, double tol) {
  if (!A.is_square() || A.rows() < 2) return false;
  if (k >= A.rows() || report.k != k) return false;

  const double tol_abs = tol * (1.0 + A.frobenius_norm());
  try {
    const ComplexMatrix sub = principal_submatrix(A, k);
    const std::vector<double> sweep_full = support_values(A, n_angles);
    const std::vector<double> sweep_sub = support_values(sub, n_angles);
    for (std::size_t j = 0; j < n_angles; ++j)
      if (sweep_sub[j] > sweep_full[j] + tol_abs) return false;

    const std::vector<Segment> edges = report.polygon.edges();
    if (report.contacts.size() != edges.size()) return false;
    const auto pairs = report.polygon.degree() >= 2
                           ? adjacent_vertex_pairs(report.polygon)
                           : std::vector<std::pair<std::size_t, std::size_t>>{};
    auto in_sub_field = [&](Complex z) {
      for (std::size_t j = 0; j < n_angles; ++j) {
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_angles);
        if ((std::polar(1.0, -theta) * z).real() > sweep_sub[j] + tol_abs) return false;
      }
      return true;
    };
    for (std::size_t e = 0; e < report.contacts.size(); ++e) {
      const EdgeContact& c = report.contacts[e];
      if (c.eigen_i != pairs[e].first || c.eigen_j != pairs[e].second) return false;
      if (!point_on_segment(c.contact_point, edges[e], tol_abs)) return false;
      if (std::abs(rayleigh(sub, c.witness) - c.contact_point) > tol_abs) return false;
      if (!in_sub_field(c.contact_point)) return false;
      if (c.case_tag == ContactCase::interior) {
        if (!c.alpha_sq || !c.beta_sq) return false;
        if (*c.alpha_sq <= 0.0 || *c.alpha_sq >= 1.0 || *c.beta_sq <= 0.0 || *c.beta_sq >= 1.0)
          return false;
        if (std::abs(*c.alpha_sq + *c.beta_sq - 1.0) > 1e-12) return false;
      }
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

bool sign_invariance_check(const ComplexVector& v, const ComplexVector& w, Complex lambda_i,
                           Complex lambda_j, std::size_t k) {
  const ComplexVector vn = phase_normalize(v, k);
  const ComplexVector wn = phase_normalize(w, k);
  const double vk = vn[k].real();
  const double wk = wn[k].real();
  const double denom = std::sqrt(vk * vk + wk * wk);

  Complex contact[2];
  int branch = 0;
  for (const double sign : {+1.0, -1.0}) {
    const double alpha = sign * (-wk) / denom;
    const double beta = sign * vk / denom;
    contact[branch++] = (alpha * alpha) * lambda_i + (beta * beta) * lambda_j;
  }
  return std::abs(contact[0] - contact[1]) <= 1e-12;
}

std::vector<EdgeSearchResult> edge_intersection_search(const ComplexMatrix& A_sub,
                                                       const SpectralPolygon& poly,
                                                       std::size_t n_angles, double tol) {
  if (n_angles < 3) throw Error(Errc::invalid_argument, "edge search requires n_angles >= 3");
  const FovBoundary sweep = boundary(A_sub, n_angles);

  // Support deficit of a point against the sweep; membership <=> deficit <= tol.
  auto deficit = [&sweep](Complex z) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const SupportSample& s : sweep.samples)
      worst = std::max(worst, (std::polar(1.0, -s.theta) * z).real() - s.support);
    return worst;
  };

  std::vector<EdgeSearchResult> out;
  const std::vector<Segment> edges = poly.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Complex a = edges[e].a;
    const Complex d = edges[e].b - edges[e].a;
    auto g = [&](double t) { return deficit(a + t * d); };

    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      if (g(m1) < g(m2))
        hi = m2;
      else
        lo = m1;
    }
    const double t_best = 0.5 * (lo + hi);
    double best = g(t_best);
    double arg = t_best;
    for (const double t : {0.0, 1.0}) {  // convex minimum may sit at an endpoint
      const double val = g(t);
      if (val < best) {
        best = val;
        arg = t;
      }
    }
    out.push_back({e, a + arg * d, best, best <= tol});
  }
  return out;
}

}  // namespace fov
