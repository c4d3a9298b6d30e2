#include "fov/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace fov {

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

struct HullPoint {
  Complex p;
  std::size_t index;  // into the input point list
};

}  // namespace

std::vector<Segment> SpectralPolygon::edges() const {
  const std::size_t d = vertices.size();
  std::vector<Segment> out;
  if (d < 2) return out;
  if (d == 2) {
    out.push_back({vertices[0], vertices[1], 0, 1});
    out.push_back({vertices[1], vertices[0], 1, 0});
    return out;
  }
  out.reserve(d);
  for (std::size_t t = 0; t < d; ++t) {
    const std::size_t u = (t + 1) % d;
    out.push_back({vertices[t], vertices[u], t, u});
  }
  return out;
}

SpectralPolygon convex_hull(const std::vector<Complex>& points, double collapse_tol) {
  if (points.empty()) throw Error(Errc::empty_input, "convex_hull requires at least one point");
  if (collapse_tol < 0.0) throw Error(Errc::invalid_argument, "collapse tolerance must be >= 0");

  double max_abs = 0.0;
  for (const Complex& p : points) max_abs = std::max(max_abs, std::abs(p));
  const double strict_tol = 1e-9 * (1.0 + max_abs);

  // Lex order (re, im, original index) makes the representative of each
  // duplicate cluster deterministic.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].real() != points[b].real()) return points[a].real() < points[b].real();
    if (points[a].imag() != points[b].imag()) return points[a].imag() < points[b].imag();
    return a < b;
  });
  std::vector<HullPoint> reps;
  for (std::size_t t : order) {
    bool merged = false;
    for (const HullPoint& r : reps) {
      if (std::abs(points[t] - r.p) <= collapse_tol) {
        merged = true;
        break;
      }
    }
    if (!merged) reps.push_back({points[t], t});
  }

  SpectralPolygon poly;
  poly.source_eigenvalues = points;

  if (reps.size() == 1) {
    poly.vertices = {reps[0].p};
    poly.vertex_eigenindex = {reps[0].index};
    return poly;
  }

  // Andrew's monotone chain with a strictness tolerance: a middle point
  // within strict_tol of the chord is not a vertex.
  auto keeps_turning = [&](const HullPoint& o, const HullPoint& m, const HullPoint& p) {
    return cross(o.p, m.p, p.p) > strict_tol * std::abs(p.p - o.p);
  };
  std::vector<HullPoint> lo, hi;
  for (const HullPoint& r : reps) {
    while (lo.size() >= 2 && !keeps_turning(lo[lo.size() - 2], lo.back(), r)) lo.pop_back();
    lo.push_back(r);
  }
  for (auto it = reps.rbegin(); it != reps.rend(); ++it) {
    while (hi.size() >= 2 && !keeps_turning(hi[hi.size() - 2], hi.back(), *it)) hi.pop_back();
    hi.push_back(*it);
  }
  std::vector<HullPoint> hull(lo.begin(), lo.end() - 1);
  hull.insert(hull.end(), hi.begin(), hi.end() - 1);

  // Deterministic start: lowest angle from the centroid, range (-pi, pi].
  Complex centroid = 0.0;
  for (const HullPoint& h : hull) centroid += h.p;
  centroid /= static_cast<double>(hull.size());
  std::size_t start = 0;
  double best = 0.0;
  for (std::size_t t = 0; t < hull.size(); ++t) {
    const Complex d = hull[t].p - centroid;
    double ang = std::atan2(d.imag(), d.real());
    if (ang <= -std::numbers::pi) ang += 2.0 * std::numbers::pi;
    if (t == 0 || ang < best) {
      best = ang;
      start = t;
    }
  }
  std::rotate(hull.begin(), hull.begin() + static_cast<std::ptrdiff_t>(start), hull.end());

  poly.vertices.reserve(hull.size());
  poly.vertex_eigenindex.reserve(hull.size());
  for (const HullPoint& h : hull) {
    poly.vertices.push_back(h.p);
    poly.vertex_eigenindex.push_back(h.index);
  }
  return poly;
}

SpectralPolygon convex_hull(const std::vector<Complex>& points) {
  double max_abs = 0.0;
  for (const Complex& p : points) max_abs = std::max(max_abs, std::abs(p));
  return convex_hull(points, 1e-9 * (1.0 + max_abs));
}

std::vector<Complex> edge_midpoints(const SpectralPolygon& poly) {
  if (poly.degree() < 2) throw Error(Errc::degenerate, "single-point polygon has no edges");
  std::vector<Complex> mids;
  for (const Segment& e : poly.edges()) mids.push_back(0.5 * (e.a + e.b));
  return mids;
}

double distance_to_segment(Complex z, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z.real() - a.real()) * ab.real() + (z.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

bool point_on_segment(Complex z, const Segment& seg, double tol) {
  if (tol < 0.0) throw Error(Errc::invalid_argument, "tolerance must be >= 0");
  return distance_to_segment(z, seg.a, seg.b) <= tol;
}

double distance_to_boundary(const SpectralPolygon& poly, Complex z) {
  if (poly.degree() == 0) throw Error(Errc::empty_input, "empty polygon");
  if (poly.degree() == 1) return std::abs(z - poly.vertices[0]);
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& e : poly.edges()) best = std::min(best, distance_to_segment(z, e.a, e.b));
  return best;
}

std::vector<std::pair<std::size_t, std::size_t>> adjacent_vertex_pairs(const SpectralPolygon& poly) {
  if (poly.degree() < 2) throw Error(Errc::degenerate, "single-point polygon has no adjacent vertices");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const Segment& e : poly.edges())
    pairs.emplace_back(poly.vertex_eigenindex[e.vertex_a], poly.vertex_eigenindex[e.vertex_b]);
  return pairs;
}

}  // namespace fov
