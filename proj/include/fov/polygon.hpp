#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fov/complex_matrix.hpp"

namespace fov {

struct Segment {
  Complex a, b;
  std::size_t vertex_a = 0, vertex_b = 0;  // indices into SpectralPolygon::vertices
};

/// Convex hull of a spectrum, counterclockwise, with strict vertices only.
/// Degenerate hulls are allowed: d = 1 (single point, no edges) and d = 2
/// (segment, kept as two direction-paired edges so per-edge reporting stays
/// uniform).
struct SpectralPolygon {
  std::vector<Complex> vertices;               // ccw, start = lowest angle from centroid
  std::vector<std::size_t> vertex_eigenindex;  // one matching index into source_eigenvalues
  std::vector<Complex> source_eigenvalues;

  std::size_t degree() const { return vertices.size(); }
  std::vector<Segment> edges() const;
};

/// Points within collapse_tol of each other are merged; near-collinear points
/// are not vertices. The two-argument form uses 1e-9 * (1 + max |point|).
SpectralPolygon convex_hull(const std::vector<Complex>& points, double collapse_tol);
SpectralPolygon convex_hull(const std::vector<Complex>& points);

std::vector<Complex> edge_midpoints(const SpectralPolygon& poly);

double distance_to_segment(Complex z, Complex a, Complex b);
bool point_on_segment(Complex z, const Segment& seg, double tol);

/// Distance from z to the polygon boundary (to the vertex when d = 1).
double distance_to_boundary(const SpectralPolygon& poly, Complex z);

/// Eigen-index pairs (i, j) for each edge, via vertex_eigenindex.
std::vector<std::pair<std::size_t, std::size_t>> adjacent_vertex_pairs(const SpectralPolygon& poly);

}  // namespace fov
