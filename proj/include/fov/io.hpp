#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fov/complex_matrix.hpp"
#include "fov/convexoid.hpp"
#include "fov/fov_engine.hpp"
#include "fov/inscription.hpp"
#include "fov/polygon.hpp"

namespace fov {

/// Matrix file: {"n": N, "entries": [[[re, im], ...], ...]} row-major.
/// Serialization is canonical (field order fixed, floats at 17 significant
/// digits) so identical matrices produce identical bytes.
std::string serialize_matrix(const ComplexMatrix& m);
ComplexMatrix parse_matrix(std::istream& in);
ComplexMatrix parse_matrix(const std::string& text);
ComplexMatrix parse_matrix_file(const std::string& path);
void write_matrix_file(const ComplexMatrix& m, const std::string& path);

/// FNV-1a digest of the canonical matrix serialization, "fnv1a64:<hex>".
std::string matrix_digest(const ComplexMatrix& m);

/// Everything one analysis run produces. The matrix itself is embedded so a
/// saved report can be re-verified standalone. All indices in the JSON form
/// are 1-based; in-memory indices are 0-based.
struct ReportData {
  ComplexMatrix matrix;
  std::string input_digest;
  bool matrix_is_normal = false;
  ConvexoidVerdict convexoid;
  std::vector<Complex> eigenvalues;
  SpectralPolygon polygon;
  FovBoundary field_boundary;
  std::vector<TangencyReport> tangency;
  std::size_t n_angles = kDefaultAngles;
  double tol = 1e-8;
};

std::string serialize_report(const ReportData& report);
ReportData parse_report(std::istream& in);
ReportData parse_report_file(const std::string& path);

std::string serialize_convexoid(const ConvexoidVerdict& verdict);
std::string serialize_polygon(const SpectralPolygon& polygon);
std::string serialize_boundary_json(const FovBoundary& sweep);
std::string serialize_boundary_csv(const FovBoundary& sweep);

/// SVG figure: spectral polygon, filled submatrix field boundary, eigenvalue
/// markers, contact markers. 800x800 canvas, autoscaled viewBox with a 5%
/// margin, byte-deterministic for identical inputs.
std::string render_svg(const SpectralPolygon& polygon, const FovBoundary& submatrix_boundary,
                       const std::vector<EdgeContact>& contacts);
void emit_svg(const SpectralPolygon& polygon, const FovBoundary& submatrix_boundary,
              const std::vector<EdgeContact>& contacts, const std::string& path);

/// Complex literals: "a+bi", "a-bi", "a", "bi", "i"; whitespace-insensitive.
Complex parse_complex(const std::string& text);
std::vector<Complex> parse_complex_list(const std::string& text);  // comma-separated

void write_text_file(const std::string& path, const std::string& content);

}  // namespace fov
