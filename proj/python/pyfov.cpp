#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fov/convexoid.hpp"
#include "fov/fov_engine.hpp"
#include "fov/inscription.hpp"
#include "fov/io.hpp"
#include "fov/linalg.hpp"
#include "fov/polygon.hpp"

namespace py = pybind11;

namespace {

using fov::Complex;
using fov::ComplexMatrix;
using fov::ComplexVector;

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix matrix_from_numpy(const ComplexArray& arr) {
  if (arr.ndim() != 2) throw fov::Error(fov::Errc::shape_error, "expected a 2-d array");
  const auto rows = static_cast<std::size_t>(arr.shape(0));
  const auto cols = static_cast<std::size_t>(arr.shape(1));
  ComplexMatrix m(rows, cols);
  const auto view = arr.unchecked<2>();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j));
  if (!fov::all_finite(m)) throw fov::Error(fov::Errc::shape_error, "matrix entries must be finite");
  return m;
}

py::array_t<Complex> matrix_to_numpy(const ComplexMatrix& m) {
  py::array_t<Complex> arr({m.rows(), m.cols()});
  auto view = arr.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = m(i, j);
  return arr;
}

ComplexVector vector_from_numpy(const ComplexArray& arr) {
  if (arr.ndim() != 1) throw fov::Error(fov::Errc::shape_error, "expected a 1-d array");
  const auto n = static_cast<std::size_t>(arr.shape(0));
  ComplexVector v(n);
  const auto view = arr.unchecked<1>();
  for (std::size_t i = 0; i < n; ++i) v[i] = view(static_cast<py::ssize_t>(i));
  return v;
}

py::array_t<Complex> vector_to_numpy(const ComplexVector& v) {
  py::array_t<Complex> arr(static_cast<py::ssize_t>(v.size()));
  auto view = arr.mutable_unchecked<1>();
  for (std::size_t i = 0; i < v.size(); ++i) view(static_cast<py::ssize_t>(i)) = v[i];
  return arr;
}

}  // namespace

PYBIND11_MODULE(pyfov, m) {
  m.doc() = "Fields of values, spectral polygons, convexoid tests, and submatrix tangency.";

  py::register_exception<fov::Error>(m, "FovError");

  py::class_<fov::SupportSample>(m, "SupportSample")
      .def_readonly("theta", &fov::SupportSample::theta)
      .def_readonly("support", &fov::SupportSample::support)
      .def_readonly("boundary_point", &fov::SupportSample::boundary_point)
      .def_property_readonly("witness",
                             [](const fov::SupportSample& s) { return vector_to_numpy(s.witness); })
      .def("__repr__", [](const fov::SupportSample& s) {
        return "SupportSample(theta=" + std::to_string(s.theta) +
               ", support=" + std::to_string(s.support) + ")";
      });

  py::class_<fov::FovBoundary>(m, "FovBoundary")
      .def_readonly("samples", &fov::FovBoundary::samples)
      .def_readonly("source_dim", &fov::FovBoundary::source_dim);

  py::class_<fov::SpectralPolygon>(m, "SpectralPolygon")
      .def_readonly("vertices", &fov::SpectralPolygon::vertices)
      .def_readonly("vertex_eigenindex", &fov::SpectralPolygon::vertex_eigenindex)
      .def_readonly("source_eigenvalues", &fov::SpectralPolygon::source_eigenvalues)
      .def_property_readonly("degree", &fov::SpectralPolygon::degree)
      .def("__repr__", [](const fov::SpectralPolygon& p) {
        return "SpectralPolygon(degree=" + std::to_string(p.degree()) + ")";
      });

  py::class_<fov::ConvexoidVerdict>(m, "ConvexoidVerdict")
      .def_readonly("is_convexoid", &fov::ConvexoidVerdict::is_convexoid)
      .def_readonly("max_support_gap", &fov::ConvexoidVerdict::max_support_gap)
      .def_readonly("n_angles", &fov::ConvexoidVerdict::n_angles)
      .def_readonly("worst_angle", &fov::ConvexoidVerdict::worst_angle)
      .def_readonly("is_normal", &fov::ConvexoidVerdict::is_normal)
      .def_readonly("tol", &fov::ConvexoidVerdict::tol)
      .def("__repr__", [](const fov::ConvexoidVerdict& v) {
        return std::string("ConvexoidVerdict(is_convexoid=") + (v.is_convexoid ? "True" : "False") +
               ", max_support_gap=" + std::to_string(v.max_support_gap) + ")";
      });

  py::class_<fov::EdgeContact>(m, "EdgeContact")
      .def_readonly("eigen_i", &fov::EdgeContact::eigen_i)
      .def_readonly("eigen_j", &fov::EdgeContact::eigen_j)
      .def_property_readonly(
          "case_tag", [](const fov::EdgeContact& c) { return fov::contact_case_name(c.case_tag); })
      .def_readonly("contact_point", &fov::EdgeContact::contact_point)
      .def_readonly("alpha_sq", &fov::EdgeContact::alpha_sq)
      .def_readonly("beta_sq", &fov::EdgeContact::beta_sq)
      .def_property_readonly("witness",
                             [](const fov::EdgeContact& c) { return vector_to_numpy(c.witness); })
      .def_readonly("note", &fov::EdgeContact::note)
      .def("__repr__", [](const fov::EdgeContact& c) {
        return std::string("EdgeContact(case=") + fov::contact_case_name(c.case_tag) + ")";
      });

  py::class_<fov::TangencyReport>(m, "TangencyReport")
      .def_readonly("k", &fov::TangencyReport::k)
      .def_readonly("polygon", &fov::TangencyReport::polygon)
      .def_readonly("contacts", &fov::TangencyReport::contacts)
      .def_readonly("all_verified", &fov::TangencyReport::all_verified)
      .def_readonly("note", &fov::TangencyReport::note);

  m.def(
      "hermitian_eigen",
      [](const ComplexArray& h) {
        const fov::EigenDecomposition eig = fov::hermitian_eigen(matrix_from_numpy(h));
        return py::make_tuple(py::array_t<double>(static_cast<py::ssize_t>(eig.eigenvalues.size()),
                                                  eig.eigenvalues.data()),
                              matrix_to_numpy(eig.eigenvectors));
      },
      py::arg("H"), "Eigenvalues (ascending) and unit eigenvector columns of a Hermitian matrix.");

  m.def(
      "is_unitary",
      [](const ComplexArray& u, double tol) { return fov::is_unitary(matrix_from_numpy(u), tol); },
      py::arg("U"), py::arg("tol") = 1e-10);
  m.def(
      "is_normal",
      [](const ComplexArray& a, double tol) { return fov::is_normal(matrix_from_numpy(a), tol); },
      py::arg("A"), py::arg("tol") = 1e-10);
  m.def(
      "dft_matrix", [](std::size_t n) { return matrix_to_numpy(fov::dft_matrix(n)); }, py::arg("n"));
  m.def(
      "phase_normalize",
      [](const ComplexArray& v, std::size_t k) {
        return vector_to_numpy(fov::phase_normalize(vector_from_numpy(v), k));
      },
      py::arg("v"), py::arg("k"));
  m.def(
      "deletion_projector",
      [](std::size_t n, std::size_t k) { return matrix_to_numpy(fov::deletion_projector(n, k)); },
      py::arg("n"), py::arg("k"));
  m.def(
      "project_down",
      [](const ComplexArray& y, std::size_t k) {
        return vector_to_numpy(fov::project_down(vector_from_numpy(y), k));
      },
      py::arg("y"), py::arg("k"));
  m.def(
      "principal_submatrix",
      [](const ComplexArray& a, std::size_t k) {
        return matrix_to_numpy(fov::principal_submatrix(matrix_from_numpy(a), k));
      },
      py::arg("A"), py::arg("k"));
  m.def(
      "rayleigh",
      [](const ComplexArray& a, const ComplexArray& x) {
        return fov::rayleigh(matrix_from_numpy(a), vector_from_numpy(x));
      },
      py::arg("A"), py::arg("x"));

  m.def(
      "support",
      [](const ComplexArray& a, double theta) { return fov::support(matrix_from_numpy(a), theta); },
      py::arg("A"), py::arg("theta"));
  m.def(
      "boundary",
      [](const ComplexArray& a, std::size_t n_angles) {
        return fov::boundary(matrix_from_numpy(a), n_angles);
      },
      py::arg("A"), py::arg("n_angles") = fov::kDefaultAngles);
  m.def(
      "contains",
      [](const ComplexArray& a, Complex z, std::size_t n_angles, double tol) {
        return fov::contains(matrix_from_numpy(a), z, n_angles, tol);
      },
      py::arg("A"), py::arg("z"), py::arg("n_angles") = fov::kDefaultAngles,
      py::arg("tol") = 1e-8);
  m.def(
      "random_field_samples",
      [](const ComplexArray& a, std::size_t count, std::uint64_t seed) {
        return vector_to_numpy(fov::random_field_samples(matrix_from_numpy(a), count, seed));
      },
      py::arg("A"), py::arg("count"), py::arg("seed"));
  m.def(
      "support_gap_to_hull",
      [](const ComplexArray& a, const std::vector<Complex>& eigs, std::size_t n_angles) {
        return fov::support_gap_to_hull(matrix_from_numpy(a), eigs, n_angles);
      },
      py::arg("A"), py::arg("eigenvalues"), py::arg("n_angles") = fov::kDefaultAngles);

  m.def(
      "convex_hull",
      [](const std::vector<Complex>& pts, std::optional<double> collapse_tol) {
        return collapse_tol ? fov::convex_hull(pts, *collapse_tol) : fov::convex_hull(pts);
      },
      py::arg("points"), py::arg("collapse_tol") = std::nullopt);
  m.def(
      "edge_midpoints", [](const fov::SpectralPolygon& p) { return fov::edge_midpoints(p); },
      py::arg("polygon"));
  m.def(
      "adjacent_vertex_pairs",
      [](const fov::SpectralPolygon& p) { return fov::adjacent_vertex_pairs(p); },
      py::arg("polygon"));
  m.def(
      "point_on_segment",
      [](Complex z, Complex a, Complex b, double tol) {
        return fov::point_on_segment(z, fov::Segment{a, b, 0, 1}, tol);
      },
      py::arg("z"), py::arg("a"), py::arg("b"), py::arg("tol"));

  m.def(
      "is_convexoid_numeric",
      [](const ComplexArray& a, const std::vector<Complex>& eigs, std::size_t n_angles,
         std::optional<double> tol) {
        const ComplexMatrix mat = matrix_from_numpy(a);
        return tol ? fov::is_convexoid_numeric(mat, eigs, n_angles, *tol)
                   : fov::is_convexoid_numeric(mat, eigs);
      },
      py::arg("A"), py::arg("eigenvalues"), py::arg("n_angles") = fov::kDefaultAngles,
      py::arg("tol") = std::nullopt);
  m.def(
      "verify_johnson_decomposition",
      [](const ComplexArray& a, const ComplexArray& u, std::size_t split, double tol,
         std::size_t n_angles) {
        return fov::verify_johnson_decomposition(matrix_from_numpy(a), matrix_from_numpy(u), split,
                                                 tol, n_angles);
      },
      py::arg("A"), py::arg("U"), py::arg("split"), py::arg("tol") = 1e-8,
      py::arg("n_angles") = fov::kDefaultAngles);
  m.def(
      "eigen_decompose_normal",
      [](const ComplexArray& a, double tol) {
        const fov::NormalDecomposition nd = fov::eigen_decompose_normal(matrix_from_numpy(a), tol);
        return py::make_tuple(vector_to_numpy(nd.eigenvalues), matrix_to_numpy(nd.unitary));
      },
      py::arg("A"), py::arg("tol") = 1e-10);

  m.def(
      "contact_point",
      [](const ComplexArray& v, const ComplexArray& w, Complex li, Complex lj, std::size_t k) {
        return fov::contact_point(vector_from_numpy(v), vector_from_numpy(w), li, lj, k);
      },
      py::arg("v"), py::arg("w"), py::arg("lambda_i"), py::arg("lambda_j"), py::arg("k"));
  m.def(
      "inscribe",
      [](const ComplexArray& a, std::size_t k, double tol) {
        return fov::inscribe(matrix_from_numpy(a), k, tol);
      },
      py::arg("A"), py::arg("k"), py::arg("tol") = 1e-8,
      "Tangency report for the principal submatrix obtained by deleting row/column k (0-based).");
  m.def(
      "dft_inscribe",
      [](const std::vector<Complex>& eigs, std::size_t k) { return fov::dft_inscribe(eigs, k); },
      py::arg("eigenvalues"), py::arg("k"));
  m.def(
      "verify_inscription",
      [](const ComplexArray& a, std::size_t k, const fov::TangencyReport& rep, std::size_t n_angles,
         double tol) {
        return fov::verify_inscription(matrix_from_numpy(a), k, rep, n_angles, tol);
      },
      py::arg("A"), py::arg("k"), py::arg("report"), py::arg("n_angles") = fov::kDefaultAngles,
      py::arg("tol") = 1e-8);
  m.def(
      "sign_invariance_check",
      [](const ComplexArray& v, const ComplexArray& w, Complex li, Complex lj, std::size_t k) {
        return fov::sign_invariance_check(vector_from_numpy(v), vector_from_numpy(w), li, lj, k);
      },
      py::arg("v"), py::arg("w"), py::arg("lambda_i"), py::arg("lambda_j"), py::arg("k"));

  m.def(
      "render_svg",
      [](const fov::SpectralPolygon& poly, const fov::FovBoundary& sub,
         const std::vector<fov::EdgeContact>& contacts) {
        return fov::render_svg(poly, sub, contacts);
      },
      py::arg("polygon"), py::arg("submatrix_boundary"), py::arg("contacts"));
}
