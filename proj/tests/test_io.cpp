#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "fov/convexoid.hpp"
#include "fov/inscription.hpp"
#include "fov/io.hpp"
#include "fov/linalg.hpp"
#include "support/fixtures.hpp"

using namespace fov;
using namespace fov::testing;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

ReportData make_report(const ComplexMatrix& a) {
  ReportData rd;
  rd.matrix = a;
  rd.input_digest = matrix_digest(a);
  rd.matrix_is_normal = is_normal(a, 1e-10);
  const NormalDecomposition nd = eigen_decompose_normal(a);
  rd.eigenvalues = nd.eigenvalues;
  rd.convexoid = is_convexoid_numeric(a, nd.eigenvalues);
  rd.polygon = convex_hull(nd.eigenvalues);
  rd.field_boundary = boundary(a, 90);
  rd.n_angles = 90;
  for (std::size_t k = 0; k < a.rows(); ++k) rd.tangency.push_back(inscribe(a, k));
  return rd;
}

}  // namespace

TEST_CASE("parse_matrix: examples") {
  const ComplexMatrix j =
      parse_matrix(std::string(R"({"n":2,"entries":[[[0,0],[1,0]],[[0,0],[0,0]]]})"));
  CHECK(j == jordan2());

  try {
    parse_matrix(std::string(R"({"n":2,"entries":[[[0,0],[1,0]],[[0,0]]]})"));
    FAIL("expected ShapeError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::shape_error);
  }
  try {
    parse_matrix(std::string("{\"n\":2,"));
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
  try {
    parse_matrix(std::string(R"({"n":1,"entries":[[[1e999,0]]]})"));
    FAIL("expected ParseError on overflow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
  CHECK_THROWS_AS(parse_matrix(std::string(R"({"n":0,"entries":[]})")), Error);
  CHECK_THROWS_AS(parse_matrix(std::string(R"({"entries":[[[0,0]]]})")), Error);
}

TEST_CASE("matrix serialization: exact round trip at 17 significant digits") {
  const ComplexMatrix a = fixture_matrix();
  CHECK(parse_matrix(serialize_matrix(a)) == a);  // bit-exact

  ComplexMatrix third(1, 1);
  third(0, 0) = Complex(1.0 / 3.0, -2.0 / 3.0);
  const std::string text = serialize_matrix(third);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
  CHECK(text.find("-0.66666666666666663") != std::string::npos);
  CHECK(parse_matrix(text) == third);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SplitMix64 rng(seed);
    const ComplexMatrix m = random_matrix(3, rng, 1e3);
    CHECK(parse_matrix(serialize_matrix(m)) == m);
  }
}

TEST_CASE("matrix_digest: stable and sensitive") {
  const ComplexMatrix a = fixture_matrix();
  CHECK(matrix_digest(a) == matrix_digest(a));
  CHECK(matrix_digest(a).rfind("fnv1a64:", 0) == 0);
  ComplexMatrix b = a;
  b(0, 0) += 1e-13;
  CHECK(matrix_digest(a) != matrix_digest(b));
}

TEST_CASE("report: serialize/parse round trip") {
  const ComplexMatrix a = ComplexMatrix::diagonal({Complex(1, 0), Complex(0, 1), Complex(-1, -1)});
  const ReportData rd = make_report(a);
  const std::string text = serialize_report(rd);

  std::istringstream in(text);
  const ReportData back = parse_report(in);
  CHECK(back.matrix == rd.matrix);
  CHECK(back.input_digest == rd.input_digest);
  CHECK(back.matrix_is_normal == rd.matrix_is_normal);
  CHECK(back.n_angles == rd.n_angles);
  CHECK(back.tol == rd.tol);
  CHECK(back.eigenvalues == rd.eigenvalues);
  CHECK(back.polygon.vertices == rd.polygon.vertices);
  CHECK(back.polygon.vertex_eigenindex == rd.polygon.vertex_eigenindex);
  REQUIRE(back.tangency.size() == rd.tangency.size());
  for (std::size_t t = 0; t < rd.tangency.size(); ++t) {
    CHECK(back.tangency[t].k == rd.tangency[t].k);
    CHECK(back.tangency[t].all_verified == rd.tangency[t].all_verified);
    REQUIRE(back.tangency[t].contacts.size() == rd.tangency[t].contacts.size());
    for (std::size_t c = 0; c < rd.tangency[t].contacts.size(); ++c) {
      const EdgeContact& x = back.tangency[t].contacts[c];
      const EdgeContact& y = rd.tangency[t].contacts[c];
      CHECK(x.eigen_i == y.eigen_i);
      CHECK(x.eigen_j == y.eigen_j);
      CHECK(x.case_tag == y.case_tag);
      CHECK(x.contact_point == y.contact_point);
      CHECK(x.alpha_sq == y.alpha_sq);
      CHECK(x.witness == y.witness);
    }
  }
  // canonical writer: a re-serialized parse is byte-identical
  CHECK(serialize_report(back) == text);

  // parsed reports re-verify against the embedded matrix
  for (const TangencyReport& rep : back.tangency)
    CHECK(verify_inscription(back.matrix, rep.k, rep, 90, back.tol));
}

TEST_CASE("report: malformed documents are rejected") {
  std::istringstream bad_schema(R"({"schema":"other"})");
  CHECK_THROWS_AS(parse_report(bad_schema), Error);
  std::istringstream truncated(R"({"schema":"fov-report/1")");
  CHECK_THROWS_AS(parse_report(truncated), Error);
  std::istringstream wrong_type(R"({"schema":"fov-report/1","input_digest":5})");
  try {
    parse_report(wrong_type);
    FAIL("expected ShapeError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::shape_error);
  }
}

TEST_CASE("render_svg: fixture figure has the expected elements") {
  const ComplexMatrix a = fixture_matrix();
  const TangencyReport rep = inscribe(a, 0);
  const FovBoundary sub = boundary(principal_submatrix(a, 0), 90);
  const std::string svg = render_svg(rep.polygon, sub, rep.contacts);

  CHECK(count_occurrences(svg, "<circle class=\"eigenvalue\"") == 4);
  CHECK(count_occurrences(svg, "<circle class=\"contact\"") == 4);
  CHECK(count_occurrences(svg, "<path class=\"polygon\"") == 1);
  CHECK(count_occurrences(svg, "<path class=\"field\"") == 1);
  CHECK(count_occurrences(svg, "<text") == 4);
  CHECK(svg.find("scale(1,-1)") != std::string::npos);
  CHECK(svg.find("width=\"800\" height=\"800\"") != std::string::npos);

  CHECK(render_svg(rep.polygon, sub, rep.contacts) == svg);  // deterministic
}

TEST_CASE("render_svg: single-point polygon draws one marker and no path") {
  const ComplexMatrix a = Complex(2, 1) * ComplexMatrix::identity(3);
  const TangencyReport rep = inscribe(a, 0);
  const FovBoundary sub = boundary(principal_submatrix(a, 0), 90);
  const std::string svg = render_svg(rep.polygon, sub, rep.contacts);
  CHECK(count_occurrences(svg, "<circle class=\"eigenvalue\"") == 1);
  CHECK(count_occurrences(svg, "<path") == 0);
  CHECK(count_occurrences(svg, "<circle class=\"contact\"") == 0);
}

TEST_CASE("render_svg: DFT contact markers coincide with side midpoints") {
  const std::vector<Complex> lambda = {Complex(0, 0), Complex(1, 0), Complex(0, 1)};
  const TangencyReport rep = dft_inscribe(lambda, 0);
  const ComplexMatrix f = dft_matrix(3);
  const ComplexMatrix a = f * ComplexMatrix::diagonal(lambda) * f.adjoint();
  const std::string svg = render_svg(rep.polygon, boundary(principal_submatrix(a, 0), 90), rep.contacts);
  for (const Complex& mid : edge_midpoints(rep.polygon)) {
    char needle[80];
    std::snprintf(needle, sizeof needle, "cx=\"%.10g\" cy=\"%.10g\"", mid.real(), mid.imag());
    CHECK(count_occurrences(svg, needle) >= 1);
  }
}

TEST_CASE("parse_complex: grammar") {
  CHECK(parse_complex("3") == Complex(3, 0));
  CHECK(parse_complex("-2.5") == Complex(-2.5, 0));
  CHECK(parse_complex("2i") == Complex(0, 2));
  CHECK(parse_complex("i") == Complex(0, 1));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("1+2i") == Complex(1, 2));
  CHECK(parse_complex("1-2i") == Complex(1, -2));
  CHECK(parse_complex("-1-5i") == Complex(-1, -5));
  CHECK(parse_complex("0+1i") == Complex(0, 1));
  CHECK(parse_complex(" 1 + 2 i ") == Complex(1, 2));
  CHECK(parse_complex("1e-3+2.5e2i") == Complex(1e-3, 2.5e2));
  CHECK(parse_complex("3.5+i") == Complex(3.5, 1));
  CHECK(parse_complex("3.5-i") == Complex(3.5, -1));

  for (const char* bad : {"", "1+2", "abc", "1++2i", "2i+1", "1+2j"}) {
    try {
      parse_complex(bad);
      FAIL("expected ParseError for ", bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse_error);
    }
  }

  const std::vector<Complex> list = parse_complex_list("0,1,0+1i");
  REQUIRE(list.size() == 3);
  CHECK(list[0] == Complex(0, 0));
  CHECK(list[1] == Complex(1, 0));
  CHECK(list[2] == Complex(0, 1));
  CHECK_THROWS_AS(parse_complex_list("1,,2"), Error);
}

TEST_CASE("boundary serialization formats") {
  const FovBoundary sweep = boundary(ComplexMatrix::diagonal({0.0, 1.0}), 4);
  const std::string csv = serialize_boundary_csv(sweep);
  CHECK(count_occurrences(csv, "\n") == 5);  // header + 4 rows
  CHECK(csv.rfind("theta,support,point_re,point_im\n", 0) == 0);
  const std::string json = serialize_boundary_json(sweep);
  CHECK(json.find("\"n_angles\":4") != std::string::npos);
  CHECK(count_occurrences(json, "\"theta\":") == 4);
}
