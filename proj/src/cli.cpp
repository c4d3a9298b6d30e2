#include "fov/cli.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "fov/convexoid.hpp"
#include "fov/fov_engine.hpp"
#include "fov/inscription.hpp"
#include "fov/io.hpp"
#include "fov/linalg.hpp"
#include "fov/polygon.hpp"

namespace fov {

namespace {

constexpr const char* kIndexNote = "Deletion indices on the command line and in JSON are 1-based.";

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::parse_error:
    case Errc::shape_error:
    case Errc::io_error:
    case Errc::invalid_argument:
      return 2;
    default:
      return 3;
  }
}

std::string fmt_json_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct InscribeFlags {
  std::string matrix_path;
  int k = 0;  // 1-based; 0 = all
  std::size_t angles = kDefaultAngles;
  double tol = 1e-8;
  std::string json_path, svg_path, eigs;
};

// Shared by `inscribe` (normal input) and `dft`.
int run_tangency(const ComplexMatrix& a, const std::vector<Complex>* dft_eigs,
                 const InscribeFlags& flags, std::ostream& out) {
  const std::size_t n = a.rows();
  if (flags.k < 0 || static_cast<std::size_t>(flags.k) > n)
    throw Error(Errc::invalid_argument, "--k must be in 1.." + std::to_string(n));
  if (!flags.svg_path.empty() && flags.k == 0)
    throw Error(Errc::invalid_argument, "--svg requires --k");

  ReportData rd;
  rd.matrix = a;
  rd.input_digest = matrix_digest(a);
  rd.matrix_is_normal = true;
  rd.n_angles = flags.angles;
  rd.tol = flags.tol;
  const NormalDecomposition nd = eigen_decompose_normal(a, flags.tol);
  rd.eigenvalues = nd.eigenvalues;
  rd.convexoid =
      is_convexoid_numeric(a, nd.eigenvalues, flags.angles, flags.tol * (1.0 + a.frobenius_norm()));
  rd.polygon = convex_hull(nd.eigenvalues);
  rd.field_boundary = boundary(a, flags.angles);

  std::vector<std::size_t> ks;
  if (flags.k > 0)
    ks.push_back(static_cast<std::size_t>(flags.k) - 1);
  else
    for (std::size_t k = 0; k < n; ++k) ks.push_back(k);

  bool all_ok = true;
  for (std::size_t k : ks) {
    TangencyReport rep = dft_eigs ? dft_inscribe(*dft_eigs, k) : inscribe(a, k, flags.tol);
    all_ok = all_ok && rep.all_verified;
    rd.tangency.push_back(std::move(rep));
  }

  const std::string text = serialize_report(rd) + "\n";
  if (flags.json_path.empty())
    out << text;
  else
    write_text_file(flags.json_path, text);

  if (!flags.svg_path.empty()) {
    const std::size_t k = static_cast<std::size_t>(flags.k) - 1;
    const FovBoundary sub = boundary(principal_submatrix(a, k), flags.angles);
    emit_svg(rd.tangency.front().polygon, sub, rd.tangency.front().contacts, flags.svg_path);
  }
  return all_ok ? 0 : 1;
}

// Support-function route for matrices without a constructive decomposition:
// the spectrum must be supplied, the polygon side contacts are located by a
// convex search instead of the eigenvector construction.
int run_verify_only(const ComplexMatrix& a, const std::vector<Complex>& eigs,
                    const InscribeFlags& flags, std::ostream& out) {
  const std::size_t n = a.rows();
  if (flags.k < 0 || static_cast<std::size_t>(flags.k) > n)
    throw Error(Errc::invalid_argument, "--k must be in 1.." + std::to_string(n));
  if (!flags.svg_path.empty() && flags.k == 0)
    throw Error(Errc::invalid_argument, "--svg requires --k");
  if (eigs.size() != n)
    throw Error(Errc::invalid_argument, "--eigs must list exactly n eigenvalues");
  const double tol_abs = flags.tol * (1.0 + a.frobenius_norm());
  const ConvexoidVerdict verdict = is_convexoid_numeric(a, eigs, flags.angles, tol_abs);
  const SpectralPolygon poly = convex_hull(eigs);

  std::vector<std::size_t> ks;
  if (flags.k > 0)
    ks.push_back(static_cast<std::size_t>(flags.k) - 1);
  else
    for (std::size_t k = 0; k < n; ++k) ks.push_back(k);

  std::string s = "{\"schema\":\"fov-verify-only/1\",\"input_digest\":\"" + matrix_digest(a) +
                  "\",\"n\":" + std::to_string(n) + ",\"mode\":\"verify_only\",\"is_normal\":false";
  s += ",\"convexoid\":" + serialize_convexoid(verdict);
  s += ",\"polygon\":" + serialize_polygon(poly);
  s += ",\"per_k\":[";

  const FovBoundary full = boundary(a, flags.angles);
  bool all_ok = true;
  for (std::size_t t = 0; t < ks.size(); ++t) {
    const std::size_t k = ks[t];
    const ComplexMatrix sub = principal_submatrix(a, k);
    const FovBoundary sub_sweep = boundary(sub, flags.angles);
    bool containment = true;
    for (std::size_t j = 0; j < full.samples.size(); ++j)
      if (sub_sweep.samples[j].support > full.samples[j].support + tol_abs) containment = false;

    bool all_found = true;
    std::string edges_json = "[";
    if (poly.degree() >= 2) {
      const auto results = edge_intersection_search(sub, poly, flags.angles, tol_abs);
      for (std::size_t e = 0; e < results.size(); ++e) {
        if (e) edges_json += ',';
        edges_json += "{\"edge_index\":" + std::to_string(results[e].edge_index + 1);
        edges_json += ",\"found\":" + std::string(results[e].found ? "true" : "false");
        edges_json += ",\"point\":[" + fmt_json_double(results[e].point.real()) + "," +
                      fmt_json_double(results[e].point.imag()) + "]";
        edges_json += ",\"deficit\":" + fmt_json_double(results[e].deficit) + "}";
        all_found = all_found && results[e].found;
      }
    }
    edges_json += ']';

    if (t) s += ',';
    s += "{\"k\":" + std::to_string(k + 1);
    s += ",\"containment_ok\":" + std::string(containment ? "true" : "false");
    s += ",\"all_found\":" + std::string(all_found ? "true" : "false");
    s += ",\"edges\":" + edges_json + "}";
    all_ok = all_ok && containment && all_found;
  }
  s += "]}\n";

  if (flags.json_path.empty())
    out << s;
  else
    write_text_file(flags.json_path, s);
  if (!flags.svg_path.empty()) {
    const std::size_t k = static_cast<std::size_t>(flags.k) - 1;
    const FovBoundary sub = boundary(principal_submatrix(a, k), flags.angles);
    emit_svg(poly, sub, {}, flags.svg_path);
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fov: fields of values, spectral polygons, and submatrix tangency"};
  app.footer(kIndexNote);
  app.require_subcommand(0, 1);

  std::string matrix_path, out_path, format = "json", eigs_text, report_path;
  InscribeFlags flags;
  std::size_t angles = kDefaultAngles;
  double normal_tol = 1e-10;
  std::size_t verify_angles = 0;
  double verify_tol = 0.0;

  CLI::App* cmd_boundary = app.add_subcommand("boundary", "sample the field boundary of a matrix");
  cmd_boundary->add_option("matrix", matrix_path, "matrix JSON file")->required();
  cmd_boundary->add_option("--angles", angles, "number of sweep angles (default 360)");
  cmd_boundary->add_option("--format", format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_boundary->add_option("--out", out_path, "write output to a file instead of stdout");

  CLI::App* cmd_polygon = app.add_subcommand("polygon", "eigenvalues and spectral polygon of a normal matrix");
  cmd_polygon->add_option("matrix", matrix_path, "matrix JSON file")->required();
  cmd_polygon->add_option("--tol", normal_tol, "normality tolerance (relative, default 1e-10)");

  CLI::App* cmd_convexoid = app.add_subcommand("convexoid", "numerical convexoid verdict");
  cmd_convexoid->add_option("matrix", matrix_path, "matrix JSON file")->required();
  cmd_convexoid->add_option("--angles", angles, "number of sweep angles (default 360)");
  cmd_convexoid->add_option("--tol", flags.tol, "relative tolerance (default 1e-8)");
  cmd_convexoid->add_option("--eigs", eigs_text, "eigenvalues, e.g. \"1+2i,3,-1i\" (required for non-normal input)");

  CLI::App* cmd_inscribe = app.add_subcommand("inscribe", "tangency report for principal submatrices");
  cmd_inscribe->add_option("matrix", matrix_path, "matrix JSON file")->required();
  cmd_inscribe->add_option("--k", flags.k, "deletion index (1-based); default: all");
  cmd_inscribe->add_option("--angles", flags.angles, "sweep angles for the report and checks (default 360)");
  cmd_inscribe->add_option("--tol", flags.tol, "relative tolerance (default 1e-8)");
  cmd_inscribe->add_option("--json", flags.json_path, "write the report to a file");
  cmd_inscribe->add_option("--svg", flags.svg_path, "write an SVG figure (requires --k)");
  cmd_inscribe->add_option("--eigs", flags.eigs,
                           "eigenvalues of a non-normal convexoid input (enables verify-only mode)");

  CLI::App* cmd_dft = app.add_subcommand("dft", "inscribe A = F diag(eigs) F* for the DFT matrix F");
  cmd_dft->add_option("--eigs", flags.eigs, "eigenvalues, e.g. \"0,1,0+1i\"")->required();
  cmd_dft->add_option("--k", flags.k, "deletion index (1-based); default: all");
  cmd_dft->add_option("--angles", flags.angles, "sweep angles for the report and checks (default 360)");
  cmd_dft->add_option("--tol", flags.tol, "relative tolerance (default 1e-8)");
  cmd_dft->add_option("--json", flags.json_path, "write the report to a file");
  cmd_dft->add_option("--svg", flags.svg_path, "write an SVG figure (requires --k)");

  CLI::App* cmd_verify = app.add_subcommand("verify", "re-verify a saved tangency report");
  cmd_verify->add_option("report", report_path, "report JSON file")->required();
  cmd_verify->add_option("--angles", verify_angles, "override the report's angle count");
  cmd_verify->add_option("--tol", verify_tol, "override the report's tolerance");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (app.get_subcommands().empty()) {
    out << app.help();
    return 0;
  }

  try {
    if (app.got_subcommand(cmd_boundary)) {
      const FovBoundary sweep = boundary(parse_matrix_file(matrix_path), angles);
      const std::string text =
          (format == "csv") ? serialize_boundary_csv(sweep) : serialize_boundary_json(sweep) + "\n";
      if (out_path.empty())
        out << text;
      else
        write_text_file(out_path, text);
      return 0;
    }

    if (app.got_subcommand(cmd_polygon)) {
      const ComplexMatrix a = parse_matrix_file(matrix_path);
      const NormalDecomposition nd = eigen_decompose_normal(a, normal_tol);
      const SpectralPolygon poly = convex_hull(nd.eigenvalues);
      std::string s = "{\"n\":" + std::to_string(a.rows()) + ",\"eigenvalues\":[";
      for (std::size_t t = 0; t < nd.eigenvalues.size(); ++t) {
        if (t) s += ',';
        s += "[" + fmt_json_double(nd.eigenvalues[t].real()) + "," +
             fmt_json_double(nd.eigenvalues[t].imag()) + "]";
      }
      s += "],\"polygon\":" + serialize_polygon(poly) + "}\n";
      out << s;
      return 0;
    }

    if (app.got_subcommand(cmd_convexoid)) {
      const ComplexMatrix a = parse_matrix_file(matrix_path);
      std::vector<Complex> eigs;
      if (!eigs_text.empty()) {
        eigs = parse_complex_list(eigs_text);
        if (eigs.size() != a.rows())
          throw Error(Errc::invalid_argument, "--eigs must list exactly n eigenvalues");
      } else if (is_normal(a, 1e-10)) {
        eigs = eigen_decompose_normal(a, 1e-10).eigenvalues;
      } else {
        throw Error(Errc::invalid_argument,
                    "non-normal input: the spectrum cannot be computed here, pass --eigs");
      }
      const ConvexoidVerdict v =
          is_convexoid_numeric(a, eigs, angles, flags.tol * (1.0 + a.frobenius_norm()));
      out << serialize_convexoid(v) << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_inscribe)) {
      const ComplexMatrix a = parse_matrix_file(matrix_path);
      if (is_normal(a, flags.tol)) return run_tangency(a, nullptr, flags, out);
      if (flags.eigs.empty())
        throw Error(Errc::not_normal,
                    "matrix is not normal; pass --eigs to run the verify-only mode");
      return run_verify_only(a, parse_complex_list(flags.eigs), flags, out);
    }

    if (app.got_subcommand(cmd_dft)) {
      const std::vector<Complex> eigs = parse_complex_list(flags.eigs);
      if (eigs.size() < 2) throw Error(Errc::too_small, "dft requires at least two eigenvalues");
      const ComplexMatrix f = dft_matrix(eigs.size());
      const ComplexMatrix a = f * ComplexMatrix::diagonal(eigs) * f.adjoint();
      return run_tangency(a, &eigs, flags, out);
    }

    if (app.got_subcommand(cmd_verify)) {
      const ReportData rd = parse_report_file(report_path);
      if (matrix_digest(rd.matrix) != rd.input_digest) {
        err << "verification failed: embedded matrix does not match input_digest\n";
        return 1;
      }
      const std::size_t use_angles = verify_angles ? verify_angles : rd.n_angles;
      const double use_tol = verify_tol > 0.0 ? verify_tol : rd.tol;
      bool all_ok = true;
      for (const TangencyReport& rep : rd.tangency) {
        const bool ok = verify_inscription(rd.matrix, rep.k, rep, use_angles, use_tol);
        out << "k=" << rep.k + 1 << ": " << (ok ? "verified" : "FAILED") << "\n";
        all_ok = all_ok && ok;
      }
      return all_ok ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace fov
