#include "fov/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fov {

namespace {

using nlohmann::json;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_svg(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void append_complex(std::string& s, Complex z) {
  s += '[';
  s += fmt(z.real());
  s += ',';
  s += fmt(z.imag());
  s += ']';
}

void append_complex_array(std::string& s, const ComplexVector& v) {
  s += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    append_complex(s, v[i]);
  }
  s += ']';
}

std::string escape_json(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

double require_number(const json& j, const char* what) {
  if (!j.is_number()) throw Error(Errc::shape_error, std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw Error(Errc::shape_error, std::string(what) + " must be finite");
  return x;
}

Complex complex_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2)
    throw Error(Errc::shape_error, std::string(what) + " must be a [re, im] pair");
  return {require_number(j[0], what), require_number(j[1], what)};
}

std::vector<Complex> complex_array_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::shape_error, std::string(what) + " must be an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const json& cell : j) out.push_back(complex_from_json(cell, what));
  return out;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::shape_error, "matrix document must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw Error(Errc::shape_error, "matrix document requires an integer field \"n\"");
  const long long n_signed = j["n"].get<long long>();
  if (n_signed < 1) throw Error(Errc::shape_error, "matrix order must be >= 1");
  const auto n = static_cast<std::size_t>(n_signed);
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != n)
    throw Error(Errc::shape_error, "\"entries\" must be an array of n rows");
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = j["entries"][i];
    if (!row.is_array() || row.size() != n)
      throw Error(Errc::shape_error, "ragged row " + std::to_string(i + 1) + " in matrix entries");
    for (std::size_t c = 0; c < n; ++c) m(i, c) = complex_from_json(row[c], "matrix entry");
  }
  return m;
}

json parse_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {  // parse errors, number overflow, ...
    throw Error(Errc::parse_error, e.what());
  }
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void append_polygon(std::string& s, const SpectralPolygon& poly) {
  s += "{\"vertices\":";
  append_complex_array(s, poly.vertices);
  s += ",\"vertex_eigenindex\":[";
  for (std::size_t t = 0; t < poly.vertex_eigenindex.size(); ++t) {
    if (t) s += ',';
    s += std::to_string(poly.vertex_eigenindex[t] + 1);
  }
  s += "],\"edges\":[";
  const auto edges = poly.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e) s += ',';
    s += '[';
    s += std::to_string(edges[e].vertex_a + 1);
    s += ',';
    s += std::to_string(edges[e].vertex_b + 1);
    s += ']';
  }
  s += "],\"midpoints\":";
  std::vector<Complex> mids;
  if (poly.degree() >= 2) mids = edge_midpoints(poly);
  append_complex_array(s, mids);
  s += '}';
}

void append_boundary(std::string& s, const FovBoundary& b) {
  s += '[';
  for (std::size_t t = 0; t < b.samples.size(); ++t) {
    const SupportSample& sample = b.samples[t];
    if (t) s += ',';
    s += "{\"theta\":";
    s += fmt(sample.theta);
    s += ",\"support\":";
    s += fmt(sample.support);
    s += ",\"boundary_point\":";
    append_complex(s, sample.boundary_point);
    s += ",\"witness\":";
    append_complex_array(s, sample.witness);
    s += '}';
  }
  s += ']';
}

void append_convexoid(std::string& s, const ConvexoidVerdict& v) {
  s += "{\"is_convexoid\":";
  s += v.is_convexoid ? "true" : "false";
  s += ",\"max_support_gap\":";
  s += fmt(v.max_support_gap);
  s += ",\"n_angles\":";
  s += std::to_string(v.n_angles);
  s += ",\"worst_angle\":";
  s += fmt(v.worst_angle);
  s += ",\"is_normal\":";
  s += v.is_normal ? "true" : "false";
  s += ",\"tol\":";
  s += fmt(v.tol);
  s += '}';
}

void append_tangency(std::string& s, const TangencyReport& rep) {
  s += "{\"k\":";
  s += std::to_string(rep.k + 1);
  s += ",\"all_verified\":";
  s += rep.all_verified ? "true" : "false";
  s += ",\"note\":\"";
  s += escape_json(rep.note);
  s += "\",\"contacts\":[";
  for (std::size_t c = 0; c < rep.contacts.size(); ++c) {
    const EdgeContact& contact = rep.contacts[c];
    if (c) s += ',';
    s += "{\"edge\":[";
    s += std::to_string(contact.eigen_i + 1);
    s += ',';
    s += std::to_string(contact.eigen_j + 1);
    s += "],\"case\":\"";
    s += contact_case_name(contact.case_tag);
    s += "\",\"contact_point\":";
    append_complex(s, contact.contact_point);
    if (contact.alpha_sq) {
      s += ",\"alpha_sq\":";
      s += fmt(*contact.alpha_sq);
    }
    if (contact.beta_sq) {
      s += ",\"beta_sq\":";
      s += fmt(*contact.beta_sq);
    }
    s += ",\"witness\":";
    append_complex_array(s, contact.witness);
    s += ",\"note\":\"";
    s += escape_json(contact.note);
    s += "\"}";
  }
  s += "]}";
}

std::size_t index_from_one_based(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    throw Error(Errc::shape_error, std::string(what) + " must be a positive integer");
  return static_cast<std::size_t>(j.get<long long>() - 1);
}

ReportData report_from_json(const json& j);

}  // namespace

std::string serialize_matrix(const ComplexMatrix& m) {
  if (!m.is_square() || m.rows() == 0)
    throw Error(Errc::shape_error, "only non-empty square matrices are serialized");
  std::string s = "{\"n\":" + std::to_string(m.rows()) + ",\"entries\":[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ',';
      append_complex(s, m(i, j));
    }
    s += ']';
  }
  s += "]}";
  return s;
}

ComplexMatrix parse_matrix(std::istream& in) {
  const ComplexMatrix m = matrix_from_json(parse_json(in));
  if (!all_finite(m)) throw Error(Errc::shape_error, "matrix entries must be finite");
  return m;
}

ComplexMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

ComplexMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  return parse_matrix(in);
}

void write_matrix_file(const ComplexMatrix& m, const std::string& path) {
  write_text_file(path, serialize_matrix(m) + "\n");
}

std::string matrix_digest(const ComplexMatrix& m) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(serialize_matrix(m))));
  return std::string("fnv1a64:") + buf;
}

std::string serialize_report(const ReportData& report) {
  std::string s = "{\"schema\":\"fov-report/1\",\"input_digest\":\"";
  s += report.input_digest;
  s += "\",\"n\":" + std::to_string(report.matrix.rows());
  s += ",\"n_angles\":" + std::to_string(report.n_angles);
  s += ",\"tol\":";
  s += fmt(report.tol);
  s += ",\"is_normal\":";
  s += report.matrix_is_normal ? "true" : "false";
  s += ",\"matrix\":";
  s += serialize_matrix(report.matrix);
  s += ",\"convexoid\":";
  append_convexoid(s, report.convexoid);
  s += ",\"eigenvalues\":";
  append_complex_array(s, report.eigenvalues);
  s += ",\"polygon\":";
  append_polygon(s, report.polygon);
  s += ",\"boundary\":";
  append_boundary(s, report.field_boundary);
  s += ",\"tangency\":[";
  for (std::size_t t = 0; t < report.tangency.size(); ++t) {
    if (t) s += ',';
    append_tangency(s, report.tangency[t]);
  }
  s += "]}";
  return s;
}

ReportData parse_report(std::istream& in) {
  const json j = parse_json(in);
  try {
    return report_from_json(j);
  } catch (const json::exception& e) {  // missing fields, wrong types
    throw Error(Errc::shape_error, e.what());
  }
}

namespace {

ReportData report_from_json(const json& j) {
  if (!j.is_object() || j.value("schema", "") != "fov-report/1")
    throw Error(Errc::shape_error, "not a fov-report/1 document");
  for (const char* field : {"input_digest", "matrix", "convexoid", "eigenvalues", "polygon",
                            "boundary", "tangency", "n_angles", "tol", "is_normal"})
    if (!j.contains(field))
      throw Error(Errc::shape_error, std::string("report is missing field \"") + field + "\"");

  ReportData r;
  r.matrix = matrix_from_json(j["matrix"]);
  r.input_digest = j["input_digest"].get<std::string>();
  r.matrix_is_normal = j["is_normal"].get<bool>();
  r.n_angles = static_cast<std::size_t>(j["n_angles"].get<long long>());
  r.tol = require_number(j["tol"], "tol");
  r.eigenvalues = complex_array_from_json(j["eigenvalues"], "eigenvalues");

  const json& cv = j["convexoid"];
  r.convexoid.is_convexoid = cv.at("is_convexoid").get<bool>();
  r.convexoid.max_support_gap = require_number(cv.at("max_support_gap"), "max_support_gap");
  r.convexoid.n_angles = static_cast<std::size_t>(cv.at("n_angles").get<long long>());
  r.convexoid.worst_angle = require_number(cv.at("worst_angle"), "worst_angle");
  r.convexoid.is_normal = cv.at("is_normal").get<bool>();
  r.convexoid.tol = require_number(cv.at("tol"), "tol");

  const json& poly = j["polygon"];
  r.polygon.vertices = complex_array_from_json(poly.at("vertices"), "polygon vertices");
  r.polygon.source_eigenvalues = r.eigenvalues;
  for (const json& idx : poly.at("vertex_eigenindex"))
    r.polygon.vertex_eigenindex.push_back(index_from_one_based(idx, "vertex_eigenindex"));
  if (r.polygon.vertex_eigenindex.size() != r.polygon.vertices.size())
    throw Error(Errc::shape_error, "polygon index/vertex length mismatch");

  for (const json& sample : j["boundary"]) {
    SupportSample s;
    s.theta = require_number(sample.at("theta"), "theta");
    s.support = require_number(sample.at("support"), "support");
    s.boundary_point = complex_from_json(sample.at("boundary_point"), "boundary_point");
    s.witness = complex_array_from_json(sample.at("witness"), "witness");
    r.field_boundary.samples.push_back(std::move(s));
  }
  r.field_boundary.source_dim = r.matrix.rows();

  for (const json& rep_json : j["tangency"]) {
    TangencyReport rep;
    rep.k = index_from_one_based(rep_json.at("k"), "k");
    rep.all_verified = rep_json.at("all_verified").get<bool>();
    rep.note = rep_json.value("note", "");
    rep.polygon = r.polygon;
    for (const json& cj : rep_json.at("contacts")) {
      EdgeContact c;
      const json& edge = cj.at("edge");
      if (!edge.is_array() || edge.size() != 2)
        throw Error(Errc::shape_error, "contact edge must be an index pair");
      c.eigen_i = index_from_one_based(edge[0], "edge index");
      c.eigen_j = index_from_one_based(edge[1], "edge index");
      c.case_tag = contact_case_from_name(cj.at("case").get<std::string>());
      c.contact_point = complex_from_json(cj.at("contact_point"), "contact_point");
      if (cj.contains("alpha_sq")) c.alpha_sq = require_number(cj["alpha_sq"], "alpha_sq");
      if (cj.contains("beta_sq")) c.beta_sq = require_number(cj["beta_sq"], "beta_sq");
      c.witness = complex_array_from_json(cj.at("witness"), "contact witness");
      c.note = cj.value("note", "");
      rep.contacts.push_back(std::move(c));
    }
    r.tangency.push_back(std::move(rep));
  }
  return r;
}

}  // namespace

ReportData parse_report_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  return parse_report(in);
}

std::string serialize_convexoid(const ConvexoidVerdict& verdict) {
  std::string s;
  append_convexoid(s, verdict);
  return s;
}

std::string serialize_polygon(const SpectralPolygon& polygon) {
  std::string s;
  append_polygon(s, polygon);
  return s;
}

std::string serialize_boundary_json(const FovBoundary& sweep) {
  std::string s = "{\"n\":" + std::to_string(sweep.source_dim) +
                  ",\"n_angles\":" + std::to_string(sweep.samples.size()) + ",\"samples\":";
  append_boundary(s, sweep);
  s += '}';
  return s;
}

std::string serialize_boundary_csv(const FovBoundary& sweep) {
  std::string s = "theta,support,point_re,point_im\n";
  for (const SupportSample& sample : sweep.samples) {
    s += fmt(sample.theta);
    s += ',';
    s += fmt(sample.support);
    s += ',';
    s += fmt(sample.boundary_point.real());
    s += ',';
    s += fmt(sample.boundary_point.imag());
    s += '\n';
  }
  return s;
}

std::string render_svg(const SpectralPolygon& polygon, const FovBoundary& submatrix_boundary,
                       const std::vector<EdgeContact>& contacts) {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  bool first = true;
  auto grow = [&](Complex z) {
    if (first) {
      xmin = xmax = z.real();
      ymin = ymax = z.imag();
      first = false;
      return;
    }
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  };
  for (const Complex& v : polygon.vertices) grow(v);
  for (const Complex& v : polygon.source_eigenvalues) grow(v);
  for (const SupportSample& s : submatrix_boundary.samples) grow(s.boundary_point);
  for (const EdgeContact& c : contacts) grow(c.contact_point);
  if (first) throw Error(Errc::empty_input, "nothing to draw");

  double span = std::max(xmax - xmin, ymax - ymin);
  if (span <= 0.0) span = 1.0;
  const double margin = 0.05 * span;
  const double view_x = xmin - margin;
  const double view_y = -ymax - margin;  // the flip maps y to -y
  const double view_w = (xmax - xmin) + 2.0 * margin;
  const double view_h = (ymax - ymin) + 2.0 * margin;

  const double stroke = 0.004 * span;
  const double r_eig = 0.012 * span;
  const double r_contact = 0.008 * span;
  const double font = 0.035 * span;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<!-- mathematical orientation: geometry is wrapped in a single vertical flip"
       " (scale(1,-1)) so the imaginary axis points up -->\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"";
  s += fmt_svg(view_x);
  s += ' ';
  s += fmt_svg(view_y);
  s += ' ';
  s += fmt_svg(view_w);
  s += ' ';
  s += fmt_svg(view_h);
  s += "\">\n<g transform=\"scale(1,-1)\">\n";

  if (!submatrix_boundary.samples.empty() && polygon.degree() >= 2) {
    s += "<path class=\"field\" d=\"";
    for (std::size_t t = 0; t < submatrix_boundary.samples.size(); ++t) {
      const Complex z = submatrix_boundary.samples[t].boundary_point;
      s += (t == 0) ? 'M' : 'L';
      s += fmt_svg(z.real());
      s += ' ';
      s += fmt_svg(z.imag());
    }
    s += "Z\" fill=\"#9ec5e8\" fill-opacity=\"0.6\" stroke=\"#3a70a8\" stroke-width=\"";
    s += fmt_svg(stroke);
    s += "\"/>\n";
  }

  if (polygon.degree() >= 2) {
    s += "<path class=\"polygon\" d=\"";
    for (std::size_t t = 0; t < polygon.vertices.size(); ++t) {
      s += (t == 0) ? 'M' : 'L';
      s += fmt_svg(polygon.vertices[t].real());
      s += ' ';
      s += fmt_svg(polygon.vertices[t].imag());
    }
    s += "Z\" fill=\"none\" stroke=\"#1b2a4a\" stroke-width=\"";
    s += fmt_svg(stroke);
    s += "\"/>\n";
  }

  // one marker per distinct eigenvalue; duplicate labels share the marker
  std::vector<Complex> marker_pos;
  std::vector<std::string> marker_label;
  for (std::size_t t = 0; t < polygon.source_eigenvalues.size(); ++t) {
    const Complex z = polygon.source_eigenvalues[t];
    bool found = false;
    for (std::size_t m = 0; m < marker_pos.size(); ++m) {
      if (marker_pos[m] == z) {
        marker_label[m] += ",λ" + std::to_string(t + 1);
        found = true;
        break;
      }
    }
    if (!found) {
      marker_pos.push_back(z);
      marker_label.push_back("λ" + std::to_string(t + 1));
    }
  }
  for (const Complex& z : marker_pos) {
    s += "<circle class=\"eigenvalue\" cx=\"";
    s += fmt_svg(z.real());
    s += "\" cy=\"";
    s += fmt_svg(z.imag());
    s += "\" r=\"";
    s += fmt_svg(r_eig);
    s += "\" fill=\"#1b2a4a\"/>\n";
  }
  for (const EdgeContact& c : contacts) {
    s += "<circle class=\"contact\" cx=\"";
    s += fmt_svg(c.contact_point.real());
    s += "\" cy=\"";
    s += fmt_svg(c.contact_point.imag());
    s += "\" r=\"";
    s += fmt_svg(r_contact);
    s += "\" fill=\"#c23b22\" stroke=\"#ffffff\" stroke-width=\"";
    s += fmt_svg(0.5 * stroke);
    s += "\"/>\n";
  }
  s += "</g>\n<g font-family=\"monospace\" font-size=\"";
  s += fmt_svg(font);
  s += "\" fill=\"#1b2a4a\">\n";
  for (std::size_t m = 0; m < marker_pos.size(); ++m) {
    // labels live outside the flipped group, so y is negated by hand
    s += "<text x=\"";
    s += fmt_svg(marker_pos[m].real() + 1.2 * r_eig);
    s += "\" y=\"";
    s += fmt_svg(-(marker_pos[m].imag() + 1.2 * r_eig));
    s += "\">";
    s += marker_label[m];
    s += "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

void emit_svg(const SpectralPolygon& polygon, const FovBoundary& submatrix_boundary,
              const std::vector<EdgeContact>& contacts, const std::string& path) {
  write_text_file(path, render_svg(polygon, submatrix_boundary, contacts));
}

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(Errc::parse_error, "empty complex literal");

  auto to_double = [](const std::string& tok, const std::string& whole) {
    if (tok.empty()) throw Error(Errc::parse_error, "bad complex literal: " + whole);
    char* end = nullptr;
    const double x = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || !std::isfinite(x))
      throw Error(Errc::parse_error, "bad complex literal: " + whole);
    return x;
  };
  auto imag_value = [&](std::string body, const std::string& whole) {
    if (body.empty() || body == "+") return 1.0;
    if (body == "-") return -1.0;
    return to_double(body, whole);
  };

  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }

  if (split == std::string::npos) {
    if (s.back() == 'i') return {0.0, imag_value(s.substr(0, s.size() - 1), text)};
    return {to_double(s, text), 0.0};
  }
  const std::string real_tok = s.substr(0, split);
  const std::string imag_tok = s.substr(split);
  if (imag_tok.back() != 'i')
    throw Error(Errc::parse_error, "bad complex literal (expected trailing 'i'): " + text);
  return {to_double(real_tok, text), imag_value(imag_tok.substr(0, imag_tok.size() - 1), text)};
}

std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t comma = text.find(',', begin);
    const std::string tok =
        text.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
    out.push_back(parse_complex(tok));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot open " + path + " for writing");
  out << content;
  if (!out) throw Error(Errc::io_error, "failed writing " + path);
}

}  // namespace fov
