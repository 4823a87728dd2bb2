#include "dftbasis/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dftbasis::io {

using nlohmann::json;

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::runtime_error("malformed number '" + std::string(s) + "'");
  }
  return v;
}

json complex_array(const std::vector<cplx>& values) {
  json re = json::array();
  json im = json::array();
  for (const auto& v : values) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return {{"re", re}, {"im", im}};
}

std::vector<cplx> read_complex_array(const json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (re.size() != im.size()) throw std::runtime_error("re/im length mismatch");
  std::vector<cplx> out(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) {
    out[i] = {re[i].get<double>(), im[i].get<double>()};
  }
  return out;
}

json matrix_json(const CMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

CMatrix read_matrix_json(const json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto values = read_complex_array(j);
  if (values.size() != rows * cols) throw std::runtime_error("matrix size mismatch");
  CMatrix m(rows, cols);
  std::copy(values.begin(), values.end(), m.data());
  return m;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void csv_cells(std::ostringstream& os, const std::vector<cplx>& values) {
  for (const auto& v : values) {
    os << ',' << format_double(v.real()) << ',' << format_double(v.imag());
  }
  os << '\n';
}

std::vector<cplx> read_csv_cells(const std::vector<std::string_view>& fields,
                                 std::size_t count) {
  if (fields.size() != 1 + 2 * count) {
    throw std::runtime_error("CSV row has " + std::to_string(fields.size()) +
                             " fields, expected " + std::to_string(1 + 2 * count));
  }
  std::vector<cplx> out(count);
  for (std::size_t x = 0; x < count; ++x) {
    out[x] = {parse_double(fields[1 + 2 * x]), parse_double(fields[2 + 2 * x])};
  }
  return out;
}

}  // namespace

BasisDocument to_document(const OscillatorBasis& basis) {
  BasisDocument doc;
  doc.p = basis.p();
  doc.generator = basis.generator();
  doc.tool_version = std::string(kToolVersion);
  doc.theta = basis.transform();
  for (const auto& r : basis.records()) {
    doc.dft_eigenvalues.push_back(r.dft_eigenvalue);
    doc.torus_eigenvalues.push_back(r.torus_eigenvalue);
  }
  return doc;
}

// CSV layout:
//   # key=value metadata lines
//   i,phi_0_re,phi_0_im,...,phi_{p-1}_re,phi_{p-1}_im
//   one row per coordinate i, then rows labelled dft_eigenvalue and
//   torus_eigenvalue carrying the eigenvalue of column x.
std::string write_basis(const BasisDocument& doc, Format format) {
  if (format == Format::Json) {
    json j;
    j["kind"] = "basis";
    j["metadata"] = {{"p", doc.p},
                     {"generator", doc.generator},
                     {"tool_version", doc.tool_version}};
    j["theta"] = matrix_json(doc.theta);
    j["dft_eigenvalues"] = complex_array(doc.dft_eigenvalues);
    j["torus_eigenvalues"] = complex_array(doc.torus_eigenvalues);
    return j.dump(1) + "\n";
  }
  std::ostringstream os;
  os << "# kind=basis\n# p=" << doc.p << "\n# generator=" << doc.generator
     << "\n# tool_version=" << doc.tool_version << "\ni";
  for (std::size_t x = 0; x < doc.theta.cols(); ++x) {
    os << ",phi_" << x << "_re,phi_" << x << "_im";
  }
  os << '\n';
  for (std::size_t i = 0; i < doc.theta.rows(); ++i) {
    os << i;
    const auto row = doc.theta.row(i);
    csv_cells(os, std::vector<cplx>(row.begin(), row.end()));
  }
  os << "dft_eigenvalue";
  csv_cells(os, doc.dft_eigenvalues);
  os << "torus_eigenvalue";
  csv_cells(os, doc.torus_eigenvalues);
  return os.str();
}

BasisDocument read_basis(std::string_view text, Format format) {
  BasisDocument doc;
  if (format == Format::Json) {
    try {
      const json j = json::parse(text);
      if (j.at("kind") != "basis") throw std::runtime_error("not a basis document");
      const auto& meta = j.at("metadata");
      doc.p = meta.at("p").get<Residue>();
      doc.generator = meta.at("generator").get<Residue>();
      doc.tool_version = meta.at("tool_version").get<std::string>();
      doc.theta = read_matrix_json(j.at("theta"));
      doc.dft_eigenvalues = read_complex_array(j.at("dft_eigenvalues"));
      doc.torus_eigenvalues = read_complex_array(j.at("torus_eigenvalues"));
    } catch (const json::exception& e) {
      throw std::runtime_error(std::string("malformed basis document: ") + e.what());
    }
    return doc;
  }

  std::vector<std::vector<cplx>> rows;
  bool header_seen = false;
  std::size_t cols = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) continue;
      const auto key = line.substr(2, eq - 2);
      const auto val = line.substr(eq + 1);
      if (key == "p") doc.p = static_cast<Residue>(parse_double(val));
      if (key == "generator") doc.generator = static_cast<Residue>(parse_double(val));
      if (key == "tool_version") doc.tool_version = std::string(val);
      continue;
    }
    const auto fields = split(line, ',');
    if (!header_seen) {
      header_seen = true;
      cols = (fields.size() - 1) / 2;
      continue;
    }
    if (fields.front() == "dft_eigenvalue") {
      doc.dft_eigenvalues = read_csv_cells(fields, cols);
    } else if (fields.front() == "torus_eigenvalue") {
      doc.torus_eigenvalues = read_csv_cells(fields, cols);
    } else {
      rows.push_back(read_csv_cells(fields, cols));
    }
  }
  doc.theta = CMatrix(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::copy(rows[i].begin(), rows[i].end(), doc.theta.data() + i * cols);
  }
  return doc;
}

std::string write_reports(const std::vector<VerificationReport>& reports,
                          std::uint64_t seed, Format format) {
  const bool all_pass = std::all_of(reports.begin(), reports.end(),
                                    [](const auto& r) { return r.passed(); });
  if (format == Format::Json) {
    json j;
    j["kind"] = "verify";
    j["metadata"] = {{"tool_version", kToolVersion}, {"seed", seed}};
    j["passed"] = all_pass;
    json arr = json::array();
    for (const auto& r : reports) {
      json checks = json::array();
      for (const auto& c : r.checks) {
        json residual = std::isfinite(c.residual) ? json(c.residual) : json("inf");
        checks.push_back({{"name", c.name},
                          {"residual", residual},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
      }
      arr.push_back({{"p", r.p},
                     {"generator", r.generator},
                     {"seed", r.seed},
                     {"tolerance", r.tolerance},
                     {"random_pairs", r.random_pairs},
                     {"passed", r.passed()},
                     {"checks", checks}});
    }
    j["reports"] = arr;
    return j.dump(1) + "\n";
  }
  std::ostringstream os;
  os << "# kind=verify\n# tool_version=" << kToolVersion << "\n# seed=" << seed
     << "\np,generator,check,residual,tolerance,pass\n";
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      os << r.p << ',' << r.generator << ',' << c.name << ','
         << format_double(c.residual) << ',' << format_double(c.tolerance) << ','
         << (c.pass ? "true" : "false") << '\n';
    }
  }
  return os.str();
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::string write_bench(const std::vector<BenchRow>& rows, std::string_view backend,
                        Format format) {
  if (format == Format::Json) {
    json j;
    j["kind"] = "bench";
    j["metadata"] = {{"tool_version", kToolVersion}, {"kernels", backend}};
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"p", r.p},
                     {"generator", r.generator},
                     {"reps", r.build_basis_seconds.size()},
                     {"build_basis_seconds", r.build_basis_seconds},
                     {"projector_seconds", r.projector_seconds},
                     {"build_basis_median_s", median(r.build_basis_seconds)},
                     {"projector_median_s", median(r.projector_seconds)}});
    }
    j["rows"] = arr;
    return j.dump(1) + "\n";
  }
  std::ostringstream os;
  os << "# kind=bench\n# tool_version=" << kToolVersion << "\n# kernels=" << backend
     << "\np,generator,reps,build_basis_median_s,projector_median_s\n";
  for (const auto& r : rows) {
    os << r.p << ',' << r.generator << ',' << r.build_basis_seconds.size() << ','
       << format_double(median(r.build_basis_seconds)) << ','
       << format_double(median(r.projector_seconds)) << '\n';
  }
  return os.str();
}

}  // namespace dftbasis::io
