#include "matschroed/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "matschroed/errors.hpp"

namespace matschroed {

namespace {

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) rows.push_back({m(r, c).real(), m(r, c).imag()});
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j, int size) {
  if (!j.is_array() || static_cast<int>(j.size()) != size * size) {
    throw ParseError("coefficient matrix must list " + std::to_string(size * size) + " [re,im] pairs");
  }
  CMatrix m(size, size);
  for (int k = 0; k < size * size; ++k) {
    const Json& e = j[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ParseError("complex entries must be [re, im] number pairs");
    }
    m(k / size, k % size) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::vector<CMatrix> matrices_from_json(const Json& j, int size) {
  if (!j.is_array() || j.empty()) throw ParseError("\"coeffs\" must be a non-empty array");
  std::vector<CMatrix> out;
  out.reserve(j.size());
  for (const auto& m : j) out.push_back(matrix_from_json(m, size));
  return out;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: \"" + text + "\"");
  }
  if (used != text.size() || !std::isfinite(v)) throw ParseError("not a number: \"" + text + "\"");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

Json to_json(const FamilySpec& spec) { return {{"kind", spec.kind_index()}, {"N", spec.size}, {"nu", spec.nu}}; }

FamilySpec family_spec_from_json(const Json& j) {
  FamilySpec spec;
  try {
    spec.kind = family_kind_from_int(int_field(j, "kind"));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
  spec.size = int_field(j, "N");
  const Json& nu = field(j, "nu");
  if (!nu.is_array()) throw ParseError("\"nu\" must be an array");
  for (const auto& v : nu) {
    if (!v.is_number()) throw ParseError("\"nu\" entries must be numbers");
    spec.nu.push_back(v.get<double>());
  }
  try {
    spec.validate();
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
  return spec;
}

Json to_json(const MatrixGaussian& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(matrix_to_json(c));
  return {{"N", f.size()}, {"degree", f.degree()}, {"coeffs", coeffs}};
}

MatrixGaussian matrix_gaussian_from_json(const Json& j) {
  const int size = int_field(j, "N");
  if (size < 1) throw ParseError("\"N\" must be >= 1");
  auto coeffs = matrices_from_json(field(j, "coeffs"), size);
  if (j.contains("degree")) {
    const int degree = int_field(j, "degree");
    if (degree != static_cast<int>(coeffs.size()) - 1) {
      throw ParseError("\"degree\" does not match the number of coefficients");
    }
  }
  return MatrixGaussian(MatrixPolynomial(std::move(coeffs)));
}

Json to_json(const CoefficientExpansion& e) {
  Json coeffs = Json::array();
  for (const auto& c : e.coeffs) coeffs.push_back(matrix_to_json(c));
  return {{"spec", to_json(e.spec)}, {"n_max", e.n_max}, {"coeffs", coeffs}};
}

CoefficientExpansion expansion_from_json(const Json& j) {
  CoefficientExpansion e;
  e.spec = family_spec_from_json(field(j, "spec"));
  e.n_max = int_field(j, "n_max");
  e.coeffs = matrices_from_json(field(j, "coeffs"), e.spec.size);
  if (static_cast<int>(e.coeffs.size()) != e.n_max + 1) throw ParseError("expected n_max + 1 coefficients");
  return e;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write " + path);
  out << text;
  if (!out) throw ParameterError("write failed for " + path);
}

std::vector<double> Grid::points() const {
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) xs.push_back(lo + static_cast<double>(i) * step);
  return xs;
}

Grid parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ParseError("grid must be lo:hi:step, got \"" + text + "\"");
  Grid g{parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])};
  if (!(g.step > 0.0)) throw ParseError("grid step must be positive");
  if (g.hi < g.lo) throw ParseError("grid needs lo <= hi");
  if ((g.hi - g.lo) / g.step > 1e7) throw ParseError("grid has too many points");
  return g;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  if (text.empty()) return out;
  for (const auto& p : split(text, ',')) out.push_back(parse_double(p));
  return out;
}

std::pair<int, int> parse_entry(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ParseError("entry must be i,j");
  int ij[2];
  for (int k = 0; k < 2; ++k) {
    std::size_t used = 0;
    try {
      ij[k] = std::stoi(parts[static_cast<std::size_t>(k)], &used);
    } catch (const std::exception&) {
      throw ParseError("entry indices must be integers");
    }
    if (used != parts[static_cast<std::size_t>(k)].size() || ij[k] < 1) {
      throw ParseError("entry indices must be integers >= 1");
    }
  }
  return {ij[0] - 1, ij[1] - 1};
}

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

}  // namespace matschroed
