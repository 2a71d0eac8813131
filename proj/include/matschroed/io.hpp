#pragma once

// JSON and text formats: family specs, MatrixGaussian files, expansions, and the
// small parsers behind the command-line flags.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "matschroed/expansion.hpp"
#include "matschroed/families.hpp"
#include "matschroed/matpoly.hpp"

namespace matschroed {

using Json = nlohmann::json;

/// {"kind":1,"N":2,"nu":[1.0]}
Json to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const Json& j);

/// {"N":..., "degree":..., "coeffs":[[[re,im],...],...]}: C_0..C_d, each
/// matrix row-major.
Json to_json(const MatrixGaussian& f);
MatrixGaussian matrix_gaussian_from_json(const Json& j);

/// {"spec":..., "n_max":..., "coeffs":[...]} with the same matrix layout.
Json to_json(const CoefficientExpansion& e);
CoefficientExpansion expansion_from_json(const Json& j);

/// Parses JSON text; errors become ParseError.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Closed grid lo, lo+step, ... up to hi (inclusive within rounding).
struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;

  std::vector<double> points() const;
};

/// "lo:hi:step", step > 0, lo <= hi.
Grid parse_grid(const std::string& text);
/// "1.0,0.5" -> {1.0, 0.5}; the empty string gives an empty list.
std::vector<double> parse_double_list(const std::string& text);
/// "i,j" (1-based) -> 0-based pair.
std::pair<int, int> parse_entry(const std::string& text);

/// Shortest text that reads back to the same double (17 significant digits).
std::string format_double(double v);

}  // namespace matschroed
