// matschroed: command-line front end for the matrix-valued Hermite families.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "matschroed/checks.hpp"
#include "matschroed/errors.hpp"
#include "matschroed/expansion.hpp"
#include "matschroed/io.hpp"
#include "matschroed/operators.hpp"

using namespace matschroed;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct FamilyFlags {
  int kind = 1;
  int size = 2;
  std::string nu = "1.0";
  std::string spec;  // inline JSON or a path; wins over the other three
  int n_max = 8;
  std::optional<int> quad_order;

  void attach(CLI::App* cmd) {
    cmd->add_option("--kind", kind, "Family kind (1 or 2)");
    cmd->add_option("--N", size, "Matrix size");
    cmd->add_option("--nu", nu, "Comma-separated nu_1..nu_{N-1}");
    cmd->add_option("--spec", spec, "Family spec as JSON text or a JSON file");
    cmd->add_option("--nmax", n_max, "Largest degree n");
    cmd->add_option("--quad-order", quad_order, "Gauss-Hermite order (default automatic)");
  }

  FamilySpec resolve() const {
    if (!spec.empty()) {
      const auto first = spec.find_first_not_of(" \t\n");
      const bool inline_json = first != std::string::npos && spec[first] == '{';
      return family_spec_from_json(inline_json ? parse_json_text(spec) : read_json_file(spec));
    }
    FamilySpec s;
    s.kind = family_kind_from_int(kind);
    s.size = size;
    s.nu = parse_double_list(nu);
    if (size == 1 && nu == "1.0") s.nu.clear();
    s.validate();
    return s;
  }

  int checked_n_max() const {
    if (n_max < 0) throw ParameterError("--nmax must be >= 0");
    return n_max;
  }
};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

int run_check(const FamilyFlags& fam, std::optional<double> tol) {
  CheckConfig config;
  config.spec = fam.resolve();
  config.n_max = fam.checked_n_max();
  config.quad_order = fam.quad_order;
  config.tolerance = tol;
  config.seed = seed_from_env();
  const auto results = run_checks(config);
  std::cout << format_results(results);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  std::cout << (ok ? "all checks passed" : "some checks failed") << '\n';
  return ok ? kExitPass : kExitFail;
}

int run_density(const FamilyFlags& fam, const std::string& grid_text, const std::string& entry_text,
                const std::string& out) {
  const FamilySpec spec = fam.resolve();
  const Grid grid = parse_grid(grid_text);
  const auto [i, j] = parse_entry(entry_text);
  if (i >= spec.size || j >= spec.size) throw ParameterError("--entry outside the " + std::to_string(spec.size) + "x" +
                                                             std::to_string(spec.size) + " matrix");
  const FamilyContext ctx = build_family(spec, fam.checked_n_max(), fam.quad_order);
  std::ostringstream csv;
  csv << 'x';
  for (int n = 0; n <= ctx.n_max; ++n) csv << ",n" << n;
  csv << '\n';
  for (double x : grid.points()) {
    csv << format_double(x);
    for (int n = 0; n <= ctx.n_max; ++n) csv << ',' << format_double(product_density(ctx, n, i, j, x).real());
    csv << '\n';
  }
  emit(out, csv.str());
  return kExitPass;
}

std::string sample_csv(const MatrixGaussian& f, const Grid& grid) {
  std::ostringstream csv;
  csv << 'x';
  for (int i = 1; i <= f.size(); ++i) {
    for (int j = 1; j <= f.size(); ++j) csv << ",e" << i << '_' << j << "_re,e" << i << '_' << j << "_im";
  }
  csv << '\n';
  for (double x : grid.points()) {
    const CMatrix v = f(x);
    csv << format_double(x);
    for (int i = 0; i < f.size(); ++i) {
      for (int j = 0; j < f.size(); ++j) csv << ',' << format_double(v(i, j).real()) << ',' << format_double(v(i, j).imag());
    }
    csv << '\n';
  }
  return csv.str();
}

int run_transform(const std::string& in, int k, int direction, bool verify, const std::string& out,
                  const std::string& csv_path, const std::string& grid_text) {
  if (direction != 1 && direction != -1) throw ParameterError("--direction must be 1 or -1");
  const MatrixGaussian f = matrix_gaussian_from_json(read_json_file(in));
  const Direction dir = direction == 1 ? Direction::Forward : Direction::Inverse;
  const MatrixGaussian g = apply_fourier_type(f, k, dir);
  emit(out, to_json(g).dump() + "\n");
  if (!csv_path.empty()) write_text_file(csv_path, sample_csv(g, parse_grid(grid_text)));
  if (!verify) return kExitPass;
  double worst = 0.0;
  for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    worst = std::max(worst, max_abs(CMatrix(quadrature_transform(f, k, x, std::nullopt, dir) - g(x))));
  }
  std::cerr << "quadrature oracle max deviation: " << format_double(worst) << '\n';
  return worst < 1e-8 ? kExitPass : kExitFail;
}

int run_expand(const FamilyFlags& fam, const std::string& in, bool project, bool verify, const std::string& out) {
  const FamilyContext ctx = build_family(fam.resolve(), fam.checked_n_max(), fam.quad_order);
  const MatrixGaussian f = matrix_gaussian_from_json(read_json_file(in));
  const auto e = expand(f, ctx, project ? ExpandMode::Project : ExpandMode::Strict);
  emit(out, to_json(e).dump() + "\n");
  if (!verify) return kExitPass;
  const double dev = (reconstruct(e, ctx) - f).max_coeff_norm() / std::max(1.0, f.max_coeff_norm());
  std::cerr << "reconstruction relative deviation: " << format_double(dev) << '\n';
  return dev < 1e-9 ? kExitPass : kExitFail;
}

int run_matrix_elements(const FamilyFlags& fam, int power, double threshold, const std::string& out) {
  if (power != 1 && power != 2) throw ParameterError("--power must be 1 or 2");
  const FamilyContext ctx = build_family(fam.resolve(), fam.checked_n_max(), fam.quad_order);
  const BandMatrix band = band_pattern(ctx, power, ctx.n_max, threshold);
  std::cout << band.mask_string();
  if (!out.empty()) {
    std::ostringstream csv;
    write_csv(band, csv);
    write_text_file(out, csv.str());
  }
  return kExitPass;
}

int run_export(const FamilyFlags& fam, int n, bool raw, const std::string& out) {
  if (n < 0) throw ParameterError("--n must be >= 0");
  const FamilyContext ctx = build_family(fam.resolve(), std::max(fam.checked_n_max(), n), fam.quad_order);
  emit(out, to_json(raw ? ctx.phi[n] : ctx.phi_tilde[n]).dump() + "\n");
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-valued Hermite functions: identity checks, densities, transforms, expansions"};
  app.require_subcommand(1);

  FamilyFlags fam;
  std::optional<double> tol;
  std::string grid = "-4:4:0.05";
  std::string entry = "1,1";
  std::string out;
  std::string in;
  std::string csv;
  int k = 0;
  int direction = 1;
  int power = 1;
  int index = 0;
  double threshold = 1e-10;
  bool verify = false;
  bool project = false;
  bool raw = false;

  auto* check = app.add_subcommand("check", "Run every identity suite; exit 0 iff all pass");
  fam.attach(check);
  check->add_option("--tol", tol, "Replace every suite tolerance");

  auto* density = app.add_subcommand("density", "CSV of entry (i,j) of Phi~_n Phi~_n^* for n = 0..nmax");
  fam.attach(density);
  density->add_option("--grid", grid, "lo:hi:step");
  density->add_option("--entry", entry, "1-based i,j");
  density->add_option("--out", out, "Output path (default stdout)");

  auto* transform = app.add_subcommand("transform", "Exact Fourier-type transform of a MatrixGaussian file");
  transform->add_option("--in", in, "Input MatrixGaussian JSON")->required();
  transform->add_option("--k", k, "Phase index k");
  transform->add_option("--direction", direction, "1 forward, -1 inverse");
  transform->add_option("--out", out, "Output path (default stdout)");
  transform->add_option("--csv", csv, "Also write samples of the result as CSV");
  transform->add_option("--grid", grid, "Sample grid for --csv");
  transform->add_flag("--verify", verify, "Compare with the quadrature oracle at 5 points");

  auto* expand_cmd = app.add_subcommand("expand", "Coefficients of a MatrixGaussian in the normalized family");
  fam.attach(expand_cmd);
  expand_cmd->add_option("--in", in, "Input MatrixGaussian JSON")->required();
  expand_cmd->add_option("--out", out, "Output path (default stdout)");
  expand_cmd->add_flag("--project", project, "Project instead of rejecting inputs outside the span");
  expand_cmd->add_flag("--verify", verify, "Reconstruct and report the deviation");

  auto* elements = app.add_subcommand("matrix-elements", "Band pattern of multiplication by x^power");
  fam.attach(elements);
  elements->add_option("--power", power, "1 or 2");
  elements->add_option("--threshold", threshold, "Zero threshold for the mask");
  elements->add_option("--out", out, "CSV path for the flattened matrix");

  auto* exporter = app.add_subcommand("export", "Write Phi~_n (or Phi_n with --raw) as MatrixGaussian JSON");
  fam.attach(exporter);
  exporter->add_option("--n", index, "Index n");
  exporter->add_flag("--raw", raw, "Unnormalized Phi_n");
  exporter->add_option("--out", out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return run_check(fam, tol);
    if (*density) return run_density(fam, grid, entry, out);
    if (*transform) return run_transform(in, k, direction, verify, out, csv, grid);
    if (*expand_cmd) return run_expand(fam, in, project, verify, out);
    if (*elements) return run_matrix_elements(fam, power, threshold, out);
    if (*exporter) return run_export(fam, index, raw, out);
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
