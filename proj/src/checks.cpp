#include "matschroed/checks.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>

#include "matschroed/expansion.hpp"
#include "matschroed/io.hpp"
#include "matschroed/operators.hpp"

namespace matschroed {

namespace {

class Suite {
 public:
  explicit Suite(const CheckConfig& config) : override_(config.tolerance) {}

  void add(std::string name, double value, double tolerance, std::string detail = {}) {
    results_.push_back({std::move(name), value, override_.value_or(tolerance), std::move(detail)});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::optional<double> override_;
  std::vector<CheckResult> results_;
};

struct Worst {
  double value = 0.0;
  std::string where;

  void offer(double v, const std::string& label) {
    if (where.empty() || v > value) {
      value = v;
      where = label;
    }
  }
};

std::string at_n(int n) { return "n=" + std::to_string(n); }

double relative(const MatrixGaussian& diff, const MatrixGaussian& ref) {
  return diff.max_coeff_norm() / std::max(1.0, ref.max_coeff_norm());
}

void orthonormality(const FamilyContext& ctx, Suite& s) {
  Worst w;
  const int size = ctx.size();
  for (int n = 0; n <= ctx.n_max; ++n) {
    for (int m = 0; m <= ctx.n_max; ++m) {
      CMatrix g = inner_product(ctx.phi_tilde[n], ctx.phi_tilde[m]);
      if (n == m) g -= CMatrix::Identity(size, size);
      w.offer(max_abs(g), "n=" + std::to_string(n) + ",m=" + std::to_string(m));
    }
  }
  s.add("orthonormality", w.value, 1e-9, w.where);
}

void report_max(Suite& s, const std::string& name, int n_max, double tol,
                const std::function<ResidualReport(int)>& f) {
  Worst w;
  for (int n = 0; n <= n_max; ++n) w.offer(f(n).max_coeff_norm, at_n(n));
  s.add(name, w.value, tol, w.where);
}

void quadrature_oracle(const FamilyContext& ctx, Suite& s) {
  const int k = phase_index(ctx.kind());
  const std::vector<double> xs{-5.0, -2.5, 0.0, 1.7, 5.0};
  Worst w;
  for (int n = 0; n <= ctx.n_max; ++n) {
    const auto& phi = ctx.phi_tilde[n];
    const MatrixGaussian exact = apply_fourier_type(phi, k);
    for (double x : xs) w.offer(max_abs(quadrature_transform(phi, k, x) - exact(x)), at_n(n));
  }
  s.add("fourier quadrature oracle", w.value, 1e-8, w.where);
}

void real_equations(const FamilyContext& ctx, Suite& s) {
  Worst res;
  Worst imag;
  for (int n = 0; n <= ctx.n_max; ++n) {
    std::vector<ResidualReport> reports;
    if (ctx.kind() == FamilyKind::Linear) {
      for (const auto& pair : all_multiplier_pairs()) reports.push_back(real_integral_residual(ctx, n, pair));
    } else {
      reports.push_back(real_integral_residual(ctx, n, KernelChoice::Matching));
      reports.push_back(real_integral_residual(ctx, n, KernelChoice::Complementary));
    }
    for (const auto& r : reports) {
      res.offer(r.max_coeff_norm, at_n(n) + " " + r.variant);
      imag.offer(r.max_imaginary, at_n(n) + " " + r.variant);
    }
  }
  s.add("real integral equations", res.value, 1e-8, res.where);
  s.add("real integral imaginary parts", imag.value, 1e-10, imag.where);
  if (ctx.kind() == FamilyKind::Linear) {
    const auto cov = real_equation_coverage(ctx.size());
    s.add("real equation row coverage", cov.all_rows() && cov.all_entries() ? 0.0 : 1.0, 0.5,
          "rows and entries constrained by some multiplier pair");
  }
}

void norms(const FamilyContext& ctx, Suite& s) {
  Worst diag;
  for (int n = 0; n <= ctx.n_max; ++n) {
    const CMatrix g = weighted_inner(ctx.polys[n], ctx.polys[n], ctx.right, *ctx.rule);
    const CMatrix off = g - CMatrix(g.diagonal().asDiagonal());
    diag.offer(max_abs(off) / max_abs(g), at_n(n));
  }
  s.add("norm diagonality", diag.value, 1e-8, diag.where);
  if (ctx.size() != 2) return;

  Worst norm;
  Worst phi;
  Worst poly;
  const std::vector<double> xs{-2.0, -0.7, 0.0, 0.4, 1.0, 2.5};
  for (int n = 0; n <= std::min(ctx.n_max, 8); ++n) {
    const RVector expected = closed_form_norm_N2(ctx.spec, n).diagonal();
    norm.offer((expected - ctx.norm_squared[n]).cwiseQuotient(expected).cwiseAbs().maxCoeff(), at_n(n));
    const MatrixGaussian cf = closed_form_N2(ctx.spec, n);
    const MatrixPolynomial cp = closed_form_poly_N2(ctx.spec, n);
    for (double x : xs) {
      phi.offer(max_abs(cf(x) - ctx.phi_tilde[n](x)), at_n(n));
      poly.offer(max_abs(cp(x) - ctx.polys[n](x)) / std::max(1.0, max_abs(cp(x))), at_n(n));
    }
  }
  s.add("closed-form norms", norm.value, 1e-10, norm.where);
  s.add("closed-form normalized functions", phi.value, 1e-10, phi.where);
  s.add("closed-form polynomials", poly.value, 1e-10, poly.where);
}

void matrix_elements(const FamilyContext& ctx, Suite& s) {
  Worst herm;
  Worst band;
  Worst closed;
  for (int power : {1, 2}) {
    const BandMatrix b = band_pattern(ctx, power, ctx.n_max);
    herm.offer(max_abs(CMatrix(b.flat - b.flat.adjoint())), "power=" + std::to_string(power));
    for (int n = 0; n <= ctx.n_max; ++n) {
      for (int m = 0; m <= ctx.n_max; ++m) {
        const std::string where = "power=" + std::to_string(power) + " n=" + std::to_string(n) +
                                  ",m=" + std::to_string(m);
        if (std::abs(n - m) > power) band.offer(max_abs(b.blocks[n][m]), where);
        if (ctx.size() == 2 && n <= 8 && m <= 8) {
          const CMatrix expected = closed_form_matrix_element_N2(ctx.spec, power, n, m).cast<Complex>();
          closed.offer(max_abs(CMatrix(b.blocks[n][m] - expected)), where);
        }
      }
    }
  }
  s.add("matrix element hermiticity", herm.value, 1e-10, herm.where);
  s.add("band width", band.value, 1e-10, band.where);
  if (ctx.size() == 2) s.add("closed-form matrix elements", closed.value, 1e-9, closed.where);
}

void densities(const FamilyContext& ctx, Suite& s) {
  Worst w;
  for (int n = 0; n <= ctx.n_max; ++n) {
    const CMatrix g = inner_product(ctx.phi_tilde[n], ctx.phi_tilde[n]);
    for (int i = 0; i < ctx.size(); ++i) w.offer(std::abs(g(i, i) - 1.0), at_n(n));
  }
  s.add("density normalization", w.value, 1e-9, w.where);
}

void expansions(const FamilyContext& ctx, std::uint64_t seed, Suite& s) {
  std::mt19937_64 rng(seed);
  const int k = phase_index(ctx.kind());
  const int c = potential_scale(ctx.kind());
  Worst rec;
  Worst trip;
  Worst comm;
  for (int draw = 0; draw < 5; ++draw) {
    const std::string label = "draw " + std::to_string(draw);
    const MatrixGaussian f = random_span_element(ctx, ctx.n_max, rng);
    rec.offer(relative(reconstruct(expand(f, ctx), ctx) - f, f), label);
    trip.offer(relative(transform_round_trip(f, k) - f, f), label);
    const MatrixGaussian a = apply_fourier_type(apply_schrodinger(f, ctx.structured.level, c), k);
    const MatrixGaussian b = apply_schrodinger(apply_fourier_type(f, k), ctx.structured.level, c);
    comm.offer(relative(a - b, a), label);
  }
  s.add("expand/reconstruct", rec.value, 1e-9, rec.where);
  s.add("transform round trip", trip.value, 1e-9, trip.where);
  s.add("transform/schrodinger commutation", comm.value, 1e-9, comm.where);
}

}  // namespace

std::uint64_t seed_from_env() {
  const char* v = std::getenv("MATSCHROED_SEED");
  if (v == nullptr || *v == '\0') return 42;
  try {
    std::size_t used = 0;
    const auto seed = std::stoull(v, &used);
    return used == std::string(v).size() ? seed : 42;
  } catch (const std::exception&) {
    return 42;
  }
}

MatrixGaussian random_span_element(const FamilyContext& ctx, int top, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int size = ctx.size();
  MatrixGaussian f(size);
  for (int n = 0; n <= std::min(top, ctx.n_max); ++n) {
    CMatrix c(size, size);
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        const double re = u(rng);
        c(i, j) = Complex(re, u(rng));
      }
    }
    f += ctx.phi_tilde[n].left_mul(c);
  }
  return f;
}

std::vector<CheckResult> run_checks(const CheckConfig& config) {
  const FamilyContext ctx = build_family(config.spec, config.n_max, config.quad_order);
  Suite s(config);
  orthonormality(ctx, s);
  report_max(s, "schrodinger", ctx.n_max, kDefaultResidualTolerance,
             [&](int n) { return schrodinger_residual(ctx, n); });
  report_max(s, "fourier eigen-equation", ctx.n_max, kDefaultResidualTolerance,
             [&](int n) { return fourier_eigen_residual(ctx, n); });
  quadrature_oracle(ctx, s);
  report_max(s, "symmetry (functions)", ctx.n_max, 1e-12,
             [&](int n) { return symmetry_residual(ctx, n, SymmetryTarget::Function); });
  report_max(s, "symmetry (polynomials)", ctx.n_max, 1e-12,
             [&](int n) { return symmetry_residual(ctx, n, SymmetryTarget::Polynomial); });
  real_equations(ctx, s);
  norms(ctx, s);
  matrix_elements(ctx, s);
  densities(ctx, s);
  expansions(ctx, config.seed, s);
  return s.take();
}

std::string format_results(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << std::scientific << std::setprecision(3)
        << r.value << " (tol " << r.tolerance << ")";
    if (!r.detail.empty()) out << " [" << r.detail << "]";
    out << '\n';
  }
  return out.str();
}

}  // namespace matschroed
