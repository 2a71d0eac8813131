#include "matschroed/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "matschroed/errors.hpp"
#include "matschroed/hermite.hpp"

namespace matschroed {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

void require_index(const FamilyContext& ctx, int n) {
  if (n < 0 || n > ctx.n_max) {
    throw RangeError("index " + std::to_string(n) + " outside 0.." + std::to_string(ctx.n_max));
  }
}

Complex i_power(int p) {
  switch (((p % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

int floor_half(int n) { return n / 2; }
int ceil_half(int n) { return (n + 1) / 2; }

double max_pointwise(const MatrixGaussian& f) {
  double m = 0.0;
  for (double x : check_grid()) m = std::max(m, max_abs(f(x)));
  return m;
}

ResidualReport coefficient_report(const MatrixGaussian& residual, const MatrixGaussian& reference, int n,
                                  std::string variant, double tolerance) {
  ResidualReport r;
  r.n = n;
  r.variant = std::move(variant);
  r.tolerance = tolerance;
  const double scale = reference.max_coeff_norm();
  r.max_coeff_norm = residual.max_coeff_norm() / (scale > 0.0 ? scale : 1.0);
  r.max_pointwise = max_pointwise(residual);
  return r;
}

// int f(t) kernel(xt) dt, kernel in {cos, sin, exp(+-i .)}; t = sqrt(2) s.
template <typename Kernel>
CMatrix integrate_against(const MatrixGaussian& f, double x, int order, Kernel kernel) {
  const auto rule = shared_gauss_hermite(order);
  CMatrix acc = CMatrix::Zero(f.size(), f.size());
  const double root2 = std::numbers::sqrt2;
  for (int i = 0; i < rule->order; ++i) {
    const double t = root2 * rule->nodes[i];
    acc += (rule->weights[i] * root2) * kernel(x * t) * f.poly()(t);
  }
  return acc;
}

int checked_order(const MatrixGaussian& f, std::optional<int> order) {
  const int minimum = f.degree() / 2 + 8;
  const int m = order.value_or(default_transform_order(f.degree()));
  if (m < minimum) {
    throw ParameterError("quadrature order " + std::to_string(m) + " below minimum " + std::to_string(minimum));
  }
  return m;
}

CMatrix trig_integral(const MatrixGaussian& f, double x, Trig kind, int order) {
  if (kind == Trig::Cos) {
    return integrate_against(f, x, order, [](double u) { return Complex(std::cos(u), 0.0); });
  }
  return integrate_against(f, x, order, [](double u) { return Complex(std::sin(u), 0.0); });
}

Trig parity_kernel(int n) { return n % 2 == 0 ? Trig::Cos : Trig::Sin; }

}  // namespace

const std::vector<double>& check_grid() {
  static const std::vector<double> grid{-3.0, -1.5, 0.0, 0.8, 2.2};
  return grid;
}

MatrixGaussian apply_schrodinger(const MatrixGaussian& f, const RMatrix& level, int potential_scale) {
  if (level.rows() != f.size()) throw ParameterError("apply_schrodinger: size mismatch");
  const MatrixGaussian second = f.derivative().derivative();
  const MatrixGaussian quadratic(f.poly().shifted(2));
  const CMatrix diag = (static_cast<double>(potential_scale) * level).cast<Complex>();
  return second - quadratic - f.right_mul(diag);
}

MatrixGaussian apply_fourier_type(const MatrixGaussian& f, int k, Direction direction) {
  const int sign = static_cast<int>(direction);
  return fourier_transform(f, direction).right_mul(phase_diag(f.size(), sign * k).matrix());
}

ResidualReport schrodinger_residual(const FamilyContext& ctx, int n, double tolerance) {
  require_index(ctx, n);
  const auto& phi = ctx.phi[n];
  const int c = potential_scale(ctx.kind());
  const RMatrix& level = ctx.structured.level;
  const CMatrix eigen =
      ((2.0 * n + 1.0) * RMatrix::Identity(ctx.size(), ctx.size()) + static_cast<double>(c) * level).cast<Complex>();
  const MatrixGaussian residual = apply_schrodinger(phi, level, c) + phi.left_mul(eigen);
  return coefficient_report(residual, phi, n, "schrodinger", tolerance);
}

int default_transform_order(int degree) { return degree / 2 + 80; }

CMatrix quadrature_transform(const MatrixGaussian& f, int k, double x, std::optional<int> quad_order,
                             Direction direction) {
  const int order = checked_order(f, quad_order);
  const double sign = static_cast<double>(direction);
  const CMatrix integral =
      integrate_against(f, x, order, [sign](double u) { return std::exp(Complex(0.0, sign * u)); });
  return kInvSqrt2Pi * integral * phase_diag(f.size(), static_cast<int>(sign) * k).matrix();
}

ResidualReport fourier_eigen_residual(const FamilyContext& ctx, int n, std::optional<int> eigen_power,
                                      double tolerance) {
  require_index(ctx, n);
  const auto& phi = ctx.phi[n];
  const int k = phase_index(ctx.kind());
  const CMatrix phase = phase_diag(ctx.size(), k).matrix();
  const int p = eigen_power.value_or(n);
  const MatrixGaussian residual = apply_fourier_type(phi, k) - phi.left_mul(i_power(p) * phase);
  return coefficient_report(residual, phi, n, "fourier k=" + std::to_string(k) + " power=" + std::to_string(p),
                            tolerance);
}

ResidualReport symmetry_residual(const FamilyContext& ctx, int n, SymmetryTarget target, double tolerance) {
  require_index(ctx, n);
  const MatrixGaussian f =
      target == SymmetryTarget::Function ? ctx.phi[n] : MatrixGaussian(ctx.polys[n]);
  const double parity = n % 2 == 0 ? 1.0 : -1.0;
  MatrixGaussian mirrored = f.reflected();
  if (ctx.kind() == FamilyKind::Linear) {
    const CMatrix e = phase_diag(ctx.size(), 2).matrix();
    mirrored = mirrored.left_mul(e).right_mul(e);
  }
  const MatrixGaussian residual = f - Complex(parity) * mirrored;
  return coefficient_report(residual, f, n,
                            target == SymmetryTarget::Function ? "symmetry phi" : "symmetry poly", tolerance);
}

std::string MultiplierPair::label() const {
  auto name = [](Trig t) { return t == Trig::Cos ? "cos" : "sin"; };
  std::string s = std::string("left=") + name(left) + ",right=" + name(right);
  s += sign() > 0 ? " (+," : " (-,";
  s += same_parity_kernel() ? " k_n)" : " k_{n+1})";
  return s;
}

std::vector<MultiplierPair> all_multiplier_pairs() {
  return {{Trig::Cos, Trig::Cos}, {Trig::Cos, Trig::Sin}, {Trig::Sin, Trig::Sin}, {Trig::Sin, Trig::Cos}};
}

ResidualReport real_integral_residual(const FamilyContext& ctx, int n, MultiplierPair pair, double tolerance) {
  require_index(ctx, n);
  if (ctx.kind() != FamilyKind::Linear) {
    throw ParameterError("multiplier-pair real equations apply to kind 1 only");
  }
  const int size = ctx.size();
  const auto& phi = ctx.phi[n];
  const int order = default_transform_order(phi.degree());
  const double s = pair.sign();
  const CMatrix e = phase_diag(size, 2).matrix();
  const CMatrix id = CMatrix::Identity(size, size);
  const CMatrix front = trig_diag(size, pair.left).matrix().cast<Complex>();
  const CMatrix back = trig_diag(size, pair.right).matrix().cast<Complex>();

  Trig kernel;
  double prefactor;
  CMatrix closing;
  if (pair.same_parity_kernel()) {
    kernel = parity_kernel(n);
    prefactor = (floor_half(n) % 2 == 0 ? 1.0 : -1.0);
    closing = e + s * id;
  } else {
    kernel = parity_kernel(n + 1);
    prefactor = s * (ceil_half(n) % 2 == 0 ? 1.0 : -1.0);
    closing = e - s * id;
  }

  ResidualReport r;
  r.n = n;
  r.variant = pair.label();
  r.tolerance = tolerance;
  const double scale = std::max(1.0, max_pointwise(phi));
  for (double x : check_grid()) {
    const CMatrix lhs = (e + s * id) * phi(x) * back;
    const CMatrix rhs = (prefactor * kInvSqrt2Pi) * front * trig_integral(phi, x, kernel, order) * closing;
    r.max_pointwise = std::max(r.max_pointwise, max_abs(lhs - rhs));
    r.max_imaginary = std::max({r.max_imaginary, max_abs(lhs.imag()), max_abs(rhs.imag())});
  }
  r.max_coeff_norm = r.max_pointwise / scale;
  return r;
}

ResidualReport real_integral_residual(const FamilyContext& ctx, int n, KernelChoice choice, double tolerance) {
  require_index(ctx, n);
  if (ctx.kind() != FamilyKind::Quadratic) {
    throw ParameterError("parity-kernel real equations apply to kind 2 only");
  }
  const auto& phi = ctx.phi[n];
  const int order = default_transform_order(phi.degree());
  const CMatrix e = phase_diag(ctx.size(), 2).matrix();
  const double prefactor = floor_half(n) % 2 == 0 ? 1.0 : -1.0;

  ResidualReport r;
  r.n = n;
  r.variant = choice == KernelChoice::Matching ? "kernel k_n" : "kernel k_{n+1} vanishes";
  r.tolerance = tolerance;
  const double scale = std::max(1.0, max_pointwise(phi));
  for (double x : check_grid()) {
    CMatrix lhs;
    CMatrix rhs;
    if (choice == KernelChoice::Matching) {
      lhs = e * phi(x);
      rhs = (prefactor * kInvSqrt2Pi) * trig_integral(phi, x, parity_kernel(n), order) * e;
    } else {
      lhs = CMatrix::Zero(ctx.size(), ctx.size());
      rhs = kInvSqrt2Pi * trig_integral(phi, x, parity_kernel(n + 1), order);
    }
    r.max_pointwise = std::max(r.max_pointwise, max_abs(lhs - rhs));
    r.max_imaginary = std::max({r.max_imaginary, max_abs(lhs.imag()), max_abs(rhs.imag())});
  }
  r.max_coeff_norm = r.max_pointwise / scale;
  return r;
}

bool CoverageReport::all_rows() const {
  return std::all_of(rows.begin(), rows.end(), [](bool b) { return b; });
}

bool CoverageReport::all_entries() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& row) { return std::all_of(row.begin(), row.end(), [](bool b) { return b; }); });
}

CoverageReport real_equation_coverage(int size) {
  CoverageReport cov;
  cov.rows.assign(static_cast<std::size_t>(size), false);
  cov.entries.assign(static_cast<std::size_t>(size), std::vector<bool>(static_cast<std::size_t>(size), false));
  const RVector e = phase_diag(size, 2).matrix().diagonal().real();
  for (const auto& pair : all_multiplier_pairs()) {
    const RVector front = trig_diag(size, pair.left).values;
    const RVector back = trig_diag(size, pair.right).values;
    for (int i = 0; i < size; ++i) {
      // a row is constrained when both (E +- I) and the front diagonal keep it
      const bool row = (e(i) + pair.sign()) != 0.0 && front(i) != 0.0;
      if (!row) continue;
      cov.rows[i] = true;
      for (int j = 0; j < size; ++j) {
        if (back(j) != 0.0) cov.entries[i][j] = true;
      }
    }
  }
  return cov;
}

}  // namespace matschroed
