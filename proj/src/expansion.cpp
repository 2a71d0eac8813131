#include "matschroed/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>

#include "matschroed/errors.hpp"
#include "matschroed/hermite.hpp"
#include "matschroed/operators.hpp"

namespace matschroed {

namespace {

void require_same_size(int a, int b) {
  if (a != b) {
    throw ParameterError("size mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Exact for integrands of degree <= deg under e^{-x^2}.
int exact_order(int deg) { return deg / 2 + 2; }

int checked_order(std::optional<int> requested, int deg) {
  const int needed = deg / 2 + 1;
  const int m = requested.value_or(exact_order(deg));
  if (m < needed) {
    throw ParameterError("quadrature order " + std::to_string(m) + " cannot integrate degree " +
                         std::to_string(deg));
  }
  return m;
}

// T^{-1} as a polynomial. T(0) = I and T^{-1} is itself a polynomial of the
// same degree, so the power-series recursion terminates exactly.
MatrixPolynomial inverse_right_factor(const MatrixPolynomial& t) {
  const int deg = t.degree();
  const int n = t.size();
  std::vector<CMatrix> u(static_cast<std::size_t>(deg + 1), CMatrix::Zero(n, n));
  u[0] = CMatrix::Identity(n, n);
  for (int k = 1; k <= deg; ++k) {
    CMatrix acc = CMatrix::Zero(n, n);
    for (int j = 1; j <= k; ++j) acc += u[k - j] * t.coeff(j);
    u[k] = -acc;
  }
  return MatrixPolynomial(std::move(u));
}

}  // namespace

CMatrix inner_product(const MatrixGaussian& f, const MatrixGaussian& g, std::optional<int> quad_order) {
  require_same_size(f.size(), g.size());
  const int order = checked_order(quad_order, f.degree() + g.degree());
  const auto rule = shared_gauss_hermite(order);
  CMatrix acc = CMatrix::Zero(f.size(), f.size());
  for (int i = 0; i < rule->order; ++i) {
    const double x = rule->nodes[i];
    acc += rule->weights[i] * f.poly()(x) * g.poly()(x).adjoint();
  }
  return acc;
}

CMatrix inner_product(const MatrixPolynomial& p, const MatrixPolynomial& q, const FamilySpec& spec,
                      std::optional<int> quad_order) {
  spec.validate();
  require_same_size(p.size(), q.size());
  require_same_size(p.size(), spec.size);
  const int order = checked_order(quad_order, p.degree() + q.degree() + 2 * right_factor_degree(spec));
  return weighted_inner(p, q, right_factor(spec), *shared_gauss_hermite(order));
}

Complex scalar_product(const MatrixGaussian& f, const MatrixGaussian& g) { return inner_product(f, g).trace(); }

int span_degree(const MatrixGaussian& f, const FamilyContext& ctx, double tol) {
  require_same_size(f.size(), ctx.size());
  const MatrixPolynomial q = f.poly() * inverse_right_factor(ctx.right);
  const double scale = std::max(q.max_coeff_norm(), std::numeric_limits<double>::min());
  int deg = 0;
  for (int j = q.degree(); j >= 0; --j) {
    if (max_abs(q.coeff(j)) > tol * scale) {
      deg = j;
      break;
    }
  }
  return deg;
}

CoefficientExpansion expand(const MatrixGaussian& f, const FamilyContext& ctx, ExpandMode mode) {
  require_same_size(f.size(), ctx.size());
  if (mode == ExpandMode::Strict) {
    const int deg = span_degree(f, ctx);
    if (deg > ctx.n_max) {
      throw RangeError("function needs basis index " + std::to_string(deg) + " but the family stops at " +
                       std::to_string(ctx.n_max) + "; use projection to truncate");
    }
  }
  CoefficientExpansion e;
  e.spec = ctx.spec;
  e.n_max = ctx.n_max;
  e.coeffs.reserve(static_cast<std::size_t>(ctx.n_max + 1));
  for (int n = 0; n <= ctx.n_max; ++n) e.coeffs.push_back(inner_product(f, ctx.phi_tilde[n]));
  return e;
}

MatrixGaussian reconstruct(const CoefficientExpansion& e, const FamilyContext& ctx) {
  if (e.n_max > ctx.n_max || static_cast<int>(e.coeffs.size()) != e.n_max + 1) {
    throw RangeError("expansion does not fit the family");
  }
  MatrixGaussian out(ctx.size());
  for (int n = 0; n <= e.n_max; ++n) out += ctx.phi_tilde[n].left_mul(e.coeffs[n]);
  return out;
}

MatrixGaussian transform_round_trip(const MatrixGaussian& f, int k) {
  return apply_fourier_type(apply_fourier_type(f, k, Direction::Forward), k, Direction::Inverse);
}

CMatrix matrix_element(const FamilyContext& ctx, int power, int n, int m) {
  if (power < 1 || power > 2) throw ParameterError("power must be 1 or 2");
  if (n < 0 || m < 0 || n > ctx.n_max || m > ctx.n_max) throw RangeError("index outside the family");
  const MatrixGaussian xf(ctx.phi_tilde[n].poly().shifted(power));
  return inner_product(xf, ctx.phi_tilde[m]);
}

std::string BandMatrix::mask_string() const {
  std::string s;
  for (const auto& row : mask) {
    for (bool b : row) s += b ? '*' : '.';
    s += '\n';
  }
  return s;
}

BandMatrix band_pattern(const FamilyContext& ctx, int power, int n_max, double threshold) {
  if (!(threshold > 0.0)) throw ParameterError("threshold must be positive");
  if (n_max < 0 || n_max > ctx.n_max) throw RangeError("band size exceeds the family");
  const int size = ctx.size();
  const int dim = size * (n_max + 1);
  BandMatrix band;
  band.size = size;
  band.n_max = n_max;
  band.power = power;
  band.threshold = threshold;
  band.flat = CMatrix::Zero(dim, dim);
  band.blocks.assign(static_cast<std::size_t>(n_max + 1), std::vector<CMatrix>(static_cast<std::size_t>(n_max + 1)));
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n_max; ++m) {
      band.blocks[n][m] = matrix_element(ctx, power, n, m);
      band.flat.block(size * n, size * m, size, size) = band.blocks[n][m];
    }
  }
  band.mask.assign(static_cast<std::size_t>(dim), std::vector<bool>(static_cast<std::size_t>(dim), false));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) band.mask[r][c] = std::abs(band.flat(r, c)) > threshold;
  }
  return band;
}

void write_csv(const BandMatrix& band, std::ostream& out) {
  const auto dim = band.flat.cols();
  out << std::setprecision(17);
  for (Eigen::Index c = 0; c < dim; ++c) {
    if (c) out << ',';
    out << 'c' << c << "_re,c" << c << "_im";
  }
  out << '\n';
  for (Eigen::Index r = 0; r < band.flat.rows(); ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      if (c) out << ',';
      out << band.flat(r, c).real() << ',' << band.flat(r, c).imag();
    }
    out << '\n';
  }
}

Complex product_density(const FamilyContext& ctx, int n, int i, int j, double x) {
  if (n < 0 || n > ctx.n_max) throw RangeError("index outside the family");
  if (i < 0 || j < 0 || i >= ctx.size() || j >= ctx.size()) throw RangeError("entry outside the matrix");
  const CMatrix v = ctx.phi_tilde[n](x);
  return v.row(j).dot(v.row(i));  // sum_k v(i,k) conj(v(j,k))
}

}  // namespace matschroed
