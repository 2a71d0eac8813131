#include "matschroed/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "matschroed/errors.hpp"

namespace matschroed {

namespace {

constexpr double kNormConsistencyGate = 1e-8;

CMatrix shift_matrix(const FamilySpec& spec) {
  return build_structured(spec.size, spec.nu).shift.cast<Complex>();
}

// B = A (I + A)^{-1}
CMatrix quadratic_generator(const CMatrix& a) {
  const auto inverse = nilpotent_series(binomial_taylor(static_cast<int>(a.rows()), -1.0), a);
  return a * inverse;
}

// sum_j taylor[j] M^j x^{j * stride} / j!
MatrixPolynomial series_in_x(const std::vector<Complex>& taylor, const CMatrix& m, int stride) {
  const auto n = m.rows();
  std::vector<CMatrix> coeffs(static_cast<std::size_t>(stride * (n - 1)) + 1, CMatrix::Zero(n, n));
  CMatrix power = CMatrix::Identity(n, n);
  double factorial = 1.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j > 0) factorial *= static_cast<double>(j);
    coeffs[static_cast<std::size_t>(j * stride)] = (taylor[j] / factorial) * power;
    power = power * m;
  }
  return MatrixPolynomial(std::move(coeffs));
}

MatrixPolynomial from_entries(const ScalarPoly& a, const ScalarPoly& b, const ScalarPoly& c,
                              const ScalarPoly& d) {
  const int deg = std::max({a.degree(), b.degree(), c.degree(), d.degree()});
  std::vector<CMatrix> coeffs(static_cast<std::size_t>(deg) + 1, CMatrix::Zero(2, 2));
  for (int j = 0; j <= deg; ++j) {
    coeffs[j](0, 0) = a[j];
    coeffs[j](0, 1) = b[j];
    coeffs[j](1, 0) = c[j];
    coeffs[j](1, 1) = d[j];
  }
  return MatrixPolynomial(std::move(coeffs));
}

ScalarPoly scaled(const ScalarPoly& p, double s) {
  auto c = p.coeffs();
  for (auto& v : c) v *= s;
  return ScalarPoly(std::move(c));
}

ScalarPoly times_x(const ScalarPoly& p, int k) {
  std::vector<double> c(static_cast<std::size_t>(k), 0.0);
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return ScalarPoly(std::move(c));
}

ScalarPoly add(const ScalarPoly& a, const ScalarPoly& b) {
  std::vector<double> c(static_cast<std::size_t>(std::max(a.degree(), b.degree())) + 1, 0.0);
  for (int j = 0; j <= a.degree(); ++j) c[j] += a[j];
  for (int j = 0; j <= b.degree(); ++j) c[j] += b[j];
  return ScalarPoly(std::move(c));
}

ScalarPoly hermite_or_zero(int n) { return n < 0 ? ScalarPoly{} : hermite_physicists(n); }
ScalarPoly wave_or_zero(int n) { return n < 0 ? ScalarPoly{} : wave_polynomial(n); }

void require_n2(const FamilySpec& spec, const char* what) {
  spec.validate();
  if (spec.size != 2) throw ParameterError(std::string(what) + ": closed forms exist only for N = 2");
}

}  // namespace

void FamilySpec::validate() const {
  if (kind != FamilyKind::Linear && kind != FamilyKind::Quadratic) {
    throw ParameterError("family kind must be 1 or 2");
  }
  if (size < 1) throw ParameterError("family size N must be >= 1");
  if (static_cast<int>(nu.size()) != size - 1) {
    throw ParameterError("family with N = " + std::to_string(size) + " needs " +
                         std::to_string(size - 1) + " nu values, got " + std::to_string(nu.size()));
  }
  for (double v : nu) {
    if (!std::isfinite(v)) throw ParameterError("nu values must be finite");
  }
}

FamilyKind family_kind_from_int(int kind) {
  if (kind == 1) return FamilyKind::Linear;
  if (kind == 2) return FamilyKind::Quadratic;
  throw ParameterError("family kind must be 1 or 2, got " + std::to_string(kind));
}

int potential_scale(FamilyKind kind) { return kind == FamilyKind::Linear ? 2 : 4; }
int phase_index(FamilyKind kind) { return kind == FamilyKind::Linear ? 1 : 2; }

MatrixPolynomial right_factor(const FamilySpec& spec) {
  spec.validate();
  const CMatrix a = shift_matrix(spec);
  const auto taylor = exp_taylor(spec.size);
  if (spec.kind == FamilyKind::Linear) return series_in_x(taylor, a, 1);
  return series_in_x(taylor, quadratic_generator(a), 2);
}

int right_factor_degree(const FamilySpec& spec) {
  return spec.kind == FamilyKind::Linear ? spec.size - 1 : 2 * (spec.size - 1);
}

RMatrix weight_eval(const FamilySpec& spec, double x) {
  const CMatrix t = right_factor(spec)(x);
  return std::exp(-x * x) * (t * t.adjoint()).real();
}

CMatrix normalizer(const FamilySpec& spec, int n) {
  spec.validate();
  if (n < 0) throw ParameterError("normalizer: n must be >= 0");
  const CMatrix a = shift_matrix(spec);
  const int size = spec.size;
  if (spec.kind == FamilyKind::Linear) {
    return nilpotent_series(exp_taylor(size, -1.0), a * a / 4.0);
  }
  const CMatrix root = nilpotent_series(binomial_taylor(size, -0.5), a);
  CMatrix out = CMatrix::Identity(size, size);
  for (int j = 0; j < 2 * n + 1; ++j) out = out * root;
  return out;
}

int required_quad_order(const FamilySpec& spec, int n_max) {
  // integrands have degree 2 n_max + 2 deg T; m points are exact to 2m - 1
  return n_max + right_factor_degree(spec) + 1;
}

int auto_quad_order(const FamilySpec& spec, int n_max) { return required_quad_order(spec, n_max) + 8; }

CMatrix weighted_inner(const MatrixPolynomial& p, const MatrixPolynomial& q,
                       const MatrixPolynomial& right, const QuadratureRule& rule) {
  if (p.size() != q.size() || p.size() != right.size()) {
    throw ParameterError("weighted_inner: matrix size mismatch");
  }
  CMatrix acc = CMatrix::Zero(p.size(), p.size());
  for (int i = 0; i < rule.order; ++i) {
    const double x = rule.nodes[i];
    const CMatrix t = right(x);
    acc += rule.weights[i] * (p(x) * t) * (q(x) * t).adjoint();
  }
  return acc;
}

FamilyContext build_family(const FamilySpec& spec, int n_max, std::optional<int> quad_order) {
  spec.validate();
  if (n_max < 0) throw ParameterError("n_max must be >= 0");
  const int required = required_quad_order(spec, n_max);
  const int order = quad_order.value_or(auto_quad_order(spec, n_max));
  if (order < required) {
    throw ParameterError("quadrature order " + std::to_string(order) + " below the exactness requirement " +
                         std::to_string(required));
  }

  FamilyContext ctx;
  ctx.spec = spec;
  ctx.structured = build_structured(spec.size, spec.nu);
  ctx.right_factor_taylor = exp_taylor(spec.size);
  ctx.right = right_factor(spec);
  ctx.n_max = n_max;
  ctx.rule = shared_gauss_hermite(order);

  const int size = spec.size;
  const auto& rule = *ctx.rule;
  std::vector<CMatrix> gram;  // <Phat_k, Phat_k>_W
  for (int n = 0; n <= n_max; ++n) {
    MatrixPolynomial p = n == 0 ? MatrixPolynomial::monomial(size, 0) : ctx.monic.back().shifted(1);
    // classical Gram-Schmidt, run twice
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < n; ++k) {
        const CMatrix proj = weighted_inner(p, ctx.monic[k], ctx.right, rule) * gram[k].inverse();
        p -= ctx.monic[k].left_mul(proj);
      }
    }
    gram.push_back(weighted_inner(p, p, ctx.right, rule));
    ctx.monic.push_back(std::move(p));

    const CMatrix l = normalizer(spec, n);
    ctx.normalizers.push_back(l);
    ctx.polys.push_back(ctx.monic.back().left_mul(l));

    const CMatrix norm = l * gram.back() * l.adjoint();
    const RVector diag = norm.diagonal().real();
    const double scale = diag.cwiseAbs().maxCoeff();
    const CMatrix off = norm - CMatrix(norm.diagonal().asDiagonal());
    if (max_abs(off) > kNormConsistencyGate * scale) {
      throw ConsistencyError("norm of P_" + std::to_string(n) + " is not diagonal (relative off-diagonal " +
                             std::to_string(max_abs(off) / scale) + ")");
    }
    if (diag.minCoeff() <= 0.0) {
      throw ConsistencyError("norm of P_" + std::to_string(n) + " has a non-positive diagonal entry");
    }
    ctx.norm_squared.push_back(diag);

    MatrixGaussian phi(ctx.polys.back() * ctx.right);
    const RVector inv_sqrt = diag.cwiseSqrt().cwiseInverse();
    ctx.phi_tilde.push_back(phi.left_mul(inv_sqrt.cast<Complex>().asDiagonal()));
    ctx.phi.push_back(std::move(phi));
  }
  return ctx;
}

// ---------------------------------------------------------------------------

GammaSeq gamma_seq(const FamilySpec& spec, int n_max) {
  require_n2(spec, "gamma_seq");
  if (n_max < 0) throw ParameterError("gamma_seq: n_max must be >= 0");
  const double nu2 = spec.nu[0] * spec.nu[0];
  GammaSeq out;
  for (int n = 0; n <= n_max; ++n) {
    const double dn = n;
    out.values.push_back(spec.kind == FamilyKind::Linear ? 1.0 + 0.5 * dn * nu2
                                                         : 1.0 + 0.5 * nu2 * (dn * (dn - 1.0) / 2.0));
  }
  return out;
}

MatrixPolynomial closed_form_poly_N2(const FamilySpec& spec, int n) {
  require_n2(spec, "closed_form_poly_N2");
  if (n < 0) throw ParameterError("closed_form_poly_N2: n must be >= 0");
  const double nu = spec.nu[0];
  const double g = gamma_seq(spec, n)[n];
  const double dn = n;
  const auto hn = hermite_physicists(n);
  MatrixPolynomial p(2);
  if (spec.kind == FamilyKind::Linear) {
    const auto hm1 = hermite_or_zero(n - 1);
    p = from_entries(hn, scaled(hm1, -dn * nu), scaled(hm1, -dn * nu / g),
                     scaled(add(hn, scaled(times_x(hm1, 1), dn * nu * nu)), 1.0 / g));
  } else {
    const auto hm2 = hermite_or_zero(n - 2);
    const double pairs = dn * (dn - 1.0);
    p = from_entries(hn, scaled(add(scaled(hn, dn + 0.5), scaled(hm2, pairs)), -nu),
                     scaled(hm2, -pairs * nu / g),
                     add(scaled(hn, 1.0 / g), scaled(times_x(hm2, 2), pairs * nu * nu / g)));
  }
  return std::ldexp(1.0, -n) * p;
}

MatrixGaussian closed_form_N2(const FamilySpec& spec, int n) {
  require_n2(spec, "closed_form_N2");
  if (n < 0) throw ParameterError("closed_form_N2: n must be >= 0");
  const double nu = spec.nu[0];
  const auto gamma = gamma_seq(spec, n + 2);
  const double dn = n;
  const auto psi = wave_polynomial(n);
  if (spec.kind == FamilyKind::Linear) {
    const double up = gamma[n + 1];
    const double here = gamma[n];
    return MatrixGaussian(from_entries(scaled(psi, 1.0 / std::sqrt(up)),
                                       scaled(wave_polynomial(n + 1), nu * std::sqrt((dn + 1.0) / (2.0 * up))),
                                       scaled(wave_or_zero(n - 1), -nu * std::sqrt(dn / (2.0 * here))),
                                       scaled(psi, 1.0 / std::sqrt(here))));
  }
  const double up = gamma[n + 2];
  const double here = gamma[n];
  return MatrixGaussian(
      from_entries(scaled(psi, 1.0 / std::sqrt(up)),
                   scaled(wave_polynomial(n + 2), 0.5 * nu * std::sqrt((dn + 1.0) * (dn + 2.0) / up)),
                   scaled(wave_or_zero(n - 2), -0.5 * nu * std::sqrt(dn * (dn - 1.0) / here)),
                   scaled(psi, 1.0 / std::sqrt(here))));
}

RMatrix closed_form_norm_N2(const FamilySpec& spec, int n) {
  require_n2(spec, "closed_form_norm_N2");
  if (n < 0) throw ParameterError("closed_form_norm_N2: n must be >= 0");
  const auto gamma = gamma_seq(spec, n + 2);
  double prefactor = std::sqrt(std::numbers::pi);
  for (int j = 1; j <= n; ++j) prefactor *= 0.5 * j;
  const int lift = spec.kind == FamilyKind::Linear ? 1 : 2;
  RMatrix out = RMatrix::Zero(2, 2);
  out(0, 0) = prefactor * gamma[n + lift];
  out(1, 1) = prefactor / gamma[n];
  return out;
}

RMatrix closed_form_matrix_element_N2(const FamilySpec& spec, int power, int n, int m) {
  require_n2(spec, "closed_form_matrix_element_N2");
  if (power != 1 && power != 2) throw ParameterError("matrix element power must be 1 or 2");
  if (n < 0 || m < 0) throw ParameterError("matrix element indices must be >= 0");
  const double nu = spec.nu[0];
  const auto gs = gamma_seq(spec, n + 4);
  auto g = [&](int j) { return j < 0 ? 1.0 : gs[j]; };  // only ever multiplied by a zero factor
  const double dn = n;
  using std::sqrt;
  RMatrix out = RMatrix::Zero(2, 2);
  const int offset = m - n;

  if (spec.kind == FamilyKind::Linear) {
    if (power == 1) {
      if (offset == -1) {
        out(0, 0) = sqrt(dn * g(n + 1) / (2.0 * g(n)));
        out(1, 1) = sqrt(dn * g(n - 1) / (2.0 * g(n)));
      } else if (offset == 0) {
        out(0, 1) = out(1, 0) = nu / (2.0 * sqrt(g(n) * g(n + 1)));
      } else if (offset == 1) {
        out(0, 0) = sqrt((dn + 1.0) * g(n + 2) / (2.0 * g(n + 1)));
        out(1, 1) = sqrt((dn + 1.0) * g(n) / (2.0 * g(n + 1)));
      }
      return out;
    }
    if (offset == -2) {
      out(0, 0) = 0.5 * sqrt(dn * (dn - 1.0) * g(n + 1) / g(n - 1));
      out(1, 1) = 0.5 * sqrt(dn * (dn - 1.0) * g(n - 2) / g(n));
    } else if (offset == -1) {
      out(0, 1) = nu * sqrt(dn / (2.0 * g(n - 1) * g(n + 1)));
      out(1, 0) = nu / g(n) * sqrt(dn / 2.0);
    } else if (offset == 0) {
      out(0, 0) = dn + 1.5 - 1.0 / g(n + 1);
      out(1, 1) = dn - 0.5 + 1.0 / g(n);
    } else if (offset == 1) {
      out(0, 1) = nu / g(n + 1) * sqrt((dn + 1.0) / 2.0);
      out(1, 0) = nu * sqrt((dn + 1.0) / (2.0 * g(n) * g(n + 2)));
    } else if (offset == 2) {
      out(0, 0) = 0.5 * sqrt((dn + 1.0) * (dn + 2.0) * g(n + 3) / g(n + 1));
      out(1, 1) = 0.5 * sqrt((dn + 1.0) * (dn + 2.0) * g(n) / g(n + 2));
    }
    return out;
  }

  if (power == 1) {
    if (offset == -1) {
      out(0, 0) = sqrt(dn * g(n + 2) / (2.0 * g(n + 1)));
      out(1, 0) = nu * sqrt(dn / (2.0 * g(n) * g(n + 1)));
      out(1, 1) = sqrt(dn * g(n - 1) / (2.0 * g(n)));
    } else if (offset == 1) {
      out(0, 0) = sqrt((dn + 1.0) * g(n + 3) / (2.0 * g(n + 2)));
      out(0, 1) = nu * sqrt((dn + 1.0) / (2.0 * g(n + 1) * g(n + 2)));
      out(1, 1) = sqrt((dn + 1.0) * g(n) / (2.0 * g(n + 1)));
    }
    return out;
  }
  if (offset == -2) {
    out(0, 0) = 0.5 * sqrt(dn * (dn - 1.0) * g(n + 2) / g(n));
    out(1, 0) = nu * sqrt(dn * (dn - 1.0)) / g(n);
    out(1, 1) = 0.5 * sqrt(dn * (dn - 1.0) * g(n - 2) / g(n));
  } else if (offset == 0) {
    const double c = nu * (2.0 * dn + 1.0) / (2.0 * sqrt(g(n) * g(n + 2)));
    out(0, 0) = dn + 2.5 - 2.0 / g(n + 2);
    out(0, 1) = out(1, 0) = c;
    out(1, 1) = dn - 1.5 + 2.0 / g(n);
  } else if (offset == 2) {
    out(0, 0) = 0.5 * sqrt((dn + 1.0) * (dn + 2.0) * g(n + 4) / g(n + 2));
    out(0, 1) = nu * sqrt((dn + 1.0) * (dn + 2.0)) / g(n + 2);
    out(1, 1) = 0.5 * sqrt((dn + 1.0) * (dn + 2.0) * g(n) / g(n + 2));
  }
  return out;
}

MatrixGaussian normalize_row_signs(const MatrixGaussian& f) {
  const int size = f.size();
  RVector signs = RVector::Ones(size);
  for (int r = 0; r < size; ++r) {
    for (const auto& c : f.coeffs()) {
      const double v = c(r, r).real();
      if (std::abs(v) > kTrimThreshold) {
        signs(r) = v < 0 ? -1.0 : 1.0;
        break;
      }
    }
  }
  return f.left_mul(signs.cast<Complex>().asDiagonal());
}

}  // namespace matschroed
