#pragma once

// Test-side reference computations. Nothing here calls into the library's
// quadrature or transform code, so agreement is a genuine cross-check.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

inline std::mt19937_64 make_rng(std::uint64_t seed = 42) { return std::mt19937_64(seed); }

inline std::vector<double> random_nu(std::mt19937_64& rng, int count, double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> nu(static_cast<std::size_t>(count));
  for (auto& v : nu) v = u(rng);
  return nu;
}

inline CMatrix random_matrix(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double re = u(rng);
      m(i, j) = Complex(re, u(rng));
    }
  }
  return m;
}

template <typename M>
double max_abs(const M& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// 16-point Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_16.
struct Legendre16 {
  double nodes[16];
  double weights[16];

  Legendre16() {
    constexpr int n = 16;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

/// Composite 16-point Gauss-Legendre on [a, b]. `f` returns anything that
/// supports + and scalar *.
template <typename F>
auto integrate(F f, double a, double b, int panels = 400) {
  static const Legendre16 rule;
  const double h = (b - a) / panels;
  using R = std::decay_t<std::invoke_result_t<F, double>>;
  R acc = f(a);
  acc *= 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int i = 0; i < 16; ++i) acc += f(mid + 0.5 * h * rule.nodes[i]) * (0.5 * h * rule.weights[i]);
  }
  return acc;
}

/// The Gaussian envelope makes the integrand negligible beyond |x| = 16 for the
/// degrees used in the tests.
template <typename F>
auto integrate_line(F f) {
  return integrate(f, -16.0, 16.0, 400);
}

/// Coefficients q with (d/dx)^n e^{-x^2/2} = q(x) e^{-x^2/2}, by repeated
/// symbolic differentiation q -> q' - x q.
inline std::vector<double> gaussian_derivative_poly(int n) {
  std::vector<double> q{1.0};
  for (int k = 0; k < n; ++k) {
    std::vector<double> next(q.size() + 1, 0.0);
    for (std::size_t j = 1; j < q.size(); ++j) next[j - 1] += static_cast<double>(j) * q[j];
    for (std::size_t j = 0; j < q.size(); ++j) next[j + 1] -= q[j];
    q = std::move(next);
  }
  return q;
}

inline double horner(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

/// psi_n(x) from the factorial formula (2^n n! sqrt(pi))^{-1/2} e^{-x^2/2} H_n(x),
/// fine for the small n used in tests.
inline double psi_direct(int n, double x) {
  double h0 = 1.0;
  double h1 = 2.0 * x;
  double h = n == 0 ? h0 : h1;
  for (int k = 1; k < n; ++k) {
    h = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h;
  }
  double norm = std::sqrt(std::numbers::pi);
  for (int k = 1; k <= n; ++k) norm *= 2.0 * k;
  return std::exp(-0.5 * x * x) * h / std::sqrt(norm);
}

/// Nonzero pattern of the flattened multiplication-by-x matrix for N = 2, read
/// off the star diagrams and continued periodically. Row 2k+i, column 2m+j.
inline bool star_kind1(int r, int c) {
  const int k = r / 2;
  if (r % 2 == 0) return c == 2 * k - 2 || c == 2 * k + 1 || c == 2 * k + 2;
  return c == 2 * k - 1 || c == 2 * k || c == 2 * k + 3;
}

inline bool star_kind2(int r, int c) {
  const int k = r / 2;
  if (r % 2 == 0) return c == 2 * k - 2 || c == 2 * k + 2 || c == 2 * k + 3;
  return c == 2 * k - 2 || c == 2 * k - 1 || c == 2 * k + 3;
}

/// First rows of the two diagrams exactly as printed ('*' nonzero, '0' zero,
/// ' ' not shown).
inline const std::vector<std::string>& printed_kind1() {
  static const std::vector<std::string> rows{"0**", "*00*", "*00**", " **00*", "  *00**"};
  return rows;
}

inline const std::vector<std::string>& printed_kind2() {
  static const std::vector<std::string> rows{"00**", "000*0", "*000**", "**000*0", " 0*000**"};
  return rows;
}

}  // namespace oracle
