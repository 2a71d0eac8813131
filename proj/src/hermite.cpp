#include "matschroed/hermite.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "matschroed/errors.hpp"

namespace matschroed {

namespace {

const double kPiQuarterInv = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));

void trim(std::vector<double>& c) {
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
}

// Orthonormal polynomials for exp(-x^2): p_k = psi_k e^{x^2/2}. Returns
// (p_{m-1}(x), p_m(x)) and accumulates sum_{k<m} p_k(x)^2.
struct OrthonormalTail {
  double previous;
  double last;
  double sum_squares;
};

OrthonormalTail orthonormal_tail(int m, double x) {
  double p_prev = 0.0;
  double p = kPiQuarterInv;
  double sum = 0.0;
  for (int k = 0; k < m; ++k) {
    sum += p * p;
    const double next =
        x * std::sqrt(2.0 / (k + 1)) * p - std::sqrt(static_cast<double>(k) / (k + 1)) * p_prev;
    p_prev = p;
    p = next;
  }
  return {p_prev, p, sum};
}

}  // namespace

ScalarPoly::ScalarPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  trim(coeffs_);
}

double ScalarPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ScalarPoly ScalarPoly::derivative() const {
  if (coeffs_.size() <= 1) return ScalarPoly{};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = static_cast<double>(j) * coeffs_[j];
  return ScalarPoly(std::move(d));
}

namespace {

// q_{n+1} = a x q_n - b_n q_{n-1}
template <typename XFactor, typename Lower>
ScalarPoly three_term(int n, double q0, XFactor x_factor, Lower lower) {
  if (n < 0) throw ParameterError("polynomial index must be >= 0");
  std::vector<double> prev;
  std::vector<double> cur{q0};
  for (int k = 0; k < n; ++k) {
    std::vector<double> next(cur.size() + 1, 0.0);
    const double a = x_factor(k);
    const double b = lower(k);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += a * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= b * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return ScalarPoly(std::move(cur));
}

}  // namespace

ScalarPoly hermite_monic(int n) {
  return three_term(n, 1.0, [](int) { return 1.0; }, [](int k) { return static_cast<double>(k); });
}

ScalarPoly hermite_physicists(int n) {
  return three_term(n, 1.0, [](int) { return 2.0; },
                    [](int k) { return 2.0 * static_cast<double>(k); });
}

ScalarPoly wave_polynomial(int n) {
  return three_term(
      n, kPiQuarterInv, [](int k) { return std::sqrt(2.0 / (k + 1)); },
      [](int k) { return std::sqrt(static_cast<double>(k) / (k + 1)); });
}

std::vector<double> wave_functions(int n_max, double x) {
  if (n_max < 0) throw ParameterError("wave_functions: n_max must be >= 0");
  std::vector<double> psi(static_cast<std::size_t>(n_max) + 1);
  psi[0] = kPiQuarterInv * std::exp(-0.5 * x * x);
  if (n_max >= 1) psi[1] = std::sqrt(2.0) * x * psi[0];
  for (int k = 1; k < n_max; ++k) {
    psi[k + 1] = x * std::sqrt(2.0 / (k + 1)) * psi[k] -
                 std::sqrt(static_cast<double>(k) / (k + 1)) * psi[k - 1];
  }
  return psi;
}

double wave_function(int n, double x) {
  if (n < 0) throw ParameterError("wave_function: n must be >= 0");
  return wave_functions(n, x).back();
}

QuadratureRule gauss_hermite(int m) {
  if (m < 1) throw ParameterError("gauss_hermite: order must be >= 1, got " + std::to_string(m));
  QuadratureRule rule;
  rule.order = m;
  rule.nodes.resize(m);
  rule.weights.resize(m);

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd sub(std::max(m - 1, 0));
  for (int k = 1; k < m; ++k) sub(k - 1) = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("gauss_hermite: tridiagonal eigen-solver did not converge");
  }
  const auto& eig = solver.eigenvalues();
  for (int i = 0; i < m; ++i) {
    // Enforce exact symmetry, then polish: p_m' = sqrt(2m) p_{m-1}.
    double x = 0.5 * (eig(i) - eig(m - 1 - i));
    if (2 * i + 1 != m) {
      const auto tail = orthonormal_tail(m, x);
      x -= tail.last / (std::sqrt(2.0 * m) * tail.previous);
    } else {
      x = 0.0;
    }
    rule.nodes[i] = x;
  }
  for (int i = 0; i < m / 2; ++i) {
    const double r = 0.5 * (rule.nodes[m - 1 - i] - rule.nodes[i]);
    rule.nodes[i] = -r;
    rule.nodes[m - 1 - i] = r;
  }
  for (int i = 0; i < m; ++i) rule.weights[i] = 1.0 / orthonormal_tail(m, rule.nodes[i]).sum_squares;
  return rule;
}

std::shared_ptr<const QuadratureRule> shared_gauss_hermite(int m) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const QuadratureRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_shared<const QuadratureRule>(gauss_hermite(m));
  return slot;
}

}  // namespace matschroed
