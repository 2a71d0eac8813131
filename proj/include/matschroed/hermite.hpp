#pragma once

// Scalar Hermite machinery: polynomials, normalized wave functions psi_n and
// Gauss-Hermite rules for the weight exp(-x^2).

#include <memory>
#include <vector>

namespace matschroed {

/// Real polynomial with coeffs()[j] the coefficient of x^j.
class ScalarPoly {
 public:
  ScalarPoly() : coeffs_{0.0} {}
  explicit ScalarPoly(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double operator[](int j) const { return j <= degree() ? coeffs_[j] : 0.0; }
  double operator()(double x) const;

  ScalarPoly derivative() const;

 private:
  std::vector<double> coeffs_;
};

/// Monic Hermite polynomial (-1)^n e^{x^2/2} (e^{-x^2/2})^{(n)}.
ScalarPoly hermite_monic(int n);

/// Physicists' Hermite polynomial (-1)^n e^{x^2} (e^{-x^2})^{(n)}.
ScalarPoly hermite_physicists(int n);

/// Polynomial part of psi_n, i.e. H_n(x) / sqrt(2^n n! sqrt(pi)); built with the
/// normalized recurrence so no factorials appear.
ScalarPoly wave_polynomial(int n);

/// psi_n(x) = (2^n n! sqrt(pi))^{-1/2} e^{-x^2/2} H_n(x). Evaluated with the
/// normalized three-term recurrence; safe for large n.
double wave_function(int n, double x);

/// psi_0(x) .. psi_{n_max}(x).
std::vector<double> wave_functions(int n_max, double x);

/// Gauss-Hermite rule for the weight exp(-x^2) on the real line.
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;
};

/// m-point rule. Nodes come from the Jacobi-matrix eigenvalues, polished by one
/// Newton step; weights are the Christoffel numbers, which keeps the tiny
/// outer weights accurate to full relative precision.
QuadratureRule gauss_hermite(int m);

/// Same rule, memoized per order (thread-safe).
std::shared_ptr<const QuadratureRule> shared_gauss_hermite(int m);

}  // namespace matschroed
