#pragma once

// Exact coefficient algebra for matrix polynomials and for functions of the form
// (sum_j C_j x^j) e^{-x^2/2}.

#include <vector>

#include "matschroed/hermite.hpp"
#include "matschroed/types.hpp"

namespace matschroed {

/// Coefficients whose max-norm falls below this are trimmed from the top.
inline constexpr double kTrimThreshold = 1e-14;

/// Highest degree the Hermite-basis transform accepts.
inline constexpr int kMaxTransformDegree = 64;

/// P(x) = sum_j C_j x^j with complex N x N coefficients.
class MatrixPolynomial {
 public:
  explicit MatrixPolynomial(int size = 1);
  explicit MatrixPolynomial(std::vector<CMatrix> coeffs);

  static MatrixPolynomial constant(const CMatrix& c);
  /// x^degree times the identity.
  static MatrixPolynomial monomial(int size, int degree);

  int size() const { return size_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<CMatrix>& coeffs() const { return coeffs_; }
  const CMatrix& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  bool is_zero() const;
  double max_coeff_norm() const;

  CMatrix operator()(double x) const;

  MatrixPolynomial& operator+=(const MatrixPolynomial& other);
  MatrixPolynomial& operator-=(const MatrixPolynomial& other);
  MatrixPolynomial& operator*=(Complex alpha);

  MatrixPolynomial left_mul(const CMatrix& m) const;
  MatrixPolynomial right_mul(const CMatrix& m) const;
  /// Product with a scalar polynomial.
  MatrixPolynomial poly_mul(const ScalarPoly& p) const;
  /// x^k P(x).
  MatrixPolynomial shifted(int k = 1) const;
  MatrixPolynomial derivative() const;
  /// P(-x).
  MatrixPolynomial reflected() const;
  /// Entrywise complex conjugate of the coefficients followed by transposition,
  /// i.e. P(x)^* for real x.
  MatrixPolynomial adjoint() const;

 private:
  void trim();

  int size_;
  std::vector<CMatrix> coeffs_;
};

MatrixPolynomial operator+(MatrixPolynomial a, const MatrixPolynomial& b);
MatrixPolynomial operator-(MatrixPolynomial a, const MatrixPolynomial& b);
MatrixPolynomial operator*(Complex alpha, MatrixPolynomial p);
/// Matrix polynomial product (non-commutative; left factor first).
MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b);

/// f(x) = P(x) e^{-x^2/2}.
class MatrixGaussian {
 public:
  explicit MatrixGaussian(int size = 1) : poly_(size) {}
  explicit MatrixGaussian(MatrixPolynomial poly) : poly_(std::move(poly)) {}

  int size() const { return poly_.size(); }
  int degree() const { return poly_.degree(); }
  const MatrixPolynomial& poly() const { return poly_; }
  const std::vector<CMatrix>& coeffs() const { return poly_.coeffs(); }
  double max_coeff_norm() const { return poly_.max_coeff_norm(); }

  CMatrix operator()(double x) const;

  MatrixGaussian& operator+=(const MatrixGaussian& other);
  MatrixGaussian& operator-=(const MatrixGaussian& other);
  MatrixGaussian& operator*=(Complex alpha);

  MatrixGaussian left_mul(const CMatrix& m) const { return MatrixGaussian(poly_.left_mul(m)); }
  MatrixGaussian right_mul(const CMatrix& m) const { return MatrixGaussian(poly_.right_mul(m)); }
  MatrixGaussian poly_mul(const ScalarPoly& p) const { return MatrixGaussian(poly_.poly_mul(p)); }
  /// f(-x).
  MatrixGaussian reflected() const { return MatrixGaussian(poly_.reflected()); }

  /// Exact derivative: P -> P' - xP.
  MatrixGaussian derivative() const;

 private:
  MatrixPolynomial poly_;
};

MatrixGaussian operator+(MatrixGaussian a, const MatrixGaussian& b);
MatrixGaussian operator-(MatrixGaussian a, const MatrixGaussian& b);
MatrixGaussian operator*(Complex alpha, MatrixGaussian f);

enum class Direction : int { Forward = 1, Inverse = -1 };

/// (1/sqrt(2 pi)) int f(t) e^{+-ixt} dt, computed exactly: each coefficient
/// polynomial is expanded in h_m = H_m / 2^m (physicists' Hermite made monic),
/// and h_m(t) e^{-t^2/2} is an eigenfunction with eigenvalue (+-i)^m. Throws RangeError
/// above kMaxTransformDegree.
MatrixGaussian fourier_transform(const MatrixGaussian& f, Direction direction = Direction::Forward);

/// Coefficient of h_m in the expansion of x^j, and of x^j in h_m; both
/// tables are computed once from x h_m = h_{m+1} + (m/2) h_{m-1}.
double monomial_to_hermite(int j, int m);
double hermite_to_monomial(int m, int j);

}  // namespace matschroed
