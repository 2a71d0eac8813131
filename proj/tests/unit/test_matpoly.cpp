#include <gtest/gtest.h>

#include "matschroed/errors.hpp"
#include "matschroed/families.hpp"
#include "matschroed/hermite.hpp"
#include "matschroed/matpoly.hpp"
#include "matschroed/structmat.hpp"
#include "oracles.hpp"

using namespace matschroed;

namespace {

MatrixGaussian random_gaussian(std::mt19937_64& rng, int size, int degree) {
  std::vector<CMatrix> c;
  for (int j = 0; j <= degree; ++j) c.push_back(oracle::random_matrix(rng, size));
  return MatrixGaussian(MatrixPolynomial(std::move(c)));
}

CMatrix naive_eval(const MatrixGaussian& f, double x) {
  CMatrix acc = CMatrix::Zero(f.size(), f.size());
  for (int j = 0; j <= f.degree(); ++j) acc += f.coeffs()[j] * std::pow(x, j);
  return acc * std::exp(-0.5 * x * x);
}

// (1/sqrt(2 pi)) int f(t) e^{i s x t} dt on a composite Gauss-Legendre grid.
CMatrix oracle_transform(const MatrixGaussian& f, double x, int sign = 1) {
  const CMatrix integral =
      oracle::integrate_line([&](double t) -> CMatrix { return naive_eval(f, t) * std::exp(Complex(0, sign * x * t)); });
  return integral / std::sqrt(2 * std::numbers::pi);
}

// sum_m C_m psi_m: the coefficient class every family member belongs to. Random
// monomial coefficients of high degree have transforms with coefficients near
// 1e10, which no monomial-storage round trip can resolve to 1e-12.
MatrixGaussian random_wave_combination(std::mt19937_64& rng, int size, int degree) {
  MatrixGaussian f(size);
  const MatrixGaussian unit{MatrixPolynomial::constant(CMatrix::Identity(size, size))};
  for (int m = 0; m <= degree; ++m) f += unit.poly_mul(wave_polynomial(m)).left_mul(oracle::random_matrix(rng, size));
  return f;
}

MatrixGaussian identity_gaussian(int n) { return MatrixGaussian(MatrixPolynomial::constant(CMatrix::Identity(n, n))); }

}  // namespace

TEST(MatrixGaussianEval, IdentityAtZero) {
  EXPECT_EQ(identity_gaussian(3)(0.0), CMatrix::Identity(3, 3));
}

TEST(MatrixGaussianEval, NormalizedFamilyAtZero) {
  FamilySpec spec{FamilyKind::Linear, 2, {1.0}};
  const auto ctx = build_family(spec, 2);
  const CMatrix v = ctx.phi_tilde[0](0.0);
  const double psi0 = std::pow(std::numbers::pi, -0.25);
  EXPECT_NEAR(v(0, 0).real(), psi0 / std::sqrt(1.5), 1e-13);
  EXPECT_NEAR(v(1, 1).real(), psi0 / std::sqrt(1.0), 1e-13);
}

TEST(MatrixGaussianEval, RandomMatchesNaiveSum) {
  auto rng = oracle::make_rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_gaussian(rng, 3, 6);
    EXPECT_LT(oracle::max_abs(CMatrix(f(1.3) - naive_eval(f, 1.3))), 1e-13);
  }
}

TEST(MatrixGaussianAlgebra, SelfCancellation) {
  auto rng = oracle::make_rng(6);
  const auto f = random_gaussian(rng, 2, 5);
  const auto z = f + Complex(-1.0) * f;
  EXPECT_EQ(z.degree(), 0);
  EXPECT_EQ(z.coeffs()[0], CMatrix::Zero(2, 2));
  EXPECT_TRUE(z.poly().is_zero());
}

TEST(MatrixGaussianAlgebra, PhaseRoundTrip) {
  auto rng = oracle::make_rng(8);
  const auto f = random_gaussian(rng, 2, 4);
  const auto g = f.left_mul(phase_diag(2, 1).matrix()).left_mul(phase_diag(2, 3).matrix());
  EXPECT_LT((g - f).max_coeff_norm(), 1e-15);
  const auto h = f.right_mul(phase_diag(2, 1).matrix()).right_mul(phase_diag(2, 3).matrix());
  EXPECT_LT((h - f).max_coeff_norm(), 1e-15);
}

TEST(MatrixGaussianAlgebra, PolyMulPointwise) {
  auto rng = oracle::make_rng(9);
  const auto f = random_gaussian(rng, 3, 4);
  const ScalarPoly x2({0.0, 0.0, 1.0});
  const auto g = f.poly_mul(x2);
  for (int i = 0; i < 10; ++i) {
    const double x = -2.0 + 0.45 * i;
    EXPECT_LT(oracle::max_abs(CMatrix(g(x) - x * x * f(x))), 1e-13);
  }
}

TEST(MatrixGaussianAlgebra, SizeMismatch) {
  auto a = identity_gaussian(2);
  const auto b = identity_gaussian(3);
  EXPECT_THROW(a += b, ParameterError);
  EXPECT_THROW(a.left_mul(CMatrix::Identity(3, 3)), ParameterError);
  EXPECT_THROW(a.right_mul(CMatrix::Identity(3, 3)), ParameterError);
}

TEST(MatrixGaussianAlgebra, TrimsTinyTrailingCoefficients) {
  std::vector<CMatrix> c{CMatrix::Identity(2, 2), CMatrix::Identity(2, 2), CMatrix::Constant(2, 2, 1e-15)};
  const MatrixGaussian f{MatrixPolynomial(c)};
  EXPECT_EQ(f.degree(), 1);
  c.back() = CMatrix::Constant(2, 2, 1e-13);
  EXPECT_EQ(MatrixGaussian(MatrixPolynomial(c)).degree(), 2);
}

TEST(MatrixPolynomialAlgebra, ProductAndAdjointPointwise) {
  auto rng = oracle::make_rng(10);
  const auto p = random_gaussian(rng, 3, 3).poly();
  const auto q = random_gaussian(rng, 3, 4).poly();
  const auto pq = p * q;
  EXPECT_EQ(pq.degree(), 7);
  for (double x : {-1.5, 0.0, 0.8, 2.0}) {
    EXPECT_LT(oracle::max_abs(CMatrix(pq(x) - p(x) * q(x))), 1e-12);
    EXPECT_LT(oracle::max_abs(CMatrix(p.adjoint()(x) - p(x).adjoint())), 1e-15);
    EXPECT_LT(oracle::max_abs(CMatrix(p.reflected()(x) - p(-x))), 1e-15);
    EXPECT_LT(oracle::max_abs(CMatrix(p.shifted(2)(x) - x * x * p(x))), 1e-13);
  }
}

TEST(MatrixGaussianDerivative, Gaussian) {
  const auto d = identity_gaussian(2).derivative();
  ASSERT_EQ(d.degree(), 1);
  EXPECT_EQ(d.coeffs()[0], CMatrix::Zero(2, 2));
  EXPECT_EQ(d.coeffs()[1], CMatrix(-CMatrix::Identity(2, 2)));
  const auto dd = d.derivative();
  ASSERT_EQ(dd.degree(), 2);
  EXPECT_EQ(dd.coeffs()[0], CMatrix(-CMatrix::Identity(2, 2)));
  EXPECT_EQ(dd.coeffs()[1], CMatrix::Zero(2, 2));
  EXPECT_EQ(dd.coeffs()[2], CMatrix::Identity(2, 2));
}

TEST(MatrixGaussianDerivative, FiniteDifference) {
  auto rng = oracle::make_rng(12);
  const double h = 1e-5;
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_gaussian(rng, 2, 6);
    const CMatrix fd = (f(0.7 + h) - f(0.7 - h)) / (2 * h);
    EXPECT_LT(oracle::max_abs(CMatrix(f.derivative()(0.7) - fd)), 1e-8);
  }
}

TEST(FourierTransform, GaussianIsInvariant) {
  const auto f = identity_gaussian(3);
  const auto g = fourier_transform(f);
  EXPECT_LT((g - f).max_coeff_norm(), 1e-15);
}

TEST(FourierTransform, LinearTermPicksUpI) {
  const MatrixGaussian f{MatrixPolynomial::monomial(2, 1)};
  const auto g = fourier_transform(f);
  ASSERT_EQ(g.degree(), 1);
  EXPECT_LT(oracle::max_abs(CMatrix(g.coeffs()[1] - Complex(0, 1) * CMatrix::Identity(2, 2))), 1e-15);
  EXPECT_LT(oracle::max_abs(g.coeffs()[0]), 1e-15);
}

TEST(FourierTransform, MatchesNumericalIntegration) {
  auto rng = oracle::make_rng(13);
  for (int trial = 0; trial < 3; ++trial) {
    const auto f = random_gaussian(rng, 2, 7);
    const auto g = fourier_transform(f);
    const auto gi = fourier_transform(f, Direction::Inverse);
    for (double x : {-3.0, -1.0, 0.0, 2.0}) {
      EXPECT_LT(oracle::max_abs(CMatrix(g(x) - oracle_transform(f, x))), 1e-9);
      EXPECT_LT(oracle::max_abs(CMatrix(gi(x) - oracle_transform(f, x, -1))), 1e-9);
    }
  }
}

TEST(FourierTransform, InverseUndoesForward) {
  auto rng = oracle::make_rng(14);
  for (int size = 1; size <= 5; ++size) {
    for (int degree : {0, 3, 10, 20}) {
      const auto f = random_wave_combination(rng, size, degree);
      const auto back = fourier_transform(fourier_transform(f), Direction::Inverse);
      EXPECT_LT((back - f).max_coeff_norm() / f.max_coeff_norm(), 1e-12) << "size=" << size << " deg=" << degree;
    }
  }
}

TEST(FourierTransform, InverseUndoesForwardMonomialInputs) {
  auto rng = oracle::make_rng(18);
  for (int size = 1; size <= 5; ++size) {
    for (int degree = 0; degree <= 8; ++degree) {
      const auto f = random_gaussian(rng, size, degree);
      const auto back = fourier_transform(fourier_transform(f), Direction::Inverse);
      EXPECT_LT((back - f).max_coeff_norm() / f.max_coeff_norm(), 1e-12) << "size=" << size << " deg=" << degree;
    }
  }
}

TEST(FourierTransform, OrderFour) {
  auto rng = oracle::make_rng(15);
  const auto f = random_wave_combination(rng, 3, 20);
  auto g = f;
  for (int k = 0; k < 4; ++k) g = fourier_transform(g);
  EXPECT_LT((g - f).max_coeff_norm() / f.max_coeff_norm(), 1e-12);
  // twice gives the reflection
  const auto r = fourier_transform(fourier_transform(f));
  EXPECT_LT((r - f.reflected()).max_coeff_norm() / f.max_coeff_norm(), 1e-12);
}

TEST(FourierTransform, PreservesParity) {
  auto rng = oracle::make_rng(16);
  for (int parity : {0, 1}) {
    std::vector<CMatrix> c;
    for (int j = 0; j <= 9; ++j) {
      c.push_back(j % 2 == parity ? oracle::random_matrix(rng, 2) : CMatrix::Zero(2, 2));
    }
    const auto g = fourier_transform(MatrixGaussian(MatrixPolynomial(c)));
    for (int j = 0; j <= g.degree(); ++j) {
      if (j % 2 != parity) EXPECT_LT(oracle::max_abs(g.coeffs()[j]), 1e-12);
    }
  }
}

TEST(FourierTransform, DerivativeBecomesMultiplication) {
  auto rng = oracle::make_rng(17);
  const auto f = random_gaussian(rng, 2, 8);
  const auto lhs = fourier_transform(f.derivative());
  const auto rhs = fourier_transform(f);
  for (double x : {-2.5, -0.3, 0.0, 1.1, 3.0}) {
    // int f'(t) e^{ixt} dt = -ix int f(t) e^{ixt} dt
    EXPECT_LT(oracle::max_abs(CMatrix(lhs(x) + Complex(0, x) * rhs(x))), 1e-9);
  }
}

TEST(FourierTransform, DegreeCap) {
  const MatrixGaussian ok{MatrixPolynomial::monomial(1, kMaxTransformDegree)};
  EXPECT_NO_THROW(fourier_transform(ok));
  const MatrixGaussian too_big{MatrixPolynomial::monomial(1, kMaxTransformDegree + 1)};
  EXPECT_THROW(fourier_transform(too_big), RangeError);
}

TEST(FourierTransform, BasisTablesInvert) {
  for (int j = 0; j <= 20; ++j) {
    for (int k = 0; k <= 20; ++k) {
      double acc = 0.0;
      for (int m = 0; m <= 20; ++m) acc += monomial_to_hermite(j, m) * hermite_to_monomial(m, k);
      EXPECT_NEAR(acc, j == k ? 1.0 : 0.0, 1e-9 * std::max(1.0, std::abs(monomial_to_hermite(j, 0))));
    }
  }
}
