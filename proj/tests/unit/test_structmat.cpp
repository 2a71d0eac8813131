#include <gtest/gtest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "matschroed/errors.hpp"
#include "matschroed/structmat.hpp"
#include "oracles.hpp"

using namespace matschroed;

namespace {

CMatrix power(const CMatrix& a, int m) {
  CMatrix p = CMatrix::Identity(a.rows(), a.cols());
  for (int k = 0; k < m; ++k) p = p * a;
  return p;
}

}  // namespace

TEST(BuildStructured, ScalarCase) {
  const auto s = build_structured(1, {});
  EXPECT_EQ(s.shift.rows(), 1);
  EXPECT_EQ(s.shift(0, 0), 0.0);
  EXPECT_EQ(s.level(0, 0), 0.0);
}

TEST(BuildStructured, TwoByTwo) {
  const std::vector<double> nu{0.7};
  const auto s = build_structured(2, nu);
  RMatrix a(2, 2);
  a << 0, 0.7, 0, 0;
  EXPECT_EQ(s.shift, a);
  EXPECT_EQ(s.level, RVector(RVector::LinSpaced(2, 1, 0)).asDiagonal().toDenseMatrix());
}

TEST(BuildStructured, NilpotentAndAdjointRelation) {
  const std::vector<double> nu{1.0, 1.0};
  const auto s = build_structured(3, nu);
  const RMatrix a = s.shift;
  EXPECT_EQ(oracle::max_abs(RMatrix(a * a * a)), 0.0);
  EXPECT_LT(oracle::max_abs(RMatrix(a * s.level - s.level * a + a)), 1e-15);
}

TEST(BuildStructured, AdPowersRandom) {
  auto rng = oracle::make_rng(7);
  for (int n = 2; n <= 6; ++n) {
    const auto nu = oracle::random_nu(rng, n - 1);
    const auto s = build_structured(n, nu);
    RMatrix ak = RMatrix::Identity(n, n);
    for (int k = 1; k < n; ++k) {
      ak = ak * s.shift;
      EXPECT_LT(oracle::max_abs(RMatrix(ak * s.level - s.level * ak + k * ak)), 1e-13) << "N=" << n << " k=" << k;
    }
  }
}

TEST(BuildStructured, RejectsWrongLength) {
  const std::vector<double> nu{1.0};
  EXPECT_THROW(build_structured(3, nu), ParameterError);
  EXPECT_THROW(build_structured(0, {}), ParameterError);
}

TEST(PhaseDiag, Examples) {
  const auto p = phase_diag(2, 1);
  EXPECT_EQ(p.values(0), Complex(0, 1));
  EXPECT_EQ(p.values(1), Complex(1, 0));
  const auto q = phase_diag(3, 2);
  EXPECT_EQ(q.values(0), Complex(1, 0));
  EXPECT_EQ(q.values(1), Complex(-1, 0));
  EXPECT_EQ(q.values(2), Complex(1, 0));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(phase_diag(n, 0).matrix(), CMatrix::Identity(n, n));
}

TEST(PhaseDiag, MatchesPolarForm) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = -5; k <= 7; ++k) {
      const auto p = phase_diag(n, k);
      for (int j = 0; j < n; ++j) {
        const Complex expected = std::polar(1.0, std::numbers::pi * k * (n - 1 - j) / 2.0);
        EXPECT_LT(std::abs(p.values(j) - expected), 1e-14);
      }
    }
  }
}

TEST(PhaseDiag, UnitaryAndPeriodic) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k < 4; ++k) {
      const CMatrix p = phase_diag(n, k).matrix();
      EXPECT_EQ(CMatrix(p * phase_diag(n, 4 - k).matrix()), CMatrix::Identity(n, n));
      EXPECT_EQ(CMatrix(p * p.adjoint()), CMatrix::Identity(n, n));
    }
    const CMatrix e2 = phase_diag(n, 2).matrix();
    EXPECT_EQ(CMatrix(e2 * e2), CMatrix::Identity(n, n));
    EXPECT_EQ(e2.imag(), RMatrix::Zero(n, n));
  }
}

TEST(PhaseDiag, CommutationWithShiftPowers) {
  auto rng = oracle::make_rng(11);
  for (int n = 2; n <= 6; ++n) {
    const auto nu = oracle::random_nu(rng, n - 1);
    const CMatrix a = build_structured(n, nu).shift.cast<Complex>();
    for (int k = 0; k < 4; ++k) {
      const CMatrix e = phase_diag(n, k).matrix();
      for (int m = 1; m < n; ++m) {
        const CMatrix am = power(a, m);
        const Complex ikm = std::pow(Complex(0, 1), k * m);
        EXPECT_LT(oracle::max_abs(CMatrix(e * am - ikm * am * e)), 1e-13);
      }
    }
  }
}

TEST(TrigDiag, Examples) {
  EXPECT_EQ(trig_diag(3, Trig::Sin).values, RVector((RVector(3) << 0, 1, 0).finished()));
  EXPECT_EQ(trig_diag(3, Trig::Cos).values, RVector((RVector(3) << -1, 0, 1).finished()));
  EXPECT_EQ(trig_diag(2, Trig::Sin).values, RVector((RVector(2) << 1, 0).finished()));
  EXPECT_EQ(trig_diag(2, Trig::Cos).values, RVector((RVector(2) << 0, 1).finished()));
}

TEST(TrigDiag, PythagorasAndSingularity) {
  for (int n = 1; n <= 7; ++n) {
    const RVector s = trig_diag(n, Trig::Sin).values;
    const RVector c = trig_diag(n, Trig::Cos).values;
    for (int j = 0; j < n; ++j) {
      EXPECT_TRUE(s(j) == -1.0 || s(j) == 0.0 || s(j) == 1.0);
      EXPECT_EQ(s(j) * s(j) + c(j) * c(j), 1.0);
    }
    if (n >= 2) {
      EXPECT_EQ(s.prod(), 0.0);
      EXPECT_EQ(c.prod(), 0.0);
    }
  }
}

TEST(TrigDiag, SixRelations) {
  const Complex i(0, 1);
  for (int n = 1; n <= 7; ++n) {
    const CMatrix id = CMatrix::Identity(n, n);
    const CMatrix e1 = phase_diag(n, 1).matrix();
    const CMatrix e2 = phase_diag(n, 2).matrix();
    const CMatrix e3 = phase_diag(n, 3).matrix();
    const CMatrix c = trig_diag(n, Trig::Cos).matrix().cast<Complex>();
    const CMatrix s = trig_diag(n, Trig::Sin).matrix().cast<Complex>();
    EXPECT_LT(oracle::max_abs(CMatrix(e1 * c - 0.5 * (id + e2))), 1e-15);
    EXPECT_LT(oracle::max_abs(CMatrix(e1 * s - (e2 - id) / (2.0 * i))), 1e-15);
    EXPECT_LT(oracle::max_abs(CMatrix(e2 * c - c)), 1e-15);
    EXPECT_LT(oracle::max_abs(CMatrix(e2 * s + s)), 1e-15);
    EXPECT_LT(oracle::max_abs(CMatrix(e3 * c - 0.5 * (id + e2))), 1e-15);
    EXPECT_LT(oracle::max_abs(CMatrix(e3 * s + (e2 - id) / (2.0 * i))), 1e-15);
  }
}

TEST(NilpotentSeries, ExpOfZeroIsIdentity) {
  const auto t = exp_taylor(3);
  EXPECT_EQ(nilpotent_series(t, CMatrix::Zero(3, 3)), CMatrix::Identity(3, 3));
}

TEST(NilpotentSeries, Reciprocal) {
  const std::vector<double> nu{1.3};
  const CMatrix a = build_structured(2, nu).shift.cast<Complex>();
  const auto t = binomial_taylor(2, -1.0);
  EXPECT_LT(oracle::max_abs(CMatrix(nilpotent_series(t, a) - (CMatrix::Identity(2, 2) - a))), 1e-15);
}

TEST(NilpotentSeries, ExpMatchesTruncatedSum) {
  const std::vector<double> nu{0.8, -1.1};
  const CMatrix a = build_structured(3, nu).shift.cast<Complex>();
  const double x = 1.7;
  const auto t = exp_taylor(3, x);
  const CMatrix expected = CMatrix::Identity(3, 3) + a * x + a * a * (x * x / 2.0);
  EXPECT_LT(oracle::max_abs(CMatrix(nilpotent_series(t, a) - expected)), 1e-14);
}

TEST(NilpotentSeries, MatchesEigenMatrixFunctions) {
  auto rng = oracle::make_rng(3);
  for (int n = 2; n <= 6; ++n) {
    const auto nu = oracle::random_nu(rng, n - 1);
    const RMatrix a = build_structured(n, nu).shift;
    const RMatrix id = RMatrix::Identity(n, n);
    const CMatrix ours_exp = nilpotent_series(exp_taylor(n, -0.6), a.cast<Complex>());
    const RMatrix ref_exp = RMatrix(-0.6 * a).exp();
    EXPECT_LT(oracle::max_abs(CMatrix(ours_exp - ref_exp.cast<Complex>())), 1e-12);
    const CMatrix ours_root = nilpotent_series(binomial_taylor(n, -0.5), a.cast<Complex>());
    const RMatrix ref_root = RMatrix(id + a).sqrt().inverse();
    EXPECT_LT(oracle::max_abs(CMatrix(ours_root - ref_root.cast<Complex>())), 1e-11);
  }
}

TEST(NilpotentSeries, Errors) {
  CMatrix full = CMatrix::Identity(2, 2);
  EXPECT_THROW(nilpotent_series(exp_taylor(2), full), DomainError);
  const std::vector<double> nu{1.0, 1.0};
  const CMatrix a = build_structured(3, nu).shift.cast<Complex>();
  EXPECT_THROW(nilpotent_series(exp_taylor(2), a), ParameterError);
}

TEST(Commutator, LevelAndShift) {
  const std::vector<double> nu{0.5, 2.0, -1.0};
  const auto s = build_structured(4, nu);
  const CMatrix a = s.shift.cast<Complex>();
  const CMatrix j = s.level.cast<Complex>();
  EXPECT_LT(oracle::max_abs(CMatrix(commutator(a, j) + a)), 1e-15);
}
