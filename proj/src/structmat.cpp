#include "matschroed/structmat.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "matschroed/errors.hpp"

namespace matschroed {

namespace {

int mod4(int k) { return ((k % 4) + 4) % 4; }

constexpr std::array<Complex, 4> kPowersOfI{Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                                            Complex{0, -1}};
constexpr std::array<double, 4> kSinQuarter{0.0, 1.0, 0.0, -1.0};
constexpr std::array<double, 4> kCosQuarter{1.0, 0.0, -1.0, 0.0};

}  // namespace

StructuredPair build_structured(int n, std::span<const double> nu) {
  if (n < 1) throw ParameterError("matrix size must be >= 1, got " + std::to_string(n));
  if (static_cast<int>(nu.size()) != n - 1) {
    throw ParameterError("expected " + std::to_string(n - 1) + " shift parameters, got " +
                         std::to_string(nu.size()));
  }
  StructuredPair out;
  out.size = n;
  out.nu.assign(nu.begin(), nu.end());
  out.shift = RMatrix::Zero(n, n);
  out.level = RMatrix::Zero(n, n);
  for (int j = 0; j + 1 < n; ++j) out.shift(j, j + 1) = nu[j];
  for (int j = 0; j < n; ++j) out.level(j, j) = n - 1 - j;
  return out;
}

CMatrix PhaseDiag::matrix() const { return values.asDiagonal(); }

PhaseDiag phase_diag(int n, int k) {
  if (n < 1) throw ParameterError("matrix size must be >= 1");
  PhaseDiag out;
  out.size = n;
  out.k = mod4(k);
  out.values.resize(n);
  // Integer exponent arithmetic keeps the entries exact.
  for (int j = 0; j < n; ++j) out.values(j) = kPowersOfI[mod4(out.k * (n - 1 - j))];
  return out;
}

RMatrix TrigDiag::matrix() const { return values.asDiagonal(); }

TrigDiag trig_diag(int n, Trig kind) {
  if (n < 1) throw ParameterError("matrix size must be >= 1");
  TrigDiag out;
  out.size = n;
  out.kind = kind;
  out.values.resize(n);
  const auto& table = kind == Trig::Sin ? kSinQuarter : kCosQuarter;
  for (int j = 0; j < n; ++j) out.values(j) = table[mod4(n - 1 - j)];
  return out;
}

CMatrix nilpotent_series(std::span<const Complex> taylor, const CMatrix& a) {
  const auto n = a.rows();
  if (a.cols() != n) throw ParameterError("nilpotent_series: matrix must be square");
  if (static_cast<Eigen::Index>(taylor.size()) < n) {
    throw ParameterError("nilpotent_series: need at least N Taylor coefficients");
  }
  CMatrix power = CMatrix::Identity(n, n);
  CMatrix sum = CMatrix::Zero(n, n);
  double factorial = 1.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j > 0) factorial *= static_cast<double>(j);
    sum += (taylor[j] / factorial) * power;
    power = power * a;
  }
  if (max_abs(power) >= 1e-12) {
    throw DomainError("nilpotent_series: A^N is not zero (max entry " +
                      std::to_string(max_abs(power)) + ")");
  }
  return sum;
}

std::vector<Complex> exp_taylor(int terms, Complex scale) {
  std::vector<Complex> out(static_cast<std::size_t>(std::max(terms, 0)));
  Complex value = 1.0;
  for (auto& c : out) {
    c = value;
    value *= scale;
  }
  return out;
}

std::vector<Complex> binomial_taylor(int terms, double exponent) {
  std::vector<Complex> out(static_cast<std::size_t>(std::max(terms, 0)));
  double value = 1.0;
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = value;
    value *= exponent - static_cast<double>(j);
  }
  return out;
}

CMatrix commutator(const CMatrix& x, const CMatrix& y) { return x * y - y * x; }

}  // namespace matschroed
