#include "matschroed/matpoly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "matschroed/errors.hpp"

namespace matschroed {

namespace {

void require_same_size(int a, int b) {
  if (a != b) {
    throw ParameterError("matrix size mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

using Table = std::array<std::array<double, kMaxTransformDegree + 1>, kMaxTransformDegree + 1>;

struct BasisTables {
  Table to_hermite{};    // [j][m]: x^j = sum_m to_hermite[j][m] He_m
  Table to_monomial{};   // [m][j]: He_m = sum_j to_monomial[m][j] x^j
};

const BasisTables& basis_tables() {
  static const BasisTables tables = [] {
    BasisTables t;
    constexpr int d = kMaxTransformDegree;
    // h_m = H_m / 2^m (monic physicists'): x h_m = h_{m+1} + (m/2) h_{m-1}
    t.to_hermite[0][0] = 1.0;
    for (int j = 0; j < d; ++j) {
      for (int m = 0; m <= j; ++m) {
        const double c = t.to_hermite[j][m];
        if (c == 0.0) continue;
        t.to_hermite[j + 1][m + 1] += c;
        if (m > 0) t.to_hermite[j + 1][m - 1] += 0.5 * m * c;
      }
    }
    // h_{m+1} = x h_m - (m/2) h_{m-1}
    t.to_monomial[0][0] = 1.0;
    if (d >= 1) t.to_monomial[1][1] = 1.0;
    for (int m = 1; m < d; ++m) {
      for (int j = 0; j <= m + 1; ++j) {
        double v = j > 0 ? t.to_monomial[m][j - 1] : 0.0;
        v -= 0.5 * m * t.to_monomial[m - 1][j];
        t.to_monomial[m + 1][j] = v;
      }
    }
    return t;
  }();
  return tables;
}

}  // namespace

double monomial_to_hermite(int j, int m) {
  if (j < 0 || m < 0 || j > kMaxTransformDegree || m > kMaxTransformDegree) {
    throw RangeError("monomial_to_hermite: index out of range");
  }
  return basis_tables().to_hermite[j][m];
}

double hermite_to_monomial(int m, int j) {
  if (j < 0 || m < 0 || j > kMaxTransformDegree || m > kMaxTransformDegree) {
    throw RangeError("hermite_to_monomial: index out of range");
  }
  return basis_tables().to_monomial[m][j];
}

// ---------------------------------------------------------------------------
// MatrixPolynomial

MatrixPolynomial::MatrixPolynomial(int size) : size_(size) {
  if (size < 1) throw ParameterError("matrix size must be >= 1");
  coeffs_.push_back(CMatrix::Zero(size, size));
}

MatrixPolynomial::MatrixPolynomial(std::vector<CMatrix> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ParameterError("MatrixPolynomial needs at least one coefficient");
  size_ = static_cast<int>(coeffs_.front().rows());
  if (size_ < 1) throw ParameterError("matrix size must be >= 1");
  for (const auto& c : coeffs_) {
    if (c.rows() != size_ || c.cols() != size_) {
      throw ParameterError("MatrixPolynomial coefficients must all be N x N");
    }
  }
  trim();
}

MatrixPolynomial MatrixPolynomial::constant(const CMatrix& c) { return MatrixPolynomial({c}); }

MatrixPolynomial MatrixPolynomial::monomial(int size, int degree) {
  std::vector<CMatrix> c(static_cast<std::size_t>(degree) + 1, CMatrix::Zero(size, size));
  c.back().setIdentity();
  return MatrixPolynomial(std::move(c));
}

void MatrixPolynomial::trim() {
  while (coeffs_.size() > 1 && max_abs(coeffs_.back()) < kTrimThreshold) coeffs_.pop_back();
  if (coeffs_.size() == 1 && max_abs(coeffs_.front()) < kTrimThreshold) coeffs_.front().setZero();
}

bool MatrixPolynomial::is_zero() const { return degree() == 0 && max_abs(coeffs_.front()) == 0.0; }

double MatrixPolynomial::max_coeff_norm() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, max_abs(c));
  return m;
}

CMatrix MatrixPolynomial::operator()(double x) const {
  CMatrix acc = coeffs_.back();
  for (int j = degree() - 1; j >= 0; --j) acc = acc * x + coeffs_[j];
  return acc;
}

MatrixPolynomial& MatrixPolynomial::operator+=(const MatrixPolynomial& other) {
  require_same_size(size_, other.size_);
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), CMatrix::Zero(size_, size_));
  }
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  trim();
  return *this;
}

MatrixPolynomial& MatrixPolynomial::operator-=(const MatrixPolynomial& other) {
  require_same_size(size_, other.size_);
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), CMatrix::Zero(size_, size_));
  }
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  trim();
  return *this;
}

MatrixPolynomial& MatrixPolynomial::operator*=(Complex alpha) {
  for (auto& c : coeffs_) c *= alpha;
  trim();
  return *this;
}

MatrixPolynomial MatrixPolynomial::left_mul(const CMatrix& m) const {
  require_same_size(size_, static_cast<int>(m.rows()));
  if (m.cols() != size_) throw ParameterError("left_mul: matrix must be square");
  std::vector<CMatrix> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(m * c);
  return MatrixPolynomial(std::move(out));
}

MatrixPolynomial MatrixPolynomial::right_mul(const CMatrix& m) const {
  require_same_size(size_, static_cast<int>(m.rows()));
  if (m.cols() != size_) throw ParameterError("right_mul: matrix must be square");
  std::vector<CMatrix> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c * m);
  return MatrixPolynomial(std::move(out));
}

MatrixPolynomial MatrixPolynomial::poly_mul(const ScalarPoly& p) const {
  std::vector<CMatrix> out(coeffs_.size() + p.coeffs().size() - 1, CMatrix::Zero(size_, size_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) out[i + j] += p.coeffs()[j] * coeffs_[i];
  }
  return MatrixPolynomial(std::move(out));
}

MatrixPolynomial MatrixPolynomial::shifted(int k) const {
  if (k < 0) throw ParameterError("shifted: power must be >= 0");
  std::vector<CMatrix> out(static_cast<std::size_t>(k), CMatrix::Zero(size_, size_));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return MatrixPolynomial(std::move(out));
}

MatrixPolynomial MatrixPolynomial::derivative() const {
  if (degree() == 0) return MatrixPolynomial(size_);
  std::vector<CMatrix> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) out.push_back(static_cast<double>(j) * coeffs_[j]);
  return MatrixPolynomial(std::move(out));
}

MatrixPolynomial MatrixPolynomial::reflected() const {
  auto out = coeffs_;
  for (std::size_t j = 1; j < out.size(); j += 2) out[j] = -out[j];
  return MatrixPolynomial(std::move(out));
}

MatrixPolynomial MatrixPolynomial::adjoint() const {
  std::vector<CMatrix> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.adjoint());
  return MatrixPolynomial(std::move(out));
}

MatrixPolynomial operator+(MatrixPolynomial a, const MatrixPolynomial& b) { return a += b; }
MatrixPolynomial operator-(MatrixPolynomial a, const MatrixPolynomial& b) { return a -= b; }
MatrixPolynomial operator*(Complex alpha, MatrixPolynomial p) { return p *= alpha; }

MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  require_same_size(a.size(), b.size());
  const int n = a.size();
  std::vector<CMatrix> out(a.coeffs().size() + b.coeffs().size() - 1, CMatrix::Zero(n, n));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return MatrixPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------
// MatrixGaussian

CMatrix MatrixGaussian::operator()(double x) const { return poly_(x) * std::exp(-0.5 * x * x); }

MatrixGaussian& MatrixGaussian::operator+=(const MatrixGaussian& other) {
  poly_ += other.poly_;
  return *this;
}

MatrixGaussian& MatrixGaussian::operator-=(const MatrixGaussian& other) {
  poly_ -= other.poly_;
  return *this;
}

MatrixGaussian& MatrixGaussian::operator*=(Complex alpha) {
  poly_ *= alpha;
  return *this;
}

MatrixGaussian MatrixGaussian::derivative() const {
  return MatrixGaussian(poly_.derivative() - poly_.shifted(1));
}

MatrixGaussian operator+(MatrixGaussian a, const MatrixGaussian& b) { return a += b; }
MatrixGaussian operator-(MatrixGaussian a, const MatrixGaussian& b) { return a -= b; }
MatrixGaussian operator*(Complex alpha, MatrixGaussian f) { return f *= alpha; }

MatrixGaussian fourier_transform(const MatrixGaussian& f, Direction direction) {
  const int d = f.degree();
  if (d > kMaxTransformDegree) {
    throw RangeError("fourier_transform: degree " + std::to_string(d) + " exceeds cap " +
                     std::to_string(kMaxTransformDegree));
  }
  const int n = f.size();
  const auto& tables = basis_tables();
  const auto& c = f.coeffs();

  std::vector<CMatrix> hermite(static_cast<std::size_t>(d) + 1, CMatrix::Zero(n, n));
  for (int j = 0; j <= d; ++j) {
    for (int m = j; m >= 0; m -= 2) hermite[m] += tables.to_hermite[j][m] * c[j];
  }
  const Complex unit = direction == Direction::Forward ? kI : -kI;
  Complex phase = 1.0;
  for (auto& h : hermite) {
    h *= phase;
    phase *= unit;
  }
  std::vector<CMatrix> out(static_cast<std::size_t>(d) + 1, CMatrix::Zero(n, n));
  for (int m = 0; m <= d; ++m) {
    for (int j = m; j >= 0; j -= 2) out[j] += tables.to_monomial[m][j] * hermite[m];
  }
  return MatrixGaussian(MatrixPolynomial(std::move(out)));
}

}  // namespace matschroed
