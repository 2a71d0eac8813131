#pragma once

// The Schroedinger-type and Fourier-type operators and residual checks for the
// identities they satisfy on each family.

#include <optional>
#include <string>
#include <vector>

#include "matschroed/families.hpp"
#include "matschroed/matpoly.hpp"
#include "matschroed/structmat.hpp"

namespace matschroed {

inline constexpr double kDefaultResidualTolerance = 1e-9;

struct ResidualReport {
  double max_coeff_norm = 0.0;  // relative, coefficient space
  double max_pointwise = 0.0;   // on the fixed check grid
  double max_imaginary = 0.0;   // only filled by the real-equation checks
  int n = 0;
  std::string variant;
  double tolerance = kDefaultResidualTolerance;

  bool passed() const { return max_coeff_norm < tolerance; }
};

/// x values used for pointwise reporting.
const std::vector<double>& check_grid();

/// F -> F'' - F (x^2 I + c J).
MatrixGaussian apply_schrodinger(const MatrixGaussian& f, const RMatrix& level, int potential_scale);

/// F -> (1/sqrt(2 pi)) int F(t) e^{+-ixt} dt e^{+-i pi k J / 2}; the inverse
/// direction uses e^{-ixt} and e^{-i pi k J / 2}.
MatrixGaussian apply_fourier_type(const MatrixGaussian& f, int k, Direction direction = Direction::Forward);

/// Residual of Phi_n'' - Phi_n (x^2 I + cJ) + ((2n+1) I + cJ) Phi_n, divided by
/// the largest coefficient of Phi_n.
ResidualReport schrodinger_residual(const FamilyContext& ctx, int n,
                                    double tolerance = kDefaultResidualTolerance);

/// Order used by quadrature_transform when none is given.
int default_transform_order(int degree);

/// Direct numerical evaluation of (1/sqrt(2 pi)) int f(t) e^{+-ixt} dt e^{+-i pi k J/2}
/// with Gauss-Hermite after substituting t = sqrt(2) s. Requires
/// quad_order >= degree/2 + 8.
CMatrix quadrature_transform(const MatrixGaussian& f, int k, double x,
                             std::optional<int> quad_order = std::nullopt,
                             Direction direction = Direction::Forward);

/// Residual of FT(Phi_n) e^{i pi k J/2} - i^p e^{i pi k J/2} Phi_n with k chosen
/// by the family kind; p defaults to n.
ResidualReport fourier_eigen_residual(const FamilyContext& ctx, int n,
                                      std::optional<int> eigen_power = std::nullopt,
                                      double tolerance = kDefaultResidualTolerance);

enum class SymmetryTarget { Function, Polynomial };

/// Reflection identity: Phi_n(x) = (-1)^n E Phi_n(-x) E with E = e^{i pi J} for
/// kind 1 (same for P_n), and Phi_n(x) = (-1)^n Phi_n(-x) for kind 2.
ResidualReport symmetry_residual(const FamilyContext& ctx, int n, SymmetryTarget target,
                                 double tolerance = 1e-12);

/// One of the four multiplier combinations of the kind-1 real integral
/// equations. `left` is the diagonal in front of the integral (cos for the +
/// sign, sin for the - sign) and `right` multiplies the left-hand side on the
/// right. left == right gives the form with kernel k_n, otherwise k_{n+1}.
struct MultiplierPair {
  Trig left = Trig::Cos;
  Trig right = Trig::Cos;

  int sign() const { return left == Trig::Cos ? 1 : -1; }
  bool same_parity_kernel() const { return left == right; }
  std::string label() const;
};

std::vector<MultiplierPair> all_multiplier_pairs();

/// Kind-1 real equation for the given multiplier pair, evaluated pointwise on
/// check_grid(). max_coeff_norm holds the pointwise residual relative to
/// max(1, max |Phi_n|) on the grid.
ResidualReport real_integral_residual(const FamilyContext& ctx, int n, MultiplierPair pair,
                                      double tolerance = 1e-8);

enum class KernelChoice {
  Matching,       // cos for even n, sin for odd n: the equation must hold
  Complementary,  // the other kernel: the integral must vanish
};

/// Kind-2 real equations e^{i pi J} Phi_n(x) = (-1)^{floor(n/2)}/sqrt(2 pi)
/// int Phi_n(t) k_n(x,t) dt e^{i pi J}.
ResidualReport real_integral_residual(const FamilyContext& ctx, int n, KernelChoice choice,
                                      double tolerance = 1e-8);

/// Which rows and entries of P_n the four kind-1 multiplier pairs constrain.
struct CoverageReport {
  std::vector<bool> rows;
  std::vector<std::vector<bool>> entries;

  bool all_rows() const;
  bool all_entries() const;
};

CoverageReport real_equation_coverage(int size);

}  // namespace matschroed
