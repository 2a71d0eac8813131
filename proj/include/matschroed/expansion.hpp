#pragma once

// Inner products, expansion in the orthonormal family and the matrix of
// multiplication by x^k in that basis.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "matschroed/families.hpp"
#include "matschroed/matpoly.hpp"

namespace matschroed {

/// <F, G> = int F(x) G(x)^* dx, exact by Gauss-Hermite. Sizes must match.
CMatrix inner_product(const MatrixGaussian& f, const MatrixGaussian& g,
                      std::optional<int> quad_order = std::nullopt);

/// <P, Q>_W = int P(x) W(x) Q(x)^* dx for the weight of `spec`.
CMatrix inner_product(const MatrixPolynomial& p, const MatrixPolynomial& q, const FamilySpec& spec,
                      std::optional<int> quad_order = std::nullopt);

/// (F, G) = Tr <F, G>.
Complex scalar_product(const MatrixGaussian& f, const MatrixGaussian& g);

struct CoefficientExpansion {
  FamilySpec spec;
  int n_max = 0;
  std::vector<CMatrix> coeffs;  // C_0..C_{n_max}
};

enum class ExpandMode {
  Strict,   // inputs outside span{Phi~_0..Phi~_{n_max}} are rejected
  Project,  // orthogonal projection onto that span
};

/// Writes F(x) = Q(x) T(x) e^{-x^2/2} and returns deg Q, the smallest n with F
/// in span{Phi~_0..Phi~_n}. Coefficients of Q below tol (relative) count as 0.
int span_degree(const MatrixGaussian& f, const FamilyContext& ctx, double tol = 1e-10);

/// C_n = <F, Phi~_n>. In Strict mode F outside the span raises RangeError.
CoefficientExpansion expand(const MatrixGaussian& f, const FamilyContext& ctx,
                            ExpandMode mode = ExpandMode::Strict);

/// sum_n C_n Phi~_n.
MatrixGaussian reconstruct(const CoefficientExpansion& e, const FamilyContext& ctx);

/// (F F_k) F_k^{-1}.
MatrixGaussian transform_round_trip(const MatrixGaussian& f, int k);

/// (x^power I)_{nm} = int x^power Phi~_n(x) Phi~_m(x)^* dx.
CMatrix matrix_element(const FamilyContext& ctx, int power, int n, int m);

struct BandMatrix {
  int size = 1;
  int n_max = 0;
  int power = 1;
  double threshold = 1e-10;
  std::vector<std::vector<CMatrix>> blocks;  // blocks[n][m]
  CMatrix flat;                              // entry (N n + i, N m + j)
  std::vector<std::vector<bool>> mask;       // |flat| > threshold

  /// One line per flat row, '*' for a nonzero entry and '.' otherwise.
  std::string mask_string() const;
};

BandMatrix band_pattern(const FamilyContext& ctx, int power, int n_max, double threshold = 1e-10);

/// Flattened matrix as CSV: header c0_re,c0_im,..., one line per row.
void write_csv(const BandMatrix& band, std::ostream& out);

/// Entry (i, j) (0-based) of Phi~_n(x) Phi~_n(x)^*.
Complex product_density(const FamilyContext& ctx, int n, int i, int j, double x);

}  // namespace matschroed
