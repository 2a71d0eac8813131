#pragma once

// The two concrete families of matrix-valued orthogonal functions.
//
// Kind 1 (linear exponent):    W(x) = e^{-x^2} e^{Ax} e^{A^*x},
//                              P_n = e^{-A^2/4} Phat_n,
//                              Phi_n(x) = e^{-x^2/2} P_n(x) e^{Ax}.
// Kind 2 (quadratic exponent): W(x) = e^{-x^2} e^{Bx^2} e^{B^*x^2}, B = A(I+A)^{-1},
//                              P_n = [(I+A)^{-1/2}]^{2n+1} Phat_n,
//                              Phi_n(x) = e^{-x^2/2} P_n(x) e^{Bx^2}.
//
// Phat_n are the monic orthogonal polynomials for W. Since A is nilpotent the
// right factors e^{Ax} and e^{Bx^2} are matrix polynomials, so every Phi_n is an
// exact MatrixGaussian.

#include <memory>
#include <optional>
#include <vector>

#include "matschroed/hermite.hpp"
#include "matschroed/matpoly.hpp"
#include "matschroed/structmat.hpp"

namespace matschroed {

enum class FamilyKind : int { Linear = 1, Quadratic = 2 };

struct FamilySpec {
  FamilyKind kind = FamilyKind::Linear;
  int size = 1;
  std::vector<double> nu;

  /// Throws ParameterError unless size >= 1 and nu has size-1 entries.
  void validate() const;
  int kind_index() const { return static_cast<int>(kind); }
};

FamilyKind family_kind_from_int(int kind);

/// Coefficient c in the potential x^2 I + cJ (2 for kind 1, 4 for kind 2).
int potential_scale(FamilyKind kind);
/// k in the kernel e^{ixt} e^{i pi k J / 2} (1 for kind 1, 2 for kind 2).
int phase_index(FamilyKind kind);

/// Right factor T(x) (e^{Ax} or e^{Bx^2}) as a matrix polynomial.
MatrixPolynomial right_factor(const FamilySpec& spec);

/// Degree of T in x: N-1 for kind 1, 2(N-1) for kind 2.
int right_factor_degree(const FamilySpec& spec);

/// W(x) = e^{-x^2} T(x) T(x)^*.
RMatrix weight_eval(const FamilySpec& spec, double x);

/// L_n: e^{-A^2/4} (kind 1) or [(I+A)^{-1/2}]^{2n+1} (kind 2).
CMatrix normalizer(const FamilySpec& spec, int n);

/// Smallest Gauss-Hermite order that integrates every weighted inner product
/// among degree <= n_max polynomials exactly.
int required_quad_order(const FamilySpec& spec, int n_max);
/// Default order: required + 8.
int auto_quad_order(const FamilySpec& spec, int n_max);

/// <P, Q>_W = int P(x) W(x) Q(x)^* dx, exact under `rule` when its order
/// covers the degrees involved.
CMatrix weighted_inner(const MatrixPolynomial& p, const MatrixPolynomial& q,
                       const MatrixPolynomial& right, const QuadratureRule& rule);

struct FamilyContext {
  FamilySpec spec;
  StructuredPair structured;
  std::vector<Complex> right_factor_taylor;  // exp series driving T
  MatrixPolynomial right;                    // T(x)
  int n_max = 0;
  std::shared_ptr<const QuadratureRule> rule;

  std::vector<MatrixPolynomial> monic;   // Phat_n, identity leading coefficient
  std::vector<CMatrix> normalizers;      // L_n
  std::vector<MatrixPolynomial> polys;   // P_n = L_n Phat_n
  std::vector<RVector> norm_squared;     // diagonal of ||P_n||_W^2
  std::vector<MatrixGaussian> phi;       // Phi_n
  std::vector<MatrixGaussian> phi_tilde; // ||P_n||_W^{-1} Phi_n

  int size() const { return spec.size; }
  FamilyKind kind() const { return spec.kind; }
  RMatrix norm_matrix(int n) const { return norm_squared.at(static_cast<std::size_t>(n)).asDiagonal(); }
};

/// Gram-Schmidt construction of the family up to degree n_max. quad_order
/// defaults to auto_quad_order; an explicit order below required_quad_order is
/// a ParameterError. A computed norm with relative off-diagonal mass above 1e-8
/// raises ConsistencyError.
FamilyContext build_family(const FamilySpec& spec, int n_max,
                           std::optional<int> quad_order = std::nullopt);

// ---------------------------------------------------------------------------
// N = 2 closed forms

struct GammaSeq {
  std::vector<double> values;
  double operator[](int n) const { return values.at(static_cast<std::size_t>(n)); }
};

/// gamma_n = 1 + n nu^2 / 2 (kind 1) or 1 + (nu^2/2) binom(n, 2) (kind 2).
GammaSeq gamma_seq(const FamilySpec& spec, int n_max);

/// Explicit P_n for N = 2 in terms of physicists' Hermite polynomials.
MatrixPolynomial closed_form_poly_N2(const FamilySpec& spec, int n);

/// Explicit normalized Phi~_n for N = 2 in terms of wave functions.
MatrixGaussian closed_form_N2(const FamilySpec& spec, int n);

/// (n! sqrt(pi) / 2^n) diag(gamma_{n+1}, 1/gamma_n) for kind 1 and
/// (n! sqrt(pi) / 2^n) diag(gamma_{n+2}, 1/gamma_n) for kind 2.
RMatrix closed_form_norm_N2(const FamilySpec& spec, int n);

/// Closed-form block int x^power Phi~_n Phi~_m^* dx for N = 2, power in {1, 2}.
RMatrix closed_form_matrix_element_N2(const FamilySpec& spec, int power, int n, int m);

/// Flips the sign of each row so that the diagonal entry's lowest-order
/// nonzero coefficient is positive.
MatrixGaussian normalize_row_signs(const MatrixGaussian& f);

}  // namespace matschroed
