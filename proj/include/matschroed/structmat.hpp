#pragma once

// Structured matrices used throughout: the nilpotent shift A (parameters on the
// first superdiagonal), the level diagonal J = diag(N-1, ..., 0), the phase
// diagonals i^{kJ} and the sin/cos diagonals of (pi/2)J.

#include <span>
#include <vector>

#include "matschroed/types.hpp"

namespace matschroed {

struct StructuredPair {
  int size = 1;
  std::vector<double> nu;
  RMatrix shift;  // A, nonzero only at (j, j+1) = nu_j
  RMatrix level;  // J
};

/// Builds A and J for size n. `nu` must have exactly n-1 entries.
StructuredPair build_structured(int n, std::span<const double> nu);

/// Unitary diagonal with entry j (0-based) equal to i^{k(n-1-j)}.
struct PhaseDiag {
  int size = 1;
  int k = 0;  // reduced to 0..3
  CVector values;

  CMatrix matrix() const;
};

PhaseDiag phase_diag(int n, int k);

enum class Trig { Sin, Cos };

/// Real diagonal with entry j equal to sin or cos of (pi/2)(n-1-j); the entries
/// are exactly -1, 0 or 1.
struct TrigDiag {
  int size = 1;
  Trig kind = Trig::Sin;
  RVector values;

  RMatrix matrix() const;
};

TrigDiag trig_diag(int n, Trig kind);

/// Evaluates f(A) = sum_j taylor[j] A^j / j! for nilpotent A, where
/// taylor[j] = f^(j)(0). Throws DomainError when ||A^N||_max >= 1e-12 and
/// ParameterError when fewer than N Taylor values are supplied.
CMatrix nilpotent_series(std::span<const Complex> taylor, const CMatrix& a);

/// Derivatives at 0 of x -> exp(scale x): scale^j.
std::vector<Complex> exp_taylor(int terms, Complex scale = 1.0);

/// Derivatives at 0 of x -> (1 + x)^exponent: exponent (exponent-1) ... .
std::vector<Complex> binomial_taylor(int terms, double exponent);

/// XY - YX.
CMatrix commutator(const CMatrix& x, const CMatrix& y);

}  // namespace matschroed
