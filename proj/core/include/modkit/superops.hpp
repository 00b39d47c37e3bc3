#pragma once

// Multiplication superoperators on d x d matrices.
//
// Two conventions coexist and are kept apart by name:
//   BoxTimes{A, B}   acts as X -> A X B*   (note the adjoint on B)
//   left_mult(A)     acts as X -> A X
//   right_mult(B)    acts as X -> X B      (stored as 1 [x] B*)
// Only factors are stored; to_dense() exists for oracles.

#include "modkit/matrix_core.hpp"

namespace modkit {

struct BoxTimes {
  ComplexMatrix left;
  ComplexMatrix right;

  /// A ⊠ B composed with another: (A1 ⊠ B1)(A2 ⊠ B2) = A1 A2 ⊠ B1 B2.
  BoxTimes then_after(const BoxTimes& inner) const;
  /// Adjoint w.r.t. the Hilbert-Schmidt inner product: A* ⊠ B*.
  BoxTimes adjoint() const;
  /// A (x) conj(B), acting on row-major vec(X).
  ComplexMatrix to_dense() const;
};

/// A X B*. Throws ShapeMismatch.
ComplexMatrix boxtimes_apply(const BoxTimes& op, const ComplexMatrix& x);

BoxTimes operator*(const BoxTimes& outer, const BoxTimes& inner);

/// L_A(X) = AX. Throws NotSquare.
BoxTimes left_mult(const ComplexMatrix& a);
/// R_B(X) = XB. Throws NotSquare.
BoxTimes right_mult(const ComplexMatrix& b);

enum class MultiplicationSide { Left, Right };

/// f(L_A) = L_{f(A)} and f(R_A) = R_{f(A)} for PSD A. Throws DomainError.
BoxTimes superop_function(MultiplicationSide side, const ComplexMatrix& a, const ScalarFunction& f,
                          SpectralDomain domain = SpectralDomain::NonNegative);

/// Delta_{A,B} = L_A R_B^{-1} for positive definite B.
BoxTimes relative_modular_superop(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace modkit
