#pragma once

// Operator-vector correspondence.
//
// vec uses ROW-major stacking: vec(E_{mu,nu}) = e_mu (x) e_nu, so component
// (mu, nu) of a dY x dX operator sits at index mu * dX + nu. Under this
// convention (A (x) B) vec(X) = vec(A X B^T). Column stacking would flip that
// identity, and every Kronecker formula downstream (for instance the relative
// modular operator D_phi (x) (D_omega^{-1})^T) depends on this choice.

#include <cstddef>

#include "modkit/matrix_core.hpp"

namespace modkit {

/// Element of Y (x) X with explicit factor dimensions.
struct BipartiteVector {
  Eigen::Index dim_left = 0;   // dY
  Eigen::Index dim_right = 0;  // dX
  ComplexVector amplitudes;    // length dY * dX

  BipartiteVector() = default;
  BipartiteVector(Eigen::Index left, Eigen::Index right, ComplexVector amps);

  static BipartiteVector zero(Eigen::Index left, Eigen::Index right);
  /// u (x) v
  static BipartiteVector product(const ComplexVector& left, const ComplexVector& right);

  Complex operator()(Eigen::Index mu, Eigen::Index nu) const { return amplitudes(mu * dim_right + nu); }
  Complex& operator()(Eigen::Index mu, Eigen::Index nu) { return amplitudes(mu * dim_right + nu); }

  double norm() const { return amplitudes.norm(); }
  bool same_dims(const BipartiteVector& other) const {
    return dim_left == other.dim_left && dim_right == other.dim_right;
  }

  BipartiteVector& operator+=(const BipartiteVector& other);
  BipartiteVector& operator-=(const BipartiteVector& other);
  BipartiteVector& operator*=(Complex c);
};

BipartiteVector operator+(BipartiteVector a, const BipartiteVector& b);
BipartiteVector operator-(BipartiteVector a, const BipartiteVector& b);
BipartiteVector operator*(Complex c, BipartiteVector v);

/// <a, b>, antilinear in the first slot. Throws ShapeMismatch.
Complex inner(const BipartiteVector& a, const BipartiteVector& b);

BipartiteVector vec(const ComplexMatrix& a);
ComplexMatrix unvec(const BipartiteVector& v);

/// (A (x) B) vec(X) = vec(A X B^T), evaluated without forming the Kronecker product.
BipartiteVector kron_apply_vec(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x);

enum class TraceSide {
  Left,   // trace out Y: (B* A)^T
  Right,  // trace out X: A B*
};

/// Partial trace of |v><w| where v = vec(A), w = vec(B).
ComplexMatrix partial_trace(const BipartiteVector& v, const BipartiteVector& w, TraceSide side);

/// The swap P on C^d (x) C^d as a d^2 x d^2 permutation matrix: P(x (x) y) = y (x) x.
ComplexMatrix swap_operator(Eigen::Index d);

/// Entrywise complex conjugation K in the standard basis.
BipartiteVector conjugate_vec(const BipartiteVector& v);

/// Bipartite reordering for operators on (Y_A (x) Y_B) <- (X_A (x) X_B):
/// vec(|m><n| (x) |mu><nu|) = |m n mu nu>. Returns the vector in that basis
/// order, given the factor dimensions of the two tensor factors.
ComplexVector vec_bipartite(const ComplexMatrix& x, Eigen::Index rows_a, Eigen::Index cols_a,
                            Eigen::Index rows_b, Eigen::Index cols_b);

/// Outer tensor product u (x) v of two plain vectors.
ComplexVector tensor(const ComplexVector& u, const ComplexVector& v);

}  // namespace modkit
