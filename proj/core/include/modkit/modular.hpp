#pragma once

// Modular theory of B(H_d) in the standard form pi(X) = X (x) 1 acting on
// C^d (x) C^d with cyclic separating vector Omega = vec(D_omega^{1/2}).
//
// Two independent routes to the relative modular operator are provided:
//   * first principles: assemble S_{phi,omega} column by column from its
//     action on the basis vec(E_{mu nu}), then Delta = S* S;
//   * closed form: Delta_{phi,omega} = D_phi (x) (D_omega^{-1})^T.
// The transpose is taken in the standard basis, consistent with row-major vec.

#include <vector>

#include "modkit/states.hpp"

namespace modkit {

inline constexpr double kModularTol = 1e-10;

/// Linear or antilinear operator on C^d (x) C^d. An antilinear operator with
/// matrix M acts as v -> M conj(v).
class SuperOperator {
 public:
  SuperOperator(ComplexMatrix matrix, bool antilinear);

  static SuperOperator linear(ComplexMatrix matrix) { return {std::move(matrix), false}; }
  static SuperOperator antilinear(ComplexMatrix matrix) { return {std::move(matrix), true}; }
  static SuperOperator identity(Eigen::Index d);

  Eigen::Index dim() const { return d_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  bool is_antilinear() const { return antilinear_; }

  ComplexVector apply(const ComplexVector& v) const;
  BipartiteVector apply(const BipartiteVector& v) const;

  /// Hilbert-space adjoint: M* for linear maps, M^T for antilinear ones.
  SuperOperator adjoint() const;

  /// Dense spectral power of a linear PSD operator (exponent 0 gives the identity).
  SuperOperator power(double exponent) const;
  /// Dense Delta^{it} of a linear positive definite operator.
  SuperOperator imaginary_power(double t) const;

  /// Spectrum of a linear Hermitian operator, ascending.
  RealVector spectrum() const;

 private:
  Eigen::Index d_;
  ComplexMatrix matrix_;
  bool antilinear_;
};

/// Composition (lhs o rhs). Antilinear lhs conjugates the matrix of rhs.
SuperOperator operator*(const SuperOperator& lhs, const SuperOperator& rhs);

/// Operator-norm-free residual ||A - B||_HS of the representing matrices.
/// Throws ShapeMismatch when the two operators differ in linearity.
double residual(const SuperOperator& a, const SuperOperator& b);

/// pi(M) = M (x) 1
ComplexMatrix left_representation(const ComplexMatrix& m);
/// 1 (x) N, an element of the commutant pi(M)'.
ComplexMatrix commutant_representation(const ComplexMatrix& n);

/// S_{phi,omega} vec(X) = vec(D_omega^{-1/2} X* D_phi^{1/2}), assembled from
/// its action on basis matrices. Throws SingularState if omega is not faithful.
SuperOperator relative_s_matrix(const PositiveFunctional& phi, const PositiveFunctional& omega);

/// F_{phi,omega} vec(Y) = vec(D_phi^{1/2} Y* D_omega^{-1/2}), assembled the same way.
SuperOperator relative_f_matrix(const PositiveFunctional& phi, const PositiveFunctional& omega);

/// Closed form D_phi (x) (D_omega^{-1})^T.
SuperOperator relative_modular_operator(const PositiveFunctional& phi, const PositiveFunctional& omega);

/// First-principles route S* S.
SuperOperator relative_modular_operator_from_s(const PositiveFunctional& phi, const PositiveFunctional& omega);

/// Delta_{phi,omega}^{it} = D_phi^{it} (x) (D_omega^{-it})^T. Both states must be faithful.
SuperOperator relative_modular_unitary(const PositiveFunctional& phi, const PositiveFunctional& omega, double t);

/// J vec(X) = vec(X*), i.e. swap o conjugation.
SuperOperator modular_conjugation(Eigen::Index d);

/// sigma^omega_t(A) = D^{it} A D^{-it}, the modular automorphism group in modular time.
ComplexMatrix modular_flow(const PositiveFunctional& omega, const ComplexMatrix& a, double t);

/// [D phi : D omega]_t = D_phi^{it} D_omega^{-it}; pi of it equals Delta^{it}_{phi,omega} Delta^{-it}_{omega,omega}.
ComplexMatrix connes_cocycle(const PositiveFunctional& phi, const PositiveFunctional& omega, double t);

class StandardForm {
 public:
  /// Throws SingularState.
  explicit StandardForm(const DensityMatrix& state);

  /// Accepts an unnormalized cyclic separating cone vector vec(X), X > 0, e.g. vec(1_d).
  /// Stores the unit-norm Omega and records the original norm in scale().
  static StandardForm from_cone_vector(const BipartiteVector& omega);

  Eigen::Index dim() const { return state_.dim(); }
  const DensityMatrix& state() const { return state_; }
  const BipartiteVector& omega_vec() const { return omega_vec_; }
  double scale() const { return scale_; }

  SuperOperator s_operator() const { return relative_s_matrix(state_, state_); }
  SuperOperator f_operator() const { return relative_f_matrix(state_, state_); }
  SuperOperator modular_operator() const { return relative_modular_operator(state_, state_); }
  SuperOperator modular_conjugation() const { return modkit::modular_conjugation(dim()); }

 private:
  StandardForm(DensityMatrix state, double scale);

  DensityMatrix state_;
  BipartiteVector omega_vec_;
  double scale_ = 1.0;
};

struct TomitaTakesakiReport {
  double max_commutator = 0.0;     // max ||[J pi(M) J, pi(N)]||_HS over sample pairs
  double max_flow_residual = 0.0;  // max ||Delta^{it} pi(M) Delta^{-it} - pi(sigma_t(M))||_HS
  std::size_t checks = 0;
  bool pass = false;
};

/// J pi(M) J lies in pi(M)' and Delta^{it} pi(M) Delta^{-it} stays in pi(M), checked densely.
TomitaTakesakiReport verify_tomita_takesaki(const DensityMatrix& omega, const std::vector<ComplexMatrix>& samples,
                                            const std::vector<double>& t_grid, double threshold = kModularTol);

}  // namespace modkit
