#pragma once

// Normal states on B(H_d) represented by density matrices.

#include "modkit/vec_ops.hpp"

namespace modkit {

inline constexpr double kStateTol = 1e-10;
inline constexpr double kSingularityTol = 1e-12;

/// A normal positive linear functional phi(M) = Tr(D M) with D PSD; the
/// trace is unconstrained.
class PositiveFunctional {
 public:
  /// Throws NotPSD.
  explicit PositiveFunctional(const ComplexMatrix& matrix);

  const ComplexMatrix& matrix() const { return matrix_; }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  Eigen::Index dim() const { return matrix_.rows(); }

  /// phi(1)
  double total() const { return matrix_.trace().real(); }
  Complex operator()(const ComplexMatrix& m) const;

  /// D^s via the cached spectrum (NonNegative domain; s = 0 gives the identity).
  ComplexMatrix power(double s) const;

 protected:
  ComplexMatrix matrix_;
  SpectralDecomposition spectrum_;
};

/// PSD with unit trace.
class DensityMatrix : public PositiveFunctional {
 public:
  /// Throws NotPSD / NotDensityMatrix.
  explicit DensityMatrix(const ComplexMatrix& matrix);

  static DensityMatrix maximally_mixed(Eigen::Index d);
  static DensityMatrix diagonal(const RealVector& probabilities);
};

/// vec(D^{1/2}): the purification that lies in the natural cone.
BipartiteVector purify(const PositiveFunctional& state);

/// <Omega, (M (x) 1) Omega>. Throws ShapeMismatch.
Complex evaluate_state(const BipartiteVector& omega_vec, const ComplexMatrix& m);

/// lambda_min > singularity_tol * lambda_max
bool is_faithful(const PositiveFunctional& state, double singularity_tol = kSingularityTol);

/// Throws SingularState unless the functional is faithful.
void require_faithful(const PositiveFunctional& state, double singularity_tol = kSingularityTol);

/// |phi1 - phi2|(1) = ||D1 - D2||_1. Throws ShapeMismatch.
double functional_distance(const PositiveFunctional& phi1, const PositiveFunctional& phi2);

}  // namespace modkit
