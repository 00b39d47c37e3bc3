#include "modkit/modular.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modkit/errors.hpp"
#include "modkit/schmidt.hpp"

namespace modkit {

namespace {

Eigen::Index side_dimension(const ComplexMatrix& m) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(m.rows()))));
  if (m.rows() != m.cols() || d * d != m.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "superoperator matrix must be d^2 x d^2");
  }
  return d;
}

void require_same_dim(const PositiveFunctional& phi, const PositiveFunctional& omega) {
  if (phi.dim() != omega.dim()) throw Error(ErrorCode::ShapeMismatch, "states act on different dimensions");
}

// Assembles the matrix of an antilinear map from its action on the real basis
// vec(E_{mu nu}); conj(e_k) = e_k so column k is the image of e_k.
template <typename BasisAction>
SuperOperator assemble_antilinear(Eigen::Index d, BasisAction&& action) {
  ComplexMatrix m(d * d, d * d);
  for (Eigen::Index mu = 0; mu < d; ++mu) {
    for (Eigen::Index nu = 0; nu < d; ++nu) {
      ComplexMatrix basis = ComplexMatrix::Zero(d, d);
      basis(mu, nu) = 1.0;
      m.col(mu * d + nu) = vec(action(basis)).amplitudes;
    }
  }
  return SuperOperator::antilinear(std::move(m));
}

}  // namespace

SuperOperator::SuperOperator(ComplexMatrix matrix, bool antilinear)
    : d_(side_dimension(matrix)), matrix_(std::move(matrix)), antilinear_(antilinear) {}

SuperOperator SuperOperator::identity(Eigen::Index d) { return linear(ComplexMatrix::Identity(d * d, d * d)); }

ComplexVector SuperOperator::apply(const ComplexVector& v) const {
  if (v.size() != matrix_.cols()) throw Error(ErrorCode::ShapeMismatch, "vector length does not match superoperator");
  return antilinear_ ? ComplexVector(matrix_ * v.conjugate()) : ComplexVector(matrix_ * v);
}

BipartiteVector SuperOperator::apply(const BipartiteVector& v) const {
  if (v.dim_left != d_ || v.dim_right != d_) throw Error(ErrorCode::ShapeMismatch, "vector dims do not match");
  return {d_, d_, apply(v.amplitudes)};
}

SuperOperator SuperOperator::adjoint() const {
  // <u, M conj(v)> = <v, M^T conj(u)>
  return antilinear_ ? antilinear(matrix_.transpose()) : linear(matrix_.adjoint());
}

SuperOperator SuperOperator::power(double exponent) const {
  if (antilinear_) throw Error(ErrorCode::DomainError, "spectral power of an antilinear operator");
  return linear(matrix_power(matrix_, exponent));
}

SuperOperator SuperOperator::imaginary_power(double t) const {
  if (antilinear_) throw Error(ErrorCode::DomainError, "spectral power of an antilinear operator");
  return linear(modkit::imaginary_power(matrix_, t));
}

RealVector SuperOperator::spectrum() const {
  if (antilinear_) throw Error(ErrorCode::DomainError, "spectrum of an antilinear operator");
  return spectral_decompose(matrix_).eigenvalues;
}

SuperOperator operator*(const SuperOperator& lhs, const SuperOperator& rhs) {
  if (lhs.dim() != rhs.dim()) throw Error(ErrorCode::ShapeMismatch, "composing superoperators of different dims");
  // (A K)(B K) v = A conj(B) v;  (A K)(B) v = A conj(B) conj(v);  A (B K) v = A B conj(v)
  ComplexMatrix m = lhs.is_antilinear() ? ComplexMatrix(lhs.matrix() * rhs.matrix().conjugate())
                                        : ComplexMatrix(lhs.matrix() * rhs.matrix());
  return {std::move(m), lhs.is_antilinear() != rhs.is_antilinear()};
}

double residual(const SuperOperator& a, const SuperOperator& b) {
  if (a.is_antilinear() != b.is_antilinear() || a.dim() != b.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "comparing operators of different linearity or size");
  }
  return (a.matrix() - b.matrix()).norm();
}

ComplexMatrix left_representation(const ComplexMatrix& m) {
  return kron(m, ComplexMatrix::Identity(m.rows(), m.rows()));
}

ComplexMatrix commutant_representation(const ComplexMatrix& n) {
  return kron(ComplexMatrix::Identity(n.rows(), n.rows()), n);
}

SuperOperator relative_s_matrix(const PositiveFunctional& phi, const PositiveFunctional& omega) {
  require_same_dim(phi, omega);
  require_faithful(omega);
  const ComplexMatrix omega_inv_sqrt = omega.power(-0.5);
  const ComplexMatrix phi_sqrt = phi.power(0.5);
  return assemble_antilinear(phi.dim(), [&](const ComplexMatrix& x) -> ComplexMatrix {
    return omega_inv_sqrt * x.adjoint() * phi_sqrt;
  });
}

SuperOperator relative_f_matrix(const PositiveFunctional& phi, const PositiveFunctional& omega) {
  require_same_dim(phi, omega);
  require_faithful(omega);
  const ComplexMatrix omega_inv_sqrt = omega.power(-0.5);
  const ComplexMatrix phi_sqrt = phi.power(0.5);
  return assemble_antilinear(phi.dim(), [&](const ComplexMatrix& y) -> ComplexMatrix {
    return phi_sqrt * y.adjoint() * omega_inv_sqrt;
  });
}

SuperOperator relative_modular_operator(const PositiveFunctional& phi, const PositiveFunctional& omega) {
  require_same_dim(phi, omega);
  require_faithful(omega);
  return SuperOperator::linear(kron(phi.matrix(), omega.power(-1.0).transpose()));
}

SuperOperator relative_modular_operator_from_s(const PositiveFunctional& phi, const PositiveFunctional& omega) {
  const SuperOperator s = relative_s_matrix(phi, omega);
  return s.adjoint() * s;
}

SuperOperator relative_modular_unitary(const PositiveFunctional& phi, const PositiveFunctional& omega, double t) {
  require_same_dim(phi, omega);
  require_faithful(phi);
  require_faithful(omega);
  return SuperOperator::linear(
      kron(imaginary_power(phi.matrix(), t), imaginary_power(omega.matrix(), -t).transpose()));
}

SuperOperator modular_conjugation(Eigen::Index d) { return SuperOperator::antilinear(swap_operator(d)); }

ComplexMatrix modular_flow(const PositiveFunctional& omega, const ComplexMatrix& a, double t) {
  require_faithful(omega);
  if (a.rows() != omega.dim() || a.cols() != omega.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "observable has wrong shape");
  }
  const ComplexMatrix u = apply_spectral_function(
      omega.spectrum(), [t](double x) { return std::exp(Complex(0.0, t * std::log(x))); }, SpectralDomain::Positive);
  return u * a * u.adjoint();
}

ComplexMatrix connes_cocycle(const PositiveFunctional& phi, const PositiveFunctional& omega, double t) {
  require_same_dim(phi, omega);
  require_faithful(phi);
  require_faithful(omega);
  return imaginary_power(phi.matrix(), t) * imaginary_power(omega.matrix(), -t);
}

StandardForm::StandardForm(const DensityMatrix& state) : StandardForm(state, 1.0) {}

StandardForm::StandardForm(DensityMatrix state, double scale)
    : state_(std::move(state)), omega_vec_(purify(state_)), scale_(scale) {
  require_faithful(state_);
}

StandardForm StandardForm::from_cone_vector(const BipartiteVector& omega) {
  if (omega.dim_left != omega.dim_right) {
    throw Error(ErrorCode::DimensionMismatch, "standard form needs a vector in C^d (x) C^d");
  }
  if (!is_cyclic_separating(omega)) throw Error(ErrorCode::SingularState, "vector is not cyclic and separating");
  const ComplexMatrix x = unvec(omega);
  if (!check_psd(x)) throw Error(ErrorCode::NotInCone, "vector is not vec of a PSD matrix");
  const double scale = omega.norm();
  const ComplexMatrix unit = x / scale;
  return {DensityMatrix(unit * unit), scale};
}

TomitaTakesakiReport verify_tomita_takesaki(const DensityMatrix& omega, const std::vector<ComplexMatrix>& samples,
                                            const std::vector<double>& t_grid, double threshold) {
  require_faithful(omega);
  const Eigen::Index d = omega.dim();
  const SuperOperator j = modular_conjugation(d);

  std::vector<ComplexMatrix> pis;
  pis.reserve(samples.size());
  for (const auto& m : samples) {
    if (m.rows() != d || m.cols() != d) throw Error(ErrorCode::ShapeMismatch, "sample has wrong shape");
    pis.push_back(left_representation(m));
  }

  TomitaTakesakiReport report;
  for (const auto& pi_m : pis) {
    // J pi(M) J is linear; its matrix follows the antilinear composition rule.
    const ComplexMatrix jmj = (j * SuperOperator::linear(pi_m) * j).matrix();
    for (const auto& pi_n : pis) {
      report.max_commutator = std::max(report.max_commutator, (jmj * pi_n - pi_n * jmj).norm());
      ++report.checks;
    }
  }

  for (double t : t_grid) {
    const ComplexMatrix delta_it = relative_modular_unitary(omega, omega, t).matrix();
    const ComplexMatrix delta_minus_it = relative_modular_unitary(omega, omega, -t).matrix();
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const ComplexMatrix flowed = delta_it * pis[k] * delta_minus_it;
      const double r = (flowed - left_representation(modular_flow(omega, samples[k], t))).norm();
      report.max_flow_residual = std::max(report.max_flow_residual, r);
      ++report.checks;
    }
  }
  report.pass = report.max_commutator < threshold && report.max_flow_residual < threshold;
  return report;
}

}  // namespace modkit
