#include "modkit/states.hpp"

#include <cmath>
#include <string>

#include "modkit/errors.hpp"

namespace modkit {

PositiveFunctional::PositiveFunctional(const ComplexMatrix& matrix) {
  if (!check_psd(matrix, kStateTol)) throw Error(ErrorCode::NotPSD, "state matrix must be PSD");
  matrix_ = 0.5 * (matrix + matrix.adjoint());
  spectrum_ = spectral_decompose(matrix_);
}

Complex PositiveFunctional::operator()(const ComplexMatrix& m) const {
  if (m.rows() != dim() || m.cols() != dim()) throw Error(ErrorCode::ShapeMismatch, "observable has wrong shape");
  return (matrix_ * m).trace();
}

ComplexMatrix PositiveFunctional::power(double s) const {
  if (s == 0.0) return ComplexMatrix::Identity(dim(), dim());
  const SpectralDomain domain = s < 0 ? SpectralDomain::Positive : SpectralDomain::NonNegative;
  return apply_spectral_function(spectrum_, [s](double x) { return Complex(std::pow(x, s)); }, domain);
}

DensityMatrix::DensityMatrix(const ComplexMatrix& matrix) : PositiveFunctional(matrix) {
  const double tr = total();
  if (std::abs(tr - 1.0) > kStateTol || std::abs(matrix_.trace().imag()) > kStateTol) {
    throw Error(ErrorCode::NotDensityMatrix, "trace is " + std::to_string(tr) + ", expected 1");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index d) {
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::diagonal(const RealVector& probabilities) {
  return DensityMatrix(probabilities.cast<Complex>().asDiagonal().toDenseMatrix());
}

BipartiteVector purify(const PositiveFunctional& state) { return vec(state.power(0.5)); }

Complex evaluate_state(const BipartiteVector& omega_vec, const ComplexMatrix& m) {
  if (m.rows() != omega_vec.dim_left || m.cols() != omega_vec.dim_left) {
    throw Error(ErrorCode::ShapeMismatch, "pi(M) = M (x) 1 needs M to be dY x dY");
  }
  const ComplexMatrix w = unvec(omega_vec);
  return (w.adjoint() * m * w).trace();
}

bool is_faithful(const PositiveFunctional& state, double singularity_tol) {
  const RealVector& ev = state.spectrum().eigenvalues;
  return ev(0) > singularity_tol * ev(ev.size() - 1);
}

void require_faithful(const PositiveFunctional& state, double singularity_tol) {
  if (!is_faithful(state, singularity_tol)) {
    throw Error(ErrorCode::SingularState, "state is not faithful (smallest eigenvalue " +
                                              std::to_string(state.spectrum().eigenvalues(0)) + ")");
  }
}

double functional_distance(const PositiveFunctional& phi1, const PositiveFunctional& phi2) {
  if (phi1.dim() != phi2.dim()) throw Error(ErrorCode::ShapeMismatch, "functionals act on different dimensions");
  const ComplexMatrix diff = phi1.matrix() - phi2.matrix();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(diff, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace modkit
