#include "modkit/kms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modkit/errors.hpp"

namespace modkit {

namespace {

void require_observable(const GibbsSystem& sys, const ComplexMatrix& a) {
  if (a.rows() != sys.state.dim() || a.cols() != sys.state.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "observable has wrong shape");
  }
}

}  // namespace

GibbsSystem gibbs_hamiltonian(const DensityMatrix& state, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw Error(ErrorCode::BadBeta, "beta must be positive");
  require_faithful(state);
  ComplexMatrix h = apply_spectral_function(
      state.spectrum(), [beta](double x) { return Complex(-std::log(x) / beta); }, SpectralDomain::Positive);
  return {beta, state, std::move(h)};
}

ComplexMatrix heisenberg_evolve(const GibbsSystem& sys, const ComplexMatrix& a, double t) {
  require_observable(sys, a);
  const ComplexMatrix u =
      apply_spectral_function(sys.hamiltonian, [t](double e) { return std::exp(Complex(0.0, e * t)); });
  return u * a * u.adjoint();
}

ModularHamiltonian modular_hamiltonian(const GibbsSystem& sys) {
  const Eigen::Index d = sys.state.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  return {SuperOperator::linear(kron(sys.hamiltonian, id) - kron(id, sys.hamiltonian.transpose()))};
}

Complex kms_function(const GibbsSystem& sys, const ComplexMatrix& a, const ComplexMatrix& b, Complex z) {
  require_observable(sys, a);
  require_observable(sys, b);
  // The function is entire; the strip is the contract under which it is a KMS function.
  const double slack = 1e-12 * std::max(1.0, sys.beta);
  if (z.imag() < -slack || z.imag() > sys.beta + slack) {
    throw Error(ErrorCode::OutsideStrip, "Im z = " + std::to_string(z.imag()) + " is outside [0, beta]");
  }
  const auto& spec = sys.state.spectrum();
  const ComplexMatrix& v = spec.eigenvectors;
  const ComplexMatrix a_e = v.adjoint() * a * v;
  const ComplexMatrix b_e = v.adjoint() * b * v;
  const Eigen::Index d = sys.state.dim();
  RealVector energy(d);
  for (Eigen::Index j = 0; j < d; ++j) energy(j) = -std::log(spec.eigenvalues(j)) / sys.beta;

  Complex sum = 0.0;
  const Complex iz = Complex(0.0, 1.0) * z;
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      sum += spec.eigenvalues(j) * a_e(j, k) * b_e(k, j) * std::exp(iz * (energy(k) - energy(j)));
    }
  }
  return sum;
}

std::vector<Eigen::Index> eigenvalue_clusters(const PositiveFunctional& state, double gap_tol) {
  const RealVector& ev = state.spectrum().eigenvalues;
  // Relative to lambda_max, not the spectral diameter: a degenerate spectrum has
  // a diameter made of rounding noise.
  const double threshold = gap_tol * std::abs(ev(ev.size() - 1));
  std::vector<Eigen::Index> sizes{1};
  for (Eigen::Index i = 1; i < ev.size(); ++i) {
    if (ev(i) - ev(i - 1) <= threshold) {
      ++sizes.back();
    } else {
      sizes.push_back(1);
    }
  }
  return sizes;
}

std::vector<ComplexMatrix> centralizer_basis(const PositiveFunctional& state, double gap_tol) {
  const ComplexMatrix& v = state.spectrum().eigenvectors;
  std::vector<ComplexMatrix> basis;
  Eigen::Index start = 0;
  for (Eigen::Index size : eigenvalue_clusters(state, gap_tol)) {
    for (Eigen::Index a = start; a < start + size; ++a) {
      for (Eigen::Index b = start; b < start + size; ++b) basis.push_back(v.col(a) * v.col(b).adjoint());
    }
    start += size;
  }
  return basis;
}

}  // namespace modkit
