#include "modkit/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "modkit/errors.hpp"

namespace modkit {

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

double hs_norm(const ComplexMatrix& a) { return a.norm(); }

double tolerance_scale(const ComplexMatrix& a) { return std::max(1.0, a.norm()); }

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).norm() <= tol * tolerance_scale(a);
}

void require_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::NotSquare,
                "expected a square matrix, got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (!is_hermitian(a, tol)) {
    throw Error(ErrorCode::NotHermitian,
                "||A - A*||_HS = " + std::to_string((a - a.adjoint()).norm()) + " exceeds tolerance");
  }
}

SpectralDecomposition spectral_decompose(const ComplexMatrix& a, double tol) {
  require_hermitian(a, tol);
  const ComplexMatrix hermitian_part = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix apply_spectral_function(const SpectralDecomposition& spec, const ScalarFunction& f,
                                      SpectralDomain domain) {
  const auto n = spec.eigenvalues.size();
  const double scale = std::max(1.0, spec.eigenvalues.cwiseAbs().maxCoeff());
  ComplexVector values(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double lambda = spec.eigenvalues(i);
    switch (domain) {
      case SpectralDomain::Real:
        break;
      case SpectralDomain::NonNegative:
        if (lambda < -kHermitianTol * scale) {
          throw Error(ErrorCode::DomainError, "eigenvalue " + std::to_string(lambda) + " is negative");
        }
        lambda = std::max(lambda, 0.0);
        break;
      case SpectralDomain::Positive:
        if (lambda <= 0.0) {
          throw Error(ErrorCode::DomainError, "eigenvalue " + std::to_string(lambda) + " is not positive");
        }
        break;
    }
    values(i) = f(lambda);
  }
  return spec.eigenvectors * values.asDiagonal() * spec.eigenvectors.adjoint();
}

ComplexMatrix apply_spectral_function(const ComplexMatrix& a, const ScalarFunction& f, SpectralDomain domain) {
  return apply_spectral_function(spectral_decompose(a), f, domain);
}

ComplexMatrix matrix_power(const ComplexMatrix& a, double exponent) {
  if (!std::isfinite(exponent)) throw Error(ErrorCode::BadExponent, "non-finite exponent");
  if (exponent == 0.0) {
    require_hermitian(a);
    return ComplexMatrix::Identity(a.rows(), a.cols());
  }
  if (exponent < 0.0) {
    return apply_spectral_function(a, [exponent](double x) { return Complex(std::pow(x, exponent)); },
                                   SpectralDomain::Positive);
  }
  // Eigenvalues inside the eigensolver's rounding floor are zero; fractional
  // powers would otherwise blow that noise up (1e-16^0.1 is 0.025).
  require_hermitian(a);
  const auto spec = spectral_decompose(a);
  const double top = spec.eigenvalues.cwiseAbs().maxCoeff();
  const double floor = static_cast<double>(a.rows()) * std::numeric_limits<double>::epsilon() * top;
  return apply_spectral_function(
      spec, [exponent, floor](double x) { return Complex(x <= floor ? 0.0 : std::pow(x, exponent)); },
      SpectralDomain::NonNegative);
}

ComplexMatrix imaginary_power(const ComplexMatrix& a, double t) {
  return apply_spectral_function(
      a, [t](double x) { return std::exp(Complex(0.0, t * std::log(x))); }, SpectralDomain::Positive);
}

ComplexMatrix support_projection(const ComplexMatrix& a, double rank_tol) {
  const auto spec = spectral_decompose(a);
  const double threshold = rank_tol * std::max(1.0, spec.eigenvalues.cwiseAbs().maxCoeff());
  return apply_spectral_function(spec, [threshold](double x) { return Complex(x > threshold ? 1.0 : 0.0); });
}

JordanParts jordan_decompose(const ComplexMatrix& t) {
  const auto spec = spectral_decompose(t);
  return {apply_spectral_function(spec, [](double x) { return Complex(std::max(x, 0.0)); }),
          apply_spectral_function(spec, [](double x) { return Complex(std::max(-x, 0.0)); })};
}

ComplexMatrix hermitian_abs(const ComplexMatrix& t) {
  return apply_spectral_function(t, [](double x) { return Complex(std::abs(x)); });
}

RealVector singular_values(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues();
}

double schatten_norm(const ComplexMatrix& a, double p) {
  if (std::isnan(p) || p < 1.0) throw Error(ErrorCode::BadExponent, "Schatten exponent must be >= 1");
  const RealVector s = singular_values(a);
  if (s.size() == 0) return 0.0;
  if (std::isinf(p)) return s.maxCoeff();
  if (p == 1.0) return s.sum();
  if (p == 2.0) return s.norm();
  return std::pow(s.array().pow(p).sum(), 1.0 / p);
}

bool check_psd(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols() || !is_hermitian(a, tol)) return false;
  if (a.size() == 0) return true;
  const ComplexMatrix hermitian_part = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol * tolerance_scale(a);
}

void require_psd(const ComplexMatrix& a, double tol) {
  if (!check_psd(a, tol)) throw Error(ErrorCode::NotPSD, "matrix is not positive semidefinite");
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace modkit
