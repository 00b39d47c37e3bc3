#pragma once

// Spectral calculus, norms and decompositions for Hermitian / PSD matrices.
//
// Every function here is a pure function of its arguments. Eigenvalues are
// always returned in ascending order so that decompositions are reproducible.

#include <complex>
#include <functional>
#include <limits>

#include <Eigen/Dense>

namespace modkit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Relative Hermiticity tolerance: ||A - A*||_HS <= tol * max(1, ||A||_HS).
inline constexpr double kHermitianTol = 1e-10;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct SpectralDecomposition {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // orthonormal columns

  ComplexMatrix reconstruct() const;
};

/// Where a scalar function is defined. Eigenvalues outside the domain raise
/// DomainError. NonNegative clamps eigenvalues in [-tol * scale, 0) to zero.
enum class SpectralDomain { Real, NonNegative, Positive };

using ScalarFunction = std::function<Complex(double)>;

double hs_norm(const ComplexMatrix& a);

/// max(1, ||A||_HS), the scale used by every relative tolerance.
double tolerance_scale(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

/// Throws NotSquare / NotHermitian.
void require_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

/// Eigen-decomposition of the Hermitian part of `a` after validating it.
SpectralDecomposition spectral_decompose(const ComplexMatrix& a, double tol = kHermitianTol);

ComplexMatrix apply_spectral_function(const SpectralDecomposition& spec, const ScalarFunction& f,
                                      SpectralDomain domain = SpectralDomain::Real);

/// V f(Lambda) V*. Hermitian whenever f is real valued.
ComplexMatrix apply_spectral_function(const ComplexMatrix& a, const ScalarFunction& f,
                                      SpectralDomain domain = SpectralDomain::Real);

/// Principal power of a PSD matrix. Negative exponents require a positive
/// definite input. The exponent zero yields the identity; use
/// support_projection() for the support convention.
ComplexMatrix matrix_power(const ComplexMatrix& a, double exponent);

/// A^{it} = exp(i t log A) for positive definite A.
ComplexMatrix imaginary_power(const ComplexMatrix& a, double t);

/// Spectral projection onto eigenvalues > rank_tol * max(1, lambda_max).
ComplexMatrix support_projection(const ComplexMatrix& a, double rank_tol = 1e-10);

struct JordanParts {
  ComplexMatrix positive;
  ComplexMatrix negative;
};

/// T = T+ - T-, with T+ T- = 0 and both parts PSD.
JordanParts jordan_decompose(const ComplexMatrix& t);

/// |T| for Hermitian T.
ComplexMatrix hermitian_abs(const ComplexMatrix& t);

/// Singular values, descending.
RealVector singular_values(const ComplexMatrix& a);

/// (sum sigma_i^p)^{1/p}; p = kInfinity gives the operator norm. Throws BadExponent for p < 1.
double schatten_norm(const ComplexMatrix& a, double p);

inline double trace_norm(const ComplexMatrix& a) { return schatten_norm(a, 1.0); }

/// True iff `a` is square, Hermitian within tol and lambda_min >= -tol * max(1, ||A||_HS).
bool check_psd(const ComplexMatrix& a, double tol = kHermitianTol);

/// Throws NotPSD unless check_psd holds.
void require_psd(const ComplexMatrix& a, double tol = kHermitianTol);

/// Explicit Kronecker product A (x) B with row-major block ordering.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace modkit
