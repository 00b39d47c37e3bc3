#include "modkit/random.hpp"

#include <cmath>

namespace modkit {

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

double Rng::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

int Rng::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

ComplexMatrix random_gaussian(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  ComplexMatrix g(rows, cols);
  // Fill row by row so the draw order does not depend on Eigen's storage order.
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  }
  return g;
}

ComplexVector random_unit_vector(Rng& rng, Eigen::Index d) {
  ComplexVector v = random_gaussian(rng, d, 1).col(0);
  return v / v.norm();
}

ComplexMatrix random_hermitian(Rng& rng, Eigen::Index d) {
  const ComplexMatrix g = random_gaussian(rng, d, d);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_unitary(Rng& rng, Eigen::Index d) {
  const ComplexMatrix g = random_gaussian(rng, d, d);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column phases so the distribution is Haar.
  for (Eigen::Index k = 0; k < d; ++k) {
    const Complex diag = r(k, k);
    if (std::abs(diag) > 0.0) q.col(k) *= diag / std::abs(diag);
  }
  return q;
}

ComplexMatrix random_psd(Rng& rng, Eigen::Index d, Eigen::Index rank) {
  const ComplexMatrix g = random_gaussian(rng, d, rank);
  ComplexMatrix p = g * g.adjoint();
  p = 0.5 * (p + p.adjoint());
  return p / p.norm();
}

DensityMatrix random_density(Rng& rng, Eigen::Index d, double shift) {
  const ComplexMatrix g = random_gaussian(rng, d, d);
  ComplexMatrix p = g * g.adjoint();
  p = 0.5 * (p + p.adjoint());
  p /= p.trace().real();
  p += shift * ComplexMatrix::Identity(d, d);
  p /= p.trace().real();
  return DensityMatrix(p);
}

}  // namespace modkit
