#include "modkit/cone.hpp"

#include <algorithm>
#include <limits>

#include "modkit/errors.hpp"
#include "modkit/modular.hpp"
#include "modkit/random.hpp"

namespace modkit {

namespace {

void require_square_vector(const BipartiteVector& v) {
  if (v.dim_left != v.dim_right) throw Error(ErrorCode::DimensionMismatch, "cone lives in C^d (x) C^d");
}

ComplexMatrix hermitian_part(const ComplexMatrix& x) { return 0.5 * (x + x.adjoint()); }

}  // namespace

ConeElement::ConeElement(const ComplexMatrix& witness) {
  if (!check_psd(witness, kConeTol)) throw Error(ErrorCode::NotPSD, "cone witness must be PSD");
  witness_ = witness;
  vector_ = vec(witness_);
}

bool cone_contains(const BipartiteVector& v, double tol) {
  require_square_vector(v);
  return check_psd(unvec(v), tol);
}

ConeElement representative_of(const PositiveFunctional& omega) { return ConeElement(omega.power(0.5)); }

JordanConeSplit decompose_j_fixed(const BipartiteVector& v) {
  require_square_vector(v);
  const ComplexMatrix t = unvec(v);
  if (!is_hermitian(t, kConeTol)) throw Error(ErrorCode::NotJFixed, "J v != v: unvec(v) is not Hermitian");
  auto parts = jordan_decompose(t);
  return {ConeElement(parts.positive), ConeElement(parts.negative)};
}

std::array<ConeElement, 4> decompose_general(const BipartiteVector& v) {
  require_square_vector(v);
  const ComplexMatrix y = unvec(v);
  // Y = H + iK with H = (Y + Y*)/2 and K = (Y - Y*)/(2i), both Hermitian.
  const ComplexMatrix h = hermitian_part(y);
  const ComplexMatrix k = hermitian_part((y - y.adjoint()) / Complex(0.0, 2.0));
  auto hp = jordan_decompose(h);
  auto kp = jordan_decompose(k);
  return {ConeElement(hp.positive), ConeElement(hp.negative), ConeElement(kp.positive), ConeElement(kp.negative)};
}

double min_extreme_ray_pairing(const BipartiteVector& v, std::uint64_t seed, int samples) {
  require_square_vector(v);
  Rng rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    const ComplexVector u = random_unit_vector(rng, v.dim_left);
    const BipartiteVector ray = vec(u * u.adjoint());
    worst = std::min(worst, inner(ray, v).real());
  }
  return worst;
}

BipartiteVector apply_m_jm(const ComplexMatrix& m, const BipartiteVector& v) {
  require_square_vector(v);
  if (m.rows() != v.dim_left || m.cols() != v.dim_left) throw Error(ErrorCode::ShapeMismatch, "M has wrong shape");
  const SuperOperator pi_m = SuperOperator::linear(left_representation(m));
  const SuperOperator j = modular_conjugation(v.dim_left);
  return (pi_m * j * pi_m * j).apply(v);
}

}  // namespace modkit
