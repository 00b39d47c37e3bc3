#pragma once

// Natural positive cone P = vec(M+) of B(H_d) in standard form. Closure is
// trivial in finite dimension, so membership is a PSD test on unvec(v).

#include <array>
#include <cstdint>

#include "modkit/states.hpp"

namespace modkit {

inline constexpr double kConeTol = 1e-10;

class ConeElement {
 public:
  /// Throws NotPSD when the witness is not PSD within kConeTol.
  explicit ConeElement(const ComplexMatrix& witness);

  static ConeElement zero(Eigen::Index d) { return ConeElement(ComplexMatrix::Zero(d, d)); }

  const BipartiteVector& vector() const { return vector_; }
  const ComplexMatrix& witness() const { return witness_; }

 private:
  ComplexMatrix witness_;
  BipartiteVector vector_;
};

/// unvec(v) PSD within tol. Throws DimensionMismatch when dY != dX.
bool cone_contains(const BipartiteVector& v, double tol = kConeTol);

/// The unique cone vector vec(D^{1/2}) with omega(M) = <xi, pi(M) xi>.
ConeElement representative_of(const PositiveFunctional& omega);

struct JordanConeSplit {
  ConeElement plus;
  ConeElement minus;
};

/// J v = v  =>  v = plus - minus with plus, minus in P and orthogonal. Throws NotJFixed.
JordanConeSplit decompose_j_fixed(const BipartiteVector& v);

/// v = c[0] - c[1] + i c[2] - i c[3] with every c[k] in P. Throws DimensionMismatch.
std::array<ConeElement, 4> decompose_general(const BipartiteVector& v);

/// Dual-cone probe: min over `samples` random unit u of <v, vec(|u><u|)>.
/// A negative value certifies that v is not in P (P is self-dual).
double min_extreme_ray_pairing(const BipartiteVector& v, std::uint64_t seed, int samples = 200);

/// pi(M) j(pi(M)) v = vec(M X M*) for v = vec(X).
BipartiteVector apply_m_jm(const ComplexMatrix& m, const BipartiteVector& v);

}  // namespace modkit
