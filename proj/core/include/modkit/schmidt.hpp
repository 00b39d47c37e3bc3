#pragma once

#include <vector>

#include "modkit/vec_ops.hpp"

namespace modkit {

inline constexpr double kDefaultRankTol = 1e-10;

/// u = sum_i s_i y_i (x) z_i with s descending and both families orthonormal.
struct SchmidtData {
  RealVector coefficients;     // s_i > 0, descending
  ComplexMatrix left_vectors;  // dY x r, columns y_i
  ComplexMatrix right_vectors; // dX x r, columns z_i = conj(x_i)
  Eigen::Index rank = 0;

  BipartiteVector reconstruct() const;
};

/// SVD of unvec(u); singular values below rank_tol * s_max are dropped. Throws ZeroVector.
SchmidtData schmidt_decompose(const BipartiteVector& u, double rank_tol = kDefaultRankTol);

Eigen::Index schmidt_rank(const BipartiteVector& u, double rank_tol = kDefaultRankTol);

/// For pi(M) = M (x) 1 on C^d (x) C^d: cyclic and separating iff the Schmidt
/// rank is full. Throws DimensionMismatch when dY != dX.
bool is_cyclic_separating(const BipartiteVector& u, double rank_tol = kDefaultRankTol);

}  // namespace modkit
