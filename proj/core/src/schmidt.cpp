#include "modkit/schmidt.hpp"

#include "modkit/errors.hpp"

namespace modkit {

BipartiteVector SchmidtData::reconstruct() const {
  ComplexVector amps = ComplexVector::Zero(left_vectors.rows() * right_vectors.rows());
  for (Eigen::Index i = 0; i < rank; ++i) {
    amps += coefficients(i) * tensor(left_vectors.col(i), right_vectors.col(i));
  }
  return {left_vectors.rows(), right_vectors.rows(), std::move(amps)};
}

SchmidtData schmidt_decompose(const BipartiteVector& u, double rank_tol) {
  if (u.amplitudes.size() == 0 || u.norm() == 0.0) throw Error(ErrorCode::ZeroVector, "Schmidt decomposition of zero");
  // A = sum s_i |y_i><x_i| and vec(|y><x|) = y (x) conj(x).
  Eigen::JacobiSVD<ComplexMatrix> svd(unvec(u), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& s = svd.singularValues();
  const double threshold = rank_tol * s(0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > threshold) ++rank;

  SchmidtData out;
  out.rank = rank;
  out.coefficients = s.head(rank);
  out.left_vectors = svd.matrixU().leftCols(rank);
  out.right_vectors = svd.matrixV().leftCols(rank).conjugate();
  return out;
}

Eigen::Index schmidt_rank(const BipartiteVector& u, double rank_tol) { return schmidt_decompose(u, rank_tol).rank; }

bool is_cyclic_separating(const BipartiteVector& u, double rank_tol) {
  if (u.dim_left != u.dim_right) {
    throw Error(ErrorCode::DimensionMismatch, "cyclic/separating test needs dY == dX");
  }
  return schmidt_rank(u, rank_tol) == u.dim_left;
}

}  // namespace modkit
