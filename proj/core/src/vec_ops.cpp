#include "modkit/vec_ops.hpp"

#include <string>
#include <utility>

#include "modkit/errors.hpp"

namespace modkit {

namespace {

std::string dims_string(Eigen::Index r, Eigen::Index c) { return std::to_string(r) + "x" + std::to_string(c); }

void require_same_dims(const BipartiteVector& a, const BipartiteVector& b) {
  if (!a.same_dims(b)) {
    throw Error(ErrorCode::ShapeMismatch, "bipartite dims " + dims_string(a.dim_left, a.dim_right) + " vs " +
                                              dims_string(b.dim_left, b.dim_right));
  }
}

}  // namespace

BipartiteVector::BipartiteVector(Eigen::Index left, Eigen::Index right, ComplexVector amps)
    : dim_left(left), dim_right(right), amplitudes(std::move(amps)) {
  if (left <= 0 || right <= 0 || amplitudes.size() != left * right) {
    throw Error(ErrorCode::ShapeMismatch, "amplitude length " + std::to_string(amplitudes.size()) +
                                              " does not match dims " + dims_string(left, right));
  }
}

BipartiteVector BipartiteVector::zero(Eigen::Index left, Eigen::Index right) {
  return {left, right, ComplexVector::Zero(left * right)};
}

BipartiteVector BipartiteVector::product(const ComplexVector& left, const ComplexVector& right) {
  return {left.size(), right.size(), tensor(left, right)};
}

BipartiteVector& BipartiteVector::operator+=(const BipartiteVector& other) {
  require_same_dims(*this, other);
  amplitudes += other.amplitudes;
  return *this;
}

BipartiteVector& BipartiteVector::operator-=(const BipartiteVector& other) {
  require_same_dims(*this, other);
  amplitudes -= other.amplitudes;
  return *this;
}

BipartiteVector& BipartiteVector::operator*=(Complex c) {
  amplitudes *= c;
  return *this;
}

BipartiteVector operator+(BipartiteVector a, const BipartiteVector& b) { return a += b; }
BipartiteVector operator-(BipartiteVector a, const BipartiteVector& b) { return a -= b; }
BipartiteVector operator*(Complex c, BipartiteVector v) { return v *= c; }

Complex inner(const BipartiteVector& a, const BipartiteVector& b) {
  require_same_dims(a, b);
  return a.amplitudes.dot(b.amplitudes);
}

BipartiteVector vec(const ComplexMatrix& a) {
  ComplexVector amps(a.size());
  for (Eigen::Index mu = 0; mu < a.rows(); ++mu) {
    for (Eigen::Index nu = 0; nu < a.cols(); ++nu) amps(mu * a.cols() + nu) = a(mu, nu);
  }
  return {a.rows(), a.cols(), std::move(amps)};
}

ComplexMatrix unvec(const BipartiteVector& v) {
  ComplexMatrix a(v.dim_left, v.dim_right);
  for (Eigen::Index mu = 0; mu < v.dim_left; ++mu) {
    for (Eigen::Index nu = 0; nu < v.dim_right; ++nu) a(mu, nu) = v(mu, nu);
  }
  return a;
}

BipartiteVector kron_apply_vec(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x) {
  if (a.cols() != x.rows() || b.cols() != x.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "(A (x) B) vec(X) needs A: .x" + std::to_string(x.rows()) +
                                              " and B: .x" + std::to_string(x.cols()) + ", got A " +
                                              dims_string(a.rows(), a.cols()) + ", B " +
                                              dims_string(b.rows(), b.cols()));
  }
  return vec(a * x * b.transpose());
}

ComplexMatrix partial_trace(const BipartiteVector& v, const BipartiteVector& w, TraceSide side) {
  require_same_dims(v, w);
  const ComplexMatrix a = unvec(v);
  const ComplexMatrix b = unvec(w);
  if (side == TraceSide::Right) return a * b.adjoint();
  return (b.adjoint() * a).transpose();
}

ComplexMatrix swap_operator(Eigen::Index d) {
  ComplexMatrix p = ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index x = 0; x < d; ++x) {
    for (Eigen::Index y = 0; y < d; ++y) p(y * d + x, x * d + y) = 1.0;
  }
  return p;
}

BipartiteVector conjugate_vec(const BipartiteVector& v) { return {v.dim_left, v.dim_right, v.amplitudes.conjugate()}; }

ComplexVector vec_bipartite(const ComplexMatrix& x, Eigen::Index rows_a, Eigen::Index cols_a, Eigen::Index rows_b,
                            Eigen::Index cols_b) {
  if (x.rows() != rows_a * rows_b || x.cols() != cols_a * cols_b) {
    throw Error(ErrorCode::ShapeMismatch, "operator " + dims_string(x.rows(), x.cols()) +
                                              " does not factor as (" + dims_string(rows_a, cols_a) + ") (x) (" +
                                              dims_string(rows_b, cols_b) + ")");
  }
  ComplexVector out(x.size());
  // (m, mu, n, nu) -> (m, n, mu, nu)
  for (Eigen::Index m = 0; m < rows_a; ++m) {
    for (Eigen::Index mu = 0; mu < rows_b; ++mu) {
      for (Eigen::Index n = 0; n < cols_a; ++n) {
        for (Eigen::Index nu = 0; nu < cols_b; ++nu) {
          out(((m * cols_a + n) * rows_b + mu) * cols_b + nu) = x(m * rows_b + mu, n * cols_b + nu);
        }
      }
    }
  }
  return out;
}

ComplexVector tensor(const ComplexVector& u, const ComplexVector& v) {
  ComplexVector out(u.size() * v.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) out.segment(i * v.size(), v.size()) = u(i) * v;
  return out;
}

}  // namespace modkit
