#include "modkit/superops.hpp"

#include "modkit/errors.hpp"

namespace modkit {

namespace {

void require_square(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::NotSquare, "multiplication superoperators need square factors");
}

}  // namespace

BoxTimes BoxTimes::then_after(const BoxTimes& inner) const {
  return {left * inner.left, right * inner.right};
}

BoxTimes BoxTimes::adjoint() const { return {left.adjoint(), right.adjoint()}; }

ComplexMatrix BoxTimes::to_dense() const { return kron(left, right.conjugate()); }

ComplexMatrix boxtimes_apply(const BoxTimes& op, const ComplexMatrix& x) {
  if (op.left.cols() != x.rows() || op.right.cols() != x.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "A X B* does not compose");
  }
  return op.left * x * op.right.adjoint();
}

BoxTimes operator*(const BoxTimes& outer, const BoxTimes& inner) {
  if (outer.left.cols() != inner.left.rows() || outer.right.cols() != inner.right.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "composition of box products does not compose");
  }
  return outer.then_after(inner);
}

BoxTimes left_mult(const ComplexMatrix& a) {
  require_square(a);
  return {a, ComplexMatrix::Identity(a.rows(), a.rows())};
}

BoxTimes right_mult(const ComplexMatrix& b) {
  require_square(b);
  return {ComplexMatrix::Identity(b.rows(), b.rows()), b.adjoint()};
}

BoxTimes superop_function(MultiplicationSide side, const ComplexMatrix& a, const ScalarFunction& f,
                          SpectralDomain domain) {
  if (!check_psd(a)) throw Error(ErrorCode::DomainError, "functional calculus of L_A / R_A needs A >= 0");
  const ComplexMatrix fa = apply_spectral_function(a, f, domain);
  return side == MultiplicationSide::Left ? left_mult(fa) : right_mult(fa);
}

BoxTimes relative_modular_superop(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_psd(a);
  const ComplexMatrix b_inv = matrix_power(b, -1.0);
  return left_mult(a) * right_mult(b_inv);
}

}  // namespace modkit
