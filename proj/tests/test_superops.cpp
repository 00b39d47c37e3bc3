#include <doctest.h>

#include <cmath>

#include "modkit/errors.hpp"
#include "modkit/modular.hpp"
#include "modkit/random.hpp"
#include "modkit/superops.hpp"
#include "oracles.hpp"

using namespace modkit;

namespace {

Complex hs(const ComplexMatrix& a, const ComplexMatrix& b) { return (a.adjoint() * b).trace(); }

ComplexMatrix diag(std::initializer_list<double> values) {
  RealVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v.cast<Complex>().asDiagonal();
}

}  // namespace

TEST_CASE("boxtimes_apply") {
  Rng rng(1);
  const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  const ComplexMatrix x = random_gaussian(rng, 3, 3);
  CHECK((boxtimes_apply({id, id}, x) - x).norm() == 0.0);

  for (int trial = 0; trial < 10; ++trial) {
    const BoxTimes p{random_gaussian(rng, 3, 3), random_gaussian(rng, 3, 3)};
    const BoxTimes q{random_gaussian(rng, 3, 3), random_gaussian(rng, 3, 3)};
    const ComplexMatrix y = random_gaussian(rng, 3, 3);
    CHECK((boxtimes_apply(p, y) - p.left * y * p.right.adjoint()).norm() < 1e-12);
    CHECK((vec(boxtimes_apply(p, y)).amplitudes - p.to_dense() * oracle::vec(y)).norm() < 1e-12);
    CHECK((p.to_dense() - oracle::kron(p.left, p.right.conjugate())).norm() == 0.0);
    // composition
    const BoxTimes pq = p * q;
    CHECK((pq.left - p.left * q.left).norm() < 1e-12);
    CHECK((boxtimes_apply(pq, y) - boxtimes_apply(p, boxtimes_apply(q, y))).norm() < 1e-10);
    CHECK((boxtimes_apply(p.then_after(q), y) - boxtimes_apply(pq, y)).norm() == 0.0);
    // HS adjoint
    const ComplexMatrix z = random_gaussian(rng, 3, 3);
    CHECK(std::abs(hs(z, boxtimes_apply(p, y)) - hs(boxtimes_apply(p.adjoint(), z), y)) < 1e-10);
  }
  CHECK_ERROR_CODE(boxtimes_apply({id, id}, ComplexMatrix::Identity(2, 2)), ErrorCode::ShapeMismatch);
}

TEST_CASE("left and right multiplication") {
  Rng rng(2);
  const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  CHECK((left_mult(id).to_dense() - ComplexMatrix::Identity(9, 9)).norm() == 0.0);
  CHECK((right_mult(id).to_dense() - ComplexMatrix::Identity(9, 9)).norm() == 0.0);

  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = random_gaussian(rng, 3, 3), b = random_gaussian(rng, 3, 3);
    const ComplexMatrix x = random_gaussian(rng, 3, 3);
    CHECK((boxtimes_apply(left_mult(a), x) - a * x).norm() < 1e-12);
    CHECK((boxtimes_apply(right_mult(b), x) - x * b).norm() < 1e-12);
    CHECK((a * b - b * a).norm() > 1e-3);
    const ComplexMatrix lr = boxtimes_apply(left_mult(a), boxtimes_apply(right_mult(b), x));
    const ComplexMatrix rl = boxtimes_apply(right_mult(b), boxtimes_apply(left_mult(a), x));
    CHECK((lr - rl).norm() < 1e-12);
    // inverses
    const ComplexMatrix back = boxtimes_apply(left_mult(a.inverse()), boxtimes_apply(left_mult(a), x));
    CHECK((back - x).norm() < 1e-9);
    CHECK(((left_mult(a.inverse()) * left_mult(a)).to_dense() - ComplexMatrix::Identity(9, 9)).norm() < 1e-9);
    CHECK(((right_mult(b.inverse()) * right_mult(b)).to_dense() - ComplexMatrix::Identity(9, 9)).norm() < 1e-9);
  }
  // a singular A gives a singular L_A
  CHECK(oracle::rank(left_mult(diag({1, 0, 1})).to_dense()) == 6);
  CHECK_ERROR_CODE(left_mult(ComplexMatrix::Zero(2, 3)), ErrorCode::NotSquare);
  CHECK_ERROR_CODE(right_mult(ComplexMatrix::Zero(3, 2)), ErrorCode::NotSquare);
}

TEST_CASE("superop_function") {
  Rng rng(3);
  const ComplexMatrix a = random_psd(rng, 3);
  const ScalarFunction id = [](double t) { return Complex(t); };
  CHECK((superop_function(MultiplicationSide::Left, a, id).to_dense() - left_mult(a).to_dense()).norm() < 1e-12);
  CHECK((superop_function(MultiplicationSide::Right, a, id).to_dense() - right_mult(a).to_dense()).norm() < 1e-12);

  const ScalarFunction root = [](double t) { return Complex(std::sqrt(t)); };
  const BoxTimes half = superop_function(MultiplicationSide::Left, diag({4, 9}), root);
  CHECK((half.to_dense() - left_mult(diag({2, 3})).to_dense()).norm() < 1e-14);

  for (double alpha : {0.3, 0.5, 1.7}) {
    const ScalarFunction pw = [alpha](double t) { return Complex(std::pow(t, alpha)); };
    for (auto side : {MultiplicationSide::Left, MultiplicationSide::Right}) {
      const ComplexMatrix dense = side == MultiplicationSide::Left ? left_mult(a).to_dense() : right_mult(a).to_dense();
      const ComplexMatrix dense_power = SuperOperator::linear(dense).power(alpha).matrix();
      CHECK((superop_function(side, a, pw).to_dense() - dense_power).norm() < 1e-10);
    }
  }
  // dense oracle with Eigen's matrix functions on A (x) 1
  const ComplexMatrix dense_sqrt = oracle::sqrtm(oracle::kron(a, ComplexMatrix::Identity(3, 3)));
  CHECK((superop_function(MultiplicationSide::Left, a, root).to_dense() - dense_sqrt).norm() < 1e-8);

  CHECK_ERROR_CODE(superop_function(MultiplicationSide::Left, random_hermitian(rng, 3) - 5.0 * ComplexMatrix::Identity(3, 3), root),
                   ErrorCode::DomainError);
}

TEST_CASE("positivity and self-adjointness") {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_psd(rng, 4);
    const ComplexMatrix x = random_gaussian(rng, 4, 4);
    CHECK(hs(x, boxtimes_apply(left_mult(a), x)).real() >= -1e-12);
    CHECK(hs(x, boxtimes_apply(right_mult(a), x)).real() >= -1e-12);
    const ComplexMatrix h = random_hermitian(rng, 4);
    const ComplexMatrix y = random_gaussian(rng, 4, 4);
    CHECK(std::abs(hs(y, boxtimes_apply(left_mult(h), x)) - hs(boxtimes_apply(left_mult(h), y), x)) < 1e-10);
    CHECK(std::abs(hs(y, boxtimes_apply(right_mult(h), x)) - hs(boxtimes_apply(right_mult(h), y), x)) < 1e-10);
  }
}

TEST_CASE("relative modular superoperator matches the modular engine") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix phi = random_density(rng, 3), omega = random_density(rng, 3);
    const BoxTimes delta = relative_modular_superop(phi.matrix(), omega.matrix());
    const SuperOperator engine = relative_modular_operator(phi, omega);
    const ComplexMatrix x = random_gaussian(rng, 3, 3);
    const ComplexVector lhs = vec(boxtimes_apply(delta, x)).amplitudes;
    CHECK((lhs - engine.apply(vec(x)).amplitudes).norm() < 1e-10 * std::max(1.0, lhs.norm()));
    CHECK((unvec(BipartiteVector(3, 3, lhs)) - phi.matrix() * x * omega.matrix().inverse()).norm() < 1e-8 * lhs.norm());
  }
}
