#include <doctest.h>

#include "modkit/cone.hpp"
#include "modkit/errors.hpp"
#include "modkit/modular.hpp"
#include "modkit/random.hpp"
#include "oracles.hpp"

using namespace modkit;

namespace {

ComplexMatrix diag(std::initializer_list<double> values) {
  RealVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v.cast<Complex>().asDiagonal();
}

}  // namespace

TEST_CASE("cone_contains") {
  CHECK(cone_contains(vec(ComplexMatrix::Identity(3, 3))));
  ComplexMatrix flip = ComplexMatrix::Zero(2, 2);
  flip(0, 1) = flip(1, 0) = 1.0;
  CHECK_FALSE(cone_contains(vec(flip)));
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix b = random_gaussian(rng, 4, 4);
    CHECK(cone_contains(vec(b * b.adjoint())));
  }
  CHECK_ERROR_CODE(cone_contains(vec(ComplexMatrix::Identity(2, 3))), ErrorCode::DimensionMismatch);
  CHECK_ERROR_CODE(ConeElement(flip), ErrorCode::NotPSD);
}

TEST_CASE("representative_of") {
  const ConeElement tr = representative_of(DensityMatrix::maximally_mixed(3));
  CHECK((tr.vector().amplitudes - vec(ComplexMatrix::Identity(3, 3)).amplitudes / std::sqrt(3.0)).norm() < 1e-15);

  const ConeElement diagonal = representative_of(DensityMatrix::diagonal(RealVector{{0.5, 0.3, 0.2}}));
  CHECK((diagonal.witness() - diag({std::sqrt(0.5), std::sqrt(0.3), std::sqrt(0.2)})).norm() < 1e-15);

  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix d = random_density(rng, 4);
    const ConeElement xi = representative_of(d);
    CHECK(cone_contains(xi.vector()));
    CHECK(xi.vector().amplitudes == vec(xi.witness()).amplitudes);
    const ComplexMatrix m = random_gaussian(rng, 4, 4);
    CHECK(std::abs(evaluate_state(xi.vector(), m) - (d.matrix() * m).trace()) < 1e-12);
  }
}

TEST_CASE("decompose_j_fixed") {
  Rng rng(3);
  SUBCASE("cone vector") {
    const ComplexMatrix x = random_psd(rng, 3);
    const JordanConeSplit split = decompose_j_fixed(vec(x));
    CHECK((split.plus.witness() - x).norm() < 1e-12);
    CHECK(split.minus.witness().norm() < 1e-12);
  }
  SUBCASE("diagonal") {
    const JordanConeSplit split = decompose_j_fixed(vec(diag({1, -2})));
    CHECK((split.plus.witness() - diag({1, 0})).norm() < 1e-15);
    CHECK((split.minus.witness() - diag({0, 2})).norm() < 1e-15);
  }
  SUBCASE("random Hermitian") {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix h = random_hermitian(rng, 4);
      const JordanConeSplit split = decompose_j_fixed(vec(h));
      CHECK(((split.plus.vector() - split.minus.vector()).amplitudes - vec(h).amplitudes).norm() < 1e-12);
      CHECK(std::abs(inner(split.plus.vector(), split.minus.vector())) < 1e-12);
      CHECK(std::abs((split.plus.witness() * split.minus.witness()).trace()) < 1e-12);
    }
  }
  CHECK_ERROR_CODE(decompose_j_fixed(vec(random_gaussian(rng, 3, 3))), ErrorCode::NotJFixed);
}

TEST_CASE("decompose_general") {
  Rng rng(4);
  SUBCASE("cone vector") {
    const ComplexMatrix x = random_psd(rng, 3);
    const auto c = decompose_general(vec(x));
    CHECK((c[0].witness() - x).norm() < 1e-12);
    for (int k = 1; k < 4; ++k) CHECK(c[k].witness().norm() < 1e-12);
  }
  SUBCASE("i * identity") {
    const auto c = decompose_general(vec(Complex(0, 1) * ComplexMatrix::Identity(2, 2)));
    CHECK(c[0].witness().norm() < 1e-15);
    CHECK(c[1].witness().norm() < 1e-15);
    CHECK((c[2].witness() - ComplexMatrix::Identity(2, 2)).norm() < 1e-15);
    CHECK(c[3].witness().norm() < 1e-15);
  }
  SUBCASE("random reconstruction") {
    const Complex i(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
      const BipartiteVector v = vec(random_gaussian(rng, 4, 4));
      const auto c = decompose_general(v);
      const ComplexVector back = c[0].vector().amplitudes - c[1].vector().amplitudes + i * c[2].vector().amplitudes -
                                 i * c[3].vector().amplitudes;
      CHECK((back - v.amplitudes).norm() < 1e-12);
      for (const auto& e : c) CHECK(cone_contains(e.vector()));
    }
  }
  CHECK_ERROR_CODE(decompose_general(vec(ComplexMatrix::Identity(2, 3))), ErrorCode::DimensionMismatch);
}

TEST_CASE("self-duality") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const BipartiteVector xi = vec(random_psd(rng, 3, 1 + trial % 3));
    const BipartiteVector eta = vec(random_psd(rng, 3, 1 + (trial / 3) % 3));
    CHECK(inner(xi, eta).real() >= -1e-12);
    CHECK(std::abs(inner(xi, eta).imag()) < 1e-12);
  }
  // a negative extreme-ray pairing certifies non-membership
  for (int trial = 0; trial < 20; ++trial) {
    const BipartiteVector v = vec(random_hermitian(rng, 3));
    const double probe = min_extreme_ray_pairing(v, 100 + trial);
    if (probe < -1e-10) CHECK_FALSE(cone_contains(v));
    CHECK(cone_contains(v) == (oracle::eigenvalues(unvec(v))(0) >= -1e-10));
  }
  CHECK(min_extreme_ray_pairing(vec(ComplexMatrix::Identity(3, 3)), 7) > 0.0);
}

TEST_CASE("pointedness") {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const BipartiteVector v = vec(trial % 2 == 0 ? random_psd(rng, 3) : random_hermitian(rng, 3));
    BipartiteVector neg = v;
    neg *= -1.0;
    if (cone_contains(v) && cone_contains(neg)) CHECK(v.norm() <= 1e-10);
    CHECK_FALSE((cone_contains(v) && cone_contains(neg)));
  }
  const BipartiteVector zero = ConeElement::zero(3).vector();
  CHECK(cone_contains(zero));
}

TEST_CASE("J fixes the cone") {
  Rng rng(7);
  const SuperOperator j = modular_conjugation(4);
  for (int trial = 0; trial < 20; ++trial) {
    const ConeElement xi(random_psd(rng, 4));
    CHECK((j.apply(xi.vector()).amplitudes - xi.vector().amplitudes).norm() < 1e-12);
  }
}

TEST_CASE("M j(M) maps the cone into itself") {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix m = random_gaussian(rng, 3, 3);
    const ComplexMatrix x = random_psd(rng, 3);
    const BipartiteVector out = apply_m_jm(m, vec(x));
    CHECK(cone_contains(out));
    CHECK((unvec(out) - m * x * m.adjoint()).norm() < 1e-12);
  }
}
