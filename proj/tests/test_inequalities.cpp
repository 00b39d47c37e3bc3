#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "modkit/errors.hpp"
#include "modkit/inequalities.hpp"
#include "modkit/random.hpp"
#include "oracles.hpp"

using namespace modkit;

namespace {

ComplexMatrix diag(const RealVector& v) { return v.cast<Complex>().asDiagonal(); }

RealVector random_spectrum(Rng& rng, Eigen::Index d, bool allow_zero) {
  RealVector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = allow_zero && rng.uniform_int(0, 3) == 0 ? 0.0 : rng.uniform(0.0, 2.0);
  return v;
}

double close(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("InequalityReport semantics") {
  const auto le = InequalityReport::evaluate(1.0, 2.0, Direction::LessEqual, 7);
  CHECK(le.slack == 1.0);
  CHECK(le.pass);
  CHECK(le.instance_seed == 7);
  const auto ge = InequalityReport::evaluate(1.0, 2.0, Direction::GreaterEqual);
  CHECK(ge.slack == -1.0);
  CHECK_FALSE(ge.pass);
  // relative tolerance boundary
  CHECK(InequalityReport::evaluate(1e6 + 1e-6, 1e6, Direction::LessEqual).pass);
  CHECK_FALSE(InequalityReport::evaluate(1e6 + 1e-4, 1e6, Direction::LessEqual).pass);
}

TEST_CASE("MonotoneFunction registry") {
  const auto registry = monotone_registry();
  CHECK(registry.size() == 3);
  for (const auto& mf : registry) {
    CHECK(mf.g(0.0) == 0.0);
    CHECK(mf.g(2.0) == doctest::Approx(2.0 / mf.f(2.0)));
  }
  CHECK_ERROR_CODE(MonotoneFunction::make("t^2", [](double t) { return t * t; }), ErrorCode::NotMonotone);
  CHECK_ERROR_CODE(MonotoneFunction::make("negative", [](double t) { return -t; }), ErrorCode::NotMonotone);
  CHECK_ERROR_CODE(MonotoneFunction::power(1.5), ErrorCode::BadExponent);
  CHECK_NOTHROW(MonotoneFunction::power(1.0));
}

TEST_CASE("norm_sandwich") {
  Rng rng(1);
  const ComplexMatrix x = random_psd(rng, 3);
  const SandwichReport same = norm_sandwich(x, x);
  CHECK(std::abs(same.lower.lhs) < 1e-14);
  CHECK(std::abs(same.lower.rhs) < 1e-14);
  CHECK(std::abs(same.upper.rhs) < 1e-14);
  CHECK(same.pass());

  const SandwichReport basis = norm_sandwich(diag(RealVector{{1, 0}}), diag(RealVector{{0, 1}}));
  CHECK(basis.lower.lhs == doctest::Approx(2.0));
  CHECK(basis.lower.rhs == doctest::Approx(2.0));
  CHECK(basis.upper.rhs == doctest::Approx(2.0));
  CHECK(basis.pass());

  CHECK_ERROR_CODE(norm_sandwich(-x, x), ErrorCode::NotPSD);
}

TEST_CASE("powers_stormer") {
  Rng rng(2);
  const ComplexMatrix a = random_psd(rng, 3);
  const auto same = powers_stormer(a, a);
  CHECK(std::abs(same.lhs) < 1e-14);
  CHECK(std::abs(same.rhs) < 1e-14);
  const auto basis = powers_stormer(diag(RealVector{{1, 0}}), diag(RealVector{{0, 1}}));
  CHECK(basis.lhs == doctest::Approx(2.0));
  CHECK(basis.rhs == doctest::Approx(2.0));
  CHECK(basis.pass);
  CHECK_ERROR_CODE(powers_stormer(-a, a), ErrorCode::NotPSD);
}

TEST_CASE("ozawa_s") {
  Rng rng(3);
  const ComplexMatrix a = random_psd(rng, 3);
  const auto same = ozawa_s(a, a, 0.5);
  CHECK(close(same.lhs, 2.0 * a.trace().real()) < 1e-12);
  CHECK(close(same.rhs, 2.0 * a.trace().real()) < 1e-12);

  const auto commuting = ozawa_s(diag(RealVector{{0.7, 0.3}}), diag(RealVector{{0.4, 0.6}}), 0.5);
  CHECK(close(commuting.lhs, 2.0 * (std::sqrt(0.28) + std::sqrt(0.18))) < 1e-12);
  CHECK(close(commuting.rhs, 2.0 * (0.4 + 0.3)) < 1e-12);
  CHECK(commuting.pass);

  CHECK_ERROR_CODE(ozawa_s(a, a, -0.1), ErrorCode::BadExponent);
  CHECK_ERROR_CODE(ozawa_s(a, a, 1.1), ErrorCode::BadExponent);
  CHECK_ERROR_CODE(ozawa_s(-a, a, 0.5), ErrorCode::NotPSD);
}

TEST_CASE("ogata_modular") {
  SUBCASE("equal trace-one functionals") {
    Rng rng(4);
    const DensityMatrix d = random_density(rng, 3);
    const OgataReport r = ogata_modular(d, d, 0.4);
    CHECK(close(r.lhs_modular, 2.0) < 1e-10);
    CHECK(close(r.report.rhs, 2.0) < 1e-12);
    CHECK(r.report.pass);
  }
  SUBCASE("routes agree on random faithful pairs") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::Index d = 2 + trial % 4;
      const PositiveFunctional p1(random_density(rng, d).matrix() * rng.uniform(0.5, 2.0));
      const PositiveFunctional p2(random_psd(rng, d, 1 + trial % d));
      for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const OgataReport r = ogata_modular(p1, p2, s);
        CHECK(r.route_gap < 1e-10);
        CHECK(r.report.pass);
      }
    }
  }
  SUBCASE("equality structure") {
    // D1 = (D2 - D1)_- + psi, D2 = (D2 - D1)_+ + psi with psi supported orthogonally
    const double a = 0.3, b = 0.5, c = 0.2;
    const PositiveFunctional p1(diag(RealVector{{a, b, c}}));
    const PositiveFunctional p2(diag(RealVector{{0, 0, c}}));
    for (double s : {0.1, 0.5, 0.9}) {
      const OgataReport r = ogata_modular(p1, p2, s);
      CHECK(std::abs(r.report.slack) < 1e-10);
      CHECK(close(r.lhs_modular, 2.0 * c) < 1e-10);
    }
    // the block example with singular phi1 is checked through the trace route only
    const PositiveFunctional q1(diag(RealVector{{a, 0, c}}));
    const PositiveFunctional q2(diag(RealVector{{0, b, c}}));
    for (double s : {0.1, 0.5, 0.9}) {
      const double lhs = ogata_trace_lhs(q1, q2, s);
      const double rhs = q1.total() + q2.total() - functional_distance(q1, q2);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
    CHECK_ERROR_CODE(ogata_modular(q1, q2, 0.5), ErrorCode::SingularState);
  }
  CHECK_ERROR_CODE(ogata_modular(DensityMatrix::maximally_mixed(2), DensityMatrix::maximally_mixed(2), 2.0),
                   ErrorCode::BadExponent);
}

TEST_CASE("hoa_generalized") {
  Rng rng(6);
  SUBCASE("f(t) = t^{1/2} reproduces ozawa_s at s = 1/2") {
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix a = random_psd(rng, 4), b = random_psd(rng, 4);
      const auto h = hoa_generalized(a, b, MonotoneFunction::power(0.5));
      const auto o = ozawa_s(a, b, 0.5);
      CHECK(close(h.lhs, o.lhs) < 1e-12);
      CHECK(close(h.rhs, o.rhs) < 1e-12);
    }
  }
  SUBCASE("f(t) = t gives 2 Tr(A supp(B)), matching ozawa_s at s = 0") {
    const MonotoneFunction id = MonotoneFunction::power(1.0);
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix a = random_psd(rng, 4), b = random_psd(rng, 4, 2);
      const auto h = hoa_generalized(a, b, id);
      const ComplexMatrix supp = support_projection(b, 1e-10);
      CHECK(close(h.lhs, 2.0 * (a * supp).trace().real()) < 1e-10);
      CHECK(close(h.lhs, ozawa_s(a, b, 0.0).lhs) < 1e-10);
      CHECK(h.pass);
    }
  }
  SUBCASE("registry on random PSD") {
    for (const auto& mf : monotone_registry())
      for (int trial = 0; trial < 20; ++trial) CHECK(hoa_generalized(random_psd(rng, 3), random_psd(rng, 3), mf).pass);
  }
  CHECK_ERROR_CODE(hoa_generalized(-random_psd(rng, 2), random_psd(rng, 2), MonotoneFunction::rational()),
                   ErrorCode::NotPSD);
}

TEST_CASE("phillips") {
  Rng rng(7);
  const ComplexMatrix b = random_psd(rng, 3);
  const ComplexMatrix a = b + random_psd(rng, 3);
  const auto t1 = phillips(a, b, 1.0);
  CHECK(close(t1.lhs, t1.rhs) < 1e-12);

  const ComplexMatrix bd = diag(RealVector{{1, 2}});
  const auto scalar = phillips(2.0 * bd, bd, 2.0);
  const double r2 = std::sqrt(2.0) - 1.0;
  CHECK(close(scalar.lhs, 3.0 * r2 * r2) < 1e-12);
  CHECK(close(scalar.rhs, 3.0) < 1e-12);
  CHECK(scalar.pass);

  CHECK_ERROR_CODE(phillips(b, a, 2.0), ErrorCode::OrderViolation);
  CHECK_ERROR_CODE(phillips(a, b, 0.5), ErrorCode::BadExponent);
  CHECK_ERROR_CODE(phillips(a, -b, 2.0), ErrorCode::NotPSD);
}

TEST_CASE("scalar oracles on commuting inputs") {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index d = 2 + trial % 4;
    const RealVector av = random_spectrum(rng, d, true), bv = random_spectrum(rng, d, true);
    const ComplexMatrix a = diag(av), b = diag(bv);
    double sum_min = 0.0, sum_abs = 0.0, root_gap = 0.0, sq_gap = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      sum_min += std::min(av(i), bv(i));
      sum_abs += std::abs(av(i) - bv(i));
      root_gap += std::pow(std::sqrt(av(i)) - std::sqrt(bv(i)), 2);
      sq_gap += std::abs(av(i) * av(i) - bv(i) * bv(i));
    }

    const auto ps = powers_stormer(a, b);
    CHECK(std::abs(ps.lhs - root_gap) < 1e-12);
    CHECK(std::abs(ps.rhs - sum_abs) < 1e-12);

    const auto sw = norm_sandwich(a, b);
    CHECK(std::abs(sw.lower.lhs - (av - bv).squaredNorm()) < 1e-12);
    CHECK(std::abs(sw.lower.rhs - sq_gap) < 1e-12);
    CHECK(std::abs(sw.upper.rhs - (av - bv).norm() * (av + bv).norm()) < 1e-12);

    for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      double lhs = 0.0;
      for (Eigen::Index i = 0; i < d; ++i) {
        const double bs = s == 0.0 ? (bv(i) > 0 ? 1.0 : 0.0) : std::pow(bv(i), s);
        const double as = s == 1.0 ? (av(i) > 0 ? 1.0 : 0.0) : std::pow(av(i), 1.0 - s);
        lhs += bs * as;
      }
      const auto oz = ozawa_s(a, b, s);
      CHECK(std::abs(oz.lhs - 2.0 * lhs) < 1e-12);
      CHECK(std::abs(oz.rhs - 2.0 * sum_min) < 1e-12);
    }

    for (const auto& mf : monotone_registry()) {
      double lhs = 0.0;
      for (Eigen::Index i = 0; i < d; ++i) lhs += mf.f(av(i)) * mf.g(bv(i));
      const auto h = hoa_generalized(a, b, mf);
      CHECK(std::abs(h.lhs - 2.0 * lhs) < 1e-12);
    }

    const RealVector upper = bv + random_spectrum(rng, d, true);
    for (double t : {1.0, 1.5, 2.0, 3.0}) {
      double lhs = 0.0;
      for (Eigen::Index i = 0; i < d; ++i) lhs += std::pow(std::pow(upper(i), 1.0 / t) - std::pow(bv(i), 1.0 / t), t);
      const auto ph = phillips(diag(upper), b, t);
      CHECK(std::abs(ph.lhs - lhs) < 1e-12);
      CHECK(std::abs(ph.rhs - (upper - bv).sum()) < 1e-12);
    }
  }
}

TEST_CASE("Powers-Stormer follows from Ozawa at s = 1/2") {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = random_density(rng, 4).matrix(), b = random_density(rng, 4).matrix();
    const double traces = a.trace().real() + b.trace().real();
    const auto oz = ozawa_s(a, b, 0.5);
    const double gap = (matrix_power(a, 0.5) - matrix_power(b, 0.5)).squaredNorm();
    // ||sqrt A - sqrt B||^2 = Tr A + Tr B - 2 Tr(sqrt A sqrt B)
    CHECK(std::abs(gap - (traces - oz.lhs)) < 1e-12);
    // <= Tr A + Tr B - Tr(A + B - |A - B|)
    CHECK(traces - oz.lhs <= traces - oz.rhs + 1e-12);
    // = ||A - B||_1
    CHECK(std::abs(traces - oz.rhs - trace_norm(a - b)) < 1e-12);
    CHECK(powers_stormer(a, b).pass);
  }
}

TEST_CASE("scale behaviour") {
  Rng rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = random_psd(rng, 3), b0 = random_psd(rng, 3);
    const ComplexMatrix big = a + b0;
    const DensityMatrix p1 = random_density(rng, 3);
    const PositiveFunctional p2(random_psd(rng, 3));
    const auto power = MonotoneFunction::power(0.5);
    for (double c : {0.1, 10.0}) {
      // degree-one homogeneous slacks
      CHECK(close(powers_stormer(c * a, c * b0).slack, c * powers_stormer(a, b0).slack) < 1e-10);
      CHECK(close(ozawa_s(c * a, c * b0, 0.3).slack, c * ozawa_s(a, b0, 0.3).slack) < 1e-10);
      CHECK(close(phillips(c * big, c * b0, 2.0).slack, c * phillips(big, b0, 2.0).slack) < 1e-10);
      CHECK(close(hoa_generalized(c * a, c * b0, power).slack, c * hoa_generalized(a, b0, power).slack) < 1e-10);
      const PositiveFunctional cp1(c * p1.matrix()), cp2(c * p2.matrix());
      CHECK(close(ogata_modular(cp1, cp2, 0.6).report.slack, c * ogata_modular(p1, p2, 0.6).report.slack) < 1e-10);
      // the norm sandwich compares quadratic quantities and scales with degree two
      CHECK(close(norm_sandwich(c * a, c * b0).lower.slack, c * c * norm_sandwich(a, b0).lower.slack) < 1e-10);
      CHECK(close(norm_sandwich(c * a, c * b0).upper.slack, c * c * norm_sandwich(a, b0).upper.slack) < 1e-10);
    }
  }
}
