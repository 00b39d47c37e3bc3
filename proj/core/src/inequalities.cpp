#include "modkit/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modkit/errors.hpp"
#include "modkit/modular.hpp"
#include "modkit/random.hpp"
#include "modkit/schmidt.hpp"

namespace modkit {

namespace {

constexpr std::uint64_t kMonotoneCheckSeed = 0x6d6f6e6f746f6e65ULL;
constexpr int kMonotoneCheckPairs = 20;
constexpr Eigen::Index kMonotoneCheckDim = 3;

void require_psd_pair(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_psd(a);
  require_psd(b);
  if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "operands have different dimensions");
}

void require_unit_interval(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw Error(ErrorCode::BadExponent, "s must lie in [0, 1]");
}

// X^s for PSD X with X^0 the support projection.
ComplexMatrix support_power(const ComplexMatrix& x, double s) {
  if (s == 0.0) return support_projection(x, kDefaultRankTol);
  return matrix_power(x, s);
}

double real_trace(const ComplexMatrix& m) { return m.trace().real(); }

// Tr(A + B - |A - B|)
double overlap_side(const ComplexMatrix& a, const ComplexMatrix& b) {
  return real_trace(a) + real_trace(b) - trace_norm(a - b);
}

ComplexMatrix apply_nonnegative(const ComplexMatrix& a, const std::function<double(double)>& f) {
  return apply_spectral_function(a, [&f](double x) { return Complex(f(x)); }, SpectralDomain::NonNegative);
}

}  // namespace

InequalityReport InequalityReport::evaluate(double lhs, double rhs, Direction direction, std::uint64_t seed) {
  InequalityReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = direction == Direction::LessEqual ? rhs - lhs : lhs - rhs;
  r.pass = r.slack >= -kSlackTol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
  r.instance_seed = seed;
  return r;
}

double InequalityReport::relative_slack() const { return slack / std::max({1.0, std::abs(lhs), std::abs(rhs)}); }

MonotoneFunction MonotoneFunction::make(std::string name, Fn f) {
  for (double t : {1e-8, 1e-4, 1e-2, 0.1, 0.5, 1.0, 2.0, 10.0, 1e3, 1e6}) {
    const double v = f(t);
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::NotMonotone, name + ": f(" + std::to_string(t) + ") is not positive");
    }
  }
  Rng rng(kMonotoneCheckSeed);
  for (int k = 0; k < kMonotoneCheckPairs; ++k) {
    const ComplexMatrix a = random_psd(rng, kMonotoneCheckDim);
    const ComplexMatrix b = a + random_psd(rng, kMonotoneCheckDim);
    const ComplexMatrix diff = apply_nonnegative(b, f) - apply_nonnegative(a, f);
    if (!check_psd(diff, 1e-10)) {
      throw Error(ErrorCode::NotMonotone, name + ": f(B) - f(A) is not PSD for some A <= B");
    }
  }
  return MonotoneFunction(std::move(name), std::move(f));
}

MonotoneFunction MonotoneFunction::power(double s) {
  require_unit_interval(s);
  return make("t^" + std::to_string(s), [s](double t) { return std::pow(t, s); });
}

MonotoneFunction MonotoneFunction::rational() {
  return make("t/(1+t)", [](double t) { return t / (1.0 + t); });
}

MonotoneFunction MonotoneFunction::log1p() {
  return make("log(1+t)", [](double t) { return std::log1p(t); });
}

std::vector<MonotoneFunction> monotone_registry() {
  return {MonotoneFunction::power(0.5), MonotoneFunction::rational(), MonotoneFunction::log1p()};
}

SandwichReport norm_sandwich(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_psd_pair(x, y);
  const double diff_hs = (x - y).norm();
  const double sum_hs = (x + y).norm();
  const double squares_trace = trace_norm(x * x - y * y);
  return {InequalityReport::evaluate(diff_hs * diff_hs, squares_trace, Direction::LessEqual),
          InequalityReport::evaluate(squares_trace, diff_hs * sum_hs, Direction::LessEqual)};
}

InequalityReport powers_stormer(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_psd_pair(a, b);
  const double root_gap = (matrix_power(a, 0.5) - matrix_power(b, 0.5)).norm();
  return InequalityReport::evaluate(root_gap * root_gap, trace_norm(a - b), Direction::LessEqual);
}

InequalityReport ozawa_s(const ComplexMatrix& a, const ComplexMatrix& b, double s) {
  require_unit_interval(s);
  require_psd_pair(a, b);
  const double lhs = 2.0 * real_trace(support_power(b, s) * support_power(a, 1.0 - s));
  return InequalityReport::evaluate(lhs, overlap_side(a, b), Direction::GreaterEqual);
}

double ogata_trace_lhs(const PositiveFunctional& phi1, const PositiveFunctional& phi2, double s) {
  require_unit_interval(s);
  if (phi1.dim() != phi2.dim()) throw Error(ErrorCode::ShapeMismatch, "functionals act on different dimensions");
  return 2.0 * real_trace(support_power(phi2.matrix(), s) * support_power(phi1.matrix(), 1.0 - s));
}

OgataReport ogata_modular(const PositiveFunctional& phi1, const PositiveFunctional& phi2, double s) {
  require_unit_interval(s);
  require_faithful(phi1);
  // Delta^{s/2}_{phi2,phi1} applied to the cone representative of phi1.
  const SuperOperator delta = relative_modular_operator(phi2, phi1);
  const SuperOperator delta_power =
      s == 0.0 ? SuperOperator::linear(support_projection(delta.matrix(), kDefaultRankTol)) : delta.power(s / 2.0);
  const BipartiteVector image = delta_power.apply(purify(phi1));

  OgataReport out;
  out.lhs_modular = 2.0 * image.amplitudes.squaredNorm();
  out.lhs_trace = ogata_trace_lhs(phi1, phi2, s);
  out.route_gap = std::abs(out.lhs_modular - out.lhs_trace);
  const double rhs = phi1.total() + phi2.total() - functional_distance(phi1, phi2);
  out.report = InequalityReport::evaluate(out.lhs_modular, rhs, Direction::GreaterEqual);
  return out;
}

InequalityReport hoa_generalized(const ComplexMatrix& a, const ComplexMatrix& b, const MonotoneFunction& mf) {
  require_psd_pair(a, b);
  const ComplexMatrix sqrt_fa = apply_nonnegative(a, [&mf](double t) { return std::sqrt(mf.f(t)); });
  const auto spec_b = spectral_decompose(b);
  const double zero_cut = kDefaultRankTol * std::max(1.0, spec_b.eigenvalues.cwiseAbs().maxCoeff());
  const ComplexMatrix gb = apply_spectral_function(
      spec_b, [&mf, zero_cut](double t) { return Complex(t > zero_cut ? mf.g(t) : 0.0); });
  const double lhs = 2.0 * real_trace(sqrt_fa * gb * sqrt_fa);
  return InequalityReport::evaluate(lhs, overlap_side(a, b), Direction::GreaterEqual);
}

InequalityReport phillips(const ComplexMatrix& a, const ComplexMatrix& b, double t) {
  if (!(t >= 1.0) || !std::isfinite(t)) throw Error(ErrorCode::BadExponent, "Phillips exponent must be >= 1");
  require_psd_pair(a, b);
  if (!check_psd(a - b)) throw Error(ErrorCode::OrderViolation, "A - B is not PSD");
  const double lhs = std::pow(schatten_norm(matrix_power(a, 1.0 / t) - matrix_power(b, 1.0 / t), t), t);
  return InequalityReport::evaluate(lhs, trace_norm(a - b), Direction::LessEqual);
}

}  // namespace modkit
