#include "modkit_cli/campaign.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>

#include "modkit/cone.hpp"
#include "modkit/inequalities.hpp"
#include "modkit/kms.hpp"
#include "modkit/modular.hpp"
#include "modkit/random.hpp"

namespace modkit::cli {

double Tolerance::residual() const { return value.value_or(kDefaultResidualTol); }
double Tolerance::slack() const { return value.value_or(kSlackTol); }

Tolerance resolve_tolerance(std::optional<double> flag, const char* env_value) {
  Tolerance tol;
  if (flag) {
    tol.value = *flag;
  } else if (env_value != nullptr && *env_value != '\0') {
    try {
      std::size_t used = 0;
      tol.value = std::stod(env_value, &used);
      if (used != std::string(env_value).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError(std::string("MODKIT_TOL is not a number: ") + env_value);
    }
  }
  if (tol.value && !(*tol.value > 0.0 && std::isfinite(*tol.value))) {
    throw UsageError("tolerance must be positive and finite");
  }
  return tol;
}

namespace {

// Collects the signed slacks of one sample.
class Sample {
 public:
  explicit Sample(const Tolerance& tol) : tol_(tol) {}

  void residual(double value) { record(-value, tol_.residual()); }
  void inequality(const InequalityReport& r) { record(r.relative_slack(), tol_.slack()); }
  // A quantity that must be nonnegative, already scaled.
  void nonnegative(double value) { record(std::min(value, 0.0), tol_.residual()); }

  bool failed() const { return failed_; }
  double worst() const { return worst_; }

 private:
  void record(double slack, double tol) {
    worst_ = std::min(worst_, slack);
    if (!(slack >= -tol)) failed_ = true;
  }

  const Tolerance& tol_;
  bool failed_ = false;
  double worst_ = std::numeric_limits<double>::infinity();
};

double rel(double residual, double scale) { return residual / std::max(1.0, scale); }

void vec_sample(Rng& rng, Eigen::Index d, Sample& s) {
  const ComplexMatrix a = random_gaussian(rng, d, d), b = random_gaussian(rng, d, d), x = random_gaussian(rng, d, d);
  const ComplexVector dense = kron(a, b) * vec(x).amplitudes;
  const ComplexVector fast = kron_apply_vec(a, b, x).amplitudes;
  s.residual(rel((dense - fast).norm(), a.norm() * b.norm() * x.norm()));
  s.residual(rel((unvec(vec(x)) - x).norm(), x.norm()));
  const ComplexMatrix y = random_gaussian(rng, d, d);
  s.residual(rel(std::abs(inner(vec(x), vec(y)) - (x.adjoint() * y).trace()), x.norm() * y.norm()));
}

void modular_sample(Rng& rng, Eigen::Index d, Sample& s) {
  const DensityMatrix phi = random_density(rng, d), omega = random_density(rng, d);
  const SuperOperator delta = relative_modular_operator(phi, omega);
  s.residual(rel(residual(delta, relative_modular_operator_from_s(phi, omega)), delta.matrix().norm()));
  const SuperOperator sop = relative_s_matrix(phi, omega);
  const SuperOperator polar = modular_conjugation(d) * delta.power(0.5);
  s.residual(rel(residual(sop, polar), sop.matrix().norm()));
  const BipartiteVector image = delta.power(0.5).apply(purify(omega));
  s.residual((image - purify(phi)).norm());
}

void kms_sample(Rng& rng, Eigen::Index d, Sample& s) {
  static constexpr std::array<double, 3> kBetas{0.5, 1.0, 2.0};
  const double beta = kBetas[static_cast<std::size_t>(rng.uniform_int(0, 2))];
  const GibbsSystem sys = gibbs_hamiltonian(random_density(rng, d), beta);
  const ComplexMatrix a = random_gaussian(rng, d, d), b = random_gaussian(rng, d, d);
  const double scale = a.norm() * b.norm();
  for (double t : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    const Complex boundary = kms_function(sys, a, b, Complex(t, beta));
    const Complex expected = sys.state(heisenberg_evolve(sys, b, t) * a);
    s.residual(rel(std::abs(boundary - expected), scale));
    s.residual(rel(std::abs(sys.state(heisenberg_evolve(sys, a, t)) - sys.state(a)), a.norm()));
  }
}

void cone_sample(Rng& rng, Eigen::Index d, Sample& s) {
  const ConeElement xi(random_psd(rng, d)), eta(random_psd(rng, d));
  s.nonnegative(inner(xi.vector(), eta.vector()).real());
  const SuperOperator j = modular_conjugation(d);
  s.residual((j.apply(xi.vector()) - xi.vector()).norm());
  const JordanConeSplit split = decompose_j_fixed(vec(random_hermitian(rng, d)));
  s.residual(std::abs(inner(split.plus.vector(), split.minus.vector())));
  const ComplexMatrix m = random_gaussian(rng, d, d);
  const BipartiteVector moved = apply_m_jm(m, xi.vector());
  const ComplexMatrix w = unvec(moved);
  const double min_eig = spectral_decompose(0.5 * (w + w.adjoint())).eigenvalues.minCoeff();
  s.nonnegative(min_eig / std::max(1.0, w.norm()));
}

void inequality_sample(Rng& rng, Eigen::Index d, Sample& s, const std::vector<MonotoneFunction>& registry) {
  static constexpr std::array<double, 5> kS{0.0, 0.25, 0.5, 0.75, 1.0};
  static constexpr std::array<double, 4> kT{1.0, 1.5, 2.0, 3.0};
  const Eigen::Index rank_a = rng.uniform_int(1, static_cast<int>(d));
  const Eigen::Index rank_b = rng.uniform_int(1, static_cast<int>(d));
  const ComplexMatrix a = random_psd(rng, d, rank_a), b = random_psd(rng, d, rank_b);

  const SandwichReport sw = norm_sandwich(a, b);
  s.inequality(sw.lower);
  s.inequality(sw.upper);
  s.inequality(powers_stormer(a, b));
  s.inequality(ozawa_s(a, b, kS[static_cast<std::size_t>(rng.uniform_int(0, 4))]));

  const PositiveFunctional phi1(random_density(rng, d).matrix() * rng.uniform(0.5, 2.0));
  const PositiveFunctional phi2(b);
  const OgataReport og = ogata_modular(phi1, phi2, kS[static_cast<std::size_t>(rng.uniform_int(0, 4))]);
  s.inequality(og.report);
  s.residual(rel(og.route_gap, og.lhs_trace));

  s.inequality(hoa_generalized(a, b, registry[static_cast<std::size_t>(rng.uniform_int(0, 2))]));
  s.inequality(phillips(a + b, b, kT[static_cast<std::size_t>(rng.uniform_int(0, 3))]));
}

SuiteResult run_suite(const CampaignConfig& config, const std::string& suite) {
  Rng rng(config.seed);
  const auto registry = monotone_registry();
  SuiteResult result{suite, config.samples, 0, std::numeric_limits<double>::infinity()};
  for (int k = 0; k < config.samples; ++k) {
    Sample sample(config.tolerance);
    const Eigen::Index d = config.dimension;
    if (suite == "vec") vec_sample(rng, d, sample);
    else if (suite == "modular") modular_sample(rng, d, sample);
    else if (suite == "kms") kms_sample(rng, d, sample);
    else if (suite == "cone") cone_sample(rng, d, sample);
    else inequality_sample(rng, d, sample, registry);
    if (sample.failed()) ++result.failures;
    result.worst_slack = std::min(result.worst_slack, sample.worst());
  }
  return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"vec", "modular", "kms", "cone", "inequalities", "all"};
  return names;
}

CampaignReport run_campaign(const CampaignConfig& config, const std::string& suite) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite: " + suite);
  if (config.samples < 1) throw UsageError("samples must be >= 1");
  if (config.dimension < 2 || config.dimension > 16) throw UsageError("dimension must lie in 2..16");

  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  if (suite == "all") {
    for (const auto& name : names)
      if (name != "all") report.suites.push_back(run_suite(config, name));
  } else {
    report.suites.push_back(run_suite(config, suite));
  }
  report.total = {suite, 0, 0, std::numeric_limits<double>::infinity()};
  for (const auto& r : report.suites) {
    report.total.samples += r.samples;
    report.total.failures += r.failures;
    report.total.worst_slack = std::min(report.total.worst_slack, r.worst_slack);
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json campaign_to_json(const CampaignReport& report) {
  auto summary = [](const SuiteResult& r) {
    Json j;
    j["suite"] = r.suite;
    j["samples"] = r.samples;
    j["failures"] = r.failures;
    j["worst_slack"] = r.worst_slack;
    return j;
  };
  Json j = summary(report.total);
  j["wall_time"] = report.wall_time;
  if (report.suites.size() > 1) {
    j["suites"] = Json::array();
    for (const auto& r : report.suites) j["suites"].push_back(summary(r));
  }
  return j;
}

}  // namespace modkit::cli
