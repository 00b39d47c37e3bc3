#include "modkit_cli/app.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "modkit/cone.hpp"
#include "modkit/errors.hpp"
#include "modkit/inequalities.hpp"
#include "modkit/kms.hpp"
#include "modkit/modular.hpp"
#include "modkit/random.hpp"
#include "modkit/schmidt.hpp"
#include "modkit_cli/campaign.hpp"
#include "modkit_cli/matrix_io.hpp"

namespace modkit::cli {

namespace {

struct Common {
  bool json = false;
  std::optional<double> tol_flag;
  std::uint64_t seed = 0;
  int samples = 50;
  int dim = 4;
  Tolerance tol;
};

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(10) << x;
  return s.str();
}

std::string fmt(const RealVector& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + fmt(v(i));
  return out + "]";
}

void emit(std::ostream& out, const Common& c, const Json& j, const std::vector<std::pair<std::string, std::string>>& lines) {
  if (c.json) {
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : lines) out << std::left << std::setw(24) << key << value << "\n";
}

int verdict(bool pass) { return pass ? kPass : kFail; }

Json report_json(const InequalityReport& r) {
  Json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["slack"] = r.slack;
  j["relative_slack"] = r.relative_slack();
  return j;
}

bool passes(const InequalityReport& r, const Tolerance& tol) { return r.relative_slack() >= -tol.slack(); }

// ---------------------------------------------------------------- schmidt

int cmd_schmidt(const std::string& path, const Common& c, std::ostream& out) {
  const BipartiteVector u = load_bipartite(path);
  const SchmidtData s = schmidt_decompose(u);
  Json j;
  j["dim_left"] = u.dim_left;
  j["dim_right"] = u.dim_right;
  j["coefficients"] = real_array(s.coefficients.head(s.rank));
  j["rank"] = s.rank;
  const bool square = u.dim_left == u.dim_right;
  j["cyclic_separating"] = square ? Json(is_cyclic_separating(u)) : Json(nullptr);
  emit(out, c, j,
       {{"coefficients", fmt(RealVector(s.coefficients.head(s.rank)))},
        {"rank", std::to_string(s.rank)},
        {"cyclic_separating", square ? (is_cyclic_separating(u) ? "true" : "false") : "n/a (dY != dX)"}});
  return kPass;
}

// ---------------------------------------------------------------- modular

int cmd_modular(const std::string& phi_path, const std::string& omega_path, std::optional<double> t, bool verify,
                const Common& c, std::ostream& out) {
  const DensityMatrix phi(load_matrix(phi_path));
  const DensityMatrix omega(load_matrix(omega_path));
  if (phi.dim() != omega.dim()) throw Error(ErrorCode::ShapeMismatch, "phi and omega have different dimensions");
  const Eigen::Index d = phi.dim();
  const double tol = c.tol.residual();

  const SuperOperator delta = relative_modular_operator(phi, omega);
  const SuperOperator sop = relative_s_matrix(phi, omega);
  const double cross = residual(delta, relative_modular_operator_from_s(phi, omega)) / std::max(1.0, delta.matrix().norm());
  const double polar =
      residual(sop, modular_conjugation(d) * delta.power(0.5)) / std::max(1.0, sop.matrix().norm());
  bool pass = cross < tol && polar < tol;

  Json j;
  j["dim"] = d;
  j["delta_spectrum"] = real_array(delta.spectrum());
  j["cross_route_residual"] = cross;
  j["polar_residual"] = polar;
  std::vector<std::pair<std::string, std::string>> lines{{"delta_spectrum", fmt(delta.spectrum())},
                                                         {"cross_route_residual", fmt(cross)},
                                                         {"polar_residual", fmt(polar)}};
  if (t) {
    require_faithful(phi);
    const SuperOperator closed = relative_modular_unitary(phi, omega, *t);
    const double unitary_gap = residual(closed, delta.imaginary_power(*t));
    pass = pass && unitary_gap < tol;
    j["t"] = *t;
    j["unitary_residual"] = unitary_gap;
    j["connes_cocycle"] = matrix_to_json(connes_cocycle(phi, omega, *t));
    lines.emplace_back("unitary_residual", fmt(unitary_gap));
  }
  if (verify) {
    std::vector<ComplexMatrix> units;
    for (Eigen::Index mu = 0; mu < d; ++mu)
      for (Eigen::Index nu = 0; nu < d; ++nu) {
        ComplexMatrix e = ComplexMatrix::Zero(d, d);
        e(mu, nu) = 1.0;
        units.push_back(e);
      }
    std::vector<double> grid{0.3, 1.0, 2.7};
    if (t) grid.push_back(*t);
    const TomitaTakesakiReport tt = verify_tomita_takesaki(omega, units, grid, tol);
    pass = pass && tt.pass;
    Json v;
    v["max_commutator"] = tt.max_commutator;
    v["max_flow_residual"] = tt.max_flow_residual;
    v["checks"] = tt.checks;
    v["pass"] = tt.pass;
    j["tomita_takesaki"] = v;
    lines.emplace_back("max_commutator", fmt(tt.max_commutator));
    lines.emplace_back("max_flow_residual", fmt(tt.max_flow_residual));
  }
  j["pass"] = pass;
  lines.emplace_back("pass", pass ? "true" : "false");
  emit(out, c, j, lines);
  return verdict(pass);
}

// ---------------------------------------------------------------- kms-verify

int cmd_kms(const std::string& state_path, double beta, const Common& c, std::ostream& out) {
  const GibbsSystem sys = gibbs_hamiltonian(DensityMatrix(load_matrix(state_path)), beta);
  const Eigen::Index d = sys.state.dim();
  Rng rng(c.seed);
  double worst_boundary = 0.0, worst_invariance = 0.0;
  for (int k = 0; k < c.samples; ++k) {
    const ComplexMatrix a = random_gaussian(rng, d, d), b = random_gaussian(rng, d, d);
    for (double t : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      const Complex boundary = kms_function(sys, a, b, Complex(t, beta));
      const Complex expected = sys.state(heisenberg_evolve(sys, b, t) * a);
      worst_boundary = std::max(worst_boundary, std::abs(boundary - expected) / std::max(1.0, a.norm() * b.norm()));
      const double inv = std::abs(sys.state(heisenberg_evolve(sys, a, t)) - sys.state(a)) / std::max(1.0, a.norm());
      worst_invariance = std::max(worst_invariance, inv);
    }
  }
  const auto clusters = eigenvalue_clusters(sys.state);
  const auto basis = centralizer_basis(sys.state);
  const bool pass = worst_boundary < c.tol.residual() && worst_invariance < c.tol.residual();

  Json j;
  j["beta"] = beta;
  j["energies"] = real_array(spectral_decompose(sys.hamiltonian).eigenvalues);
  j["samples"] = c.samples;
  j["max_boundary_residual"] = worst_boundary;
  j["max_invariance_residual"] = worst_invariance;
  j["centralizer_dimension"] = basis.size();
  j["pass"] = pass;
  emit(out, c, j,
       {{"energies", fmt(spectral_decompose(sys.hamiltonian).eigenvalues)},
        {"max_boundary_residual", fmt(worst_boundary)},
        {"max_invariance_residual", fmt(worst_invariance)},
        {"centralizer_dimension", std::to_string(basis.size())},
        {"pass", pass ? "true" : "false"}});
  return verdict(pass);
}

// ---------------------------------------------------------------- cone

int cmd_cone(const std::string& path, const Common& c, std::ostream& out) {
  const BipartiteVector v = load_bipartite(path);
  const bool member = cone_contains(v, c.tol.residual());
  const ComplexMatrix x = unvec(v);
  const bool j_fixed = is_hermitian(x);
  Json j;
  j["in_cone"] = member;
  j["j_fixed"] = j_fixed;
  std::vector<std::pair<std::string, std::string>> lines{{"in_cone", member ? "true" : "false"},
                                                         {"j_fixed", j_fixed ? "true" : "false"}};
  double reconstruction = 0.0;
  if (j_fixed) {
    const JordanConeSplit split = decompose_j_fixed(v);
    reconstruction = (split.plus.vector() - split.minus.vector() - v).norm();
    const double overlap = std::abs(inner(split.plus.vector(), split.minus.vector()));
    j["plus"] = matrix_to_json(split.plus.witness());
    j["minus"] = matrix_to_json(split.minus.witness());
    j["orthogonality"] = overlap;
    lines.emplace_back("orthogonality", fmt(overlap));
  } else {
    const auto parts = decompose_general(v);
    const Complex i(0.0, 1.0);
    const ComplexVector back = parts[0].vector().amplitudes - parts[1].vector().amplitudes +
                               i * parts[2].vector().amplitudes - i * parts[3].vector().amplitudes;
    reconstruction = (back - v.amplitudes).norm();
    Json arr = Json::array();
    for (const auto& p : parts) arr.push_back(matrix_to_json(p.witness()));
    j["parts"] = arr;
  }
  const double probe = min_extreme_ray_pairing(v, c.seed);
  const bool pass = reconstruction < c.tol.residual() * std::max(1.0, v.norm());
  j["reconstruction_residual"] = reconstruction;
  j["min_extreme_ray_pairing"] = probe;
  j["pass"] = pass;
  lines.emplace_back("reconstruction_residual", fmt(reconstruction));
  lines.emplace_back("min_extreme_ray_pairing", fmt(probe));
  lines.emplace_back("pass", pass ? "true" : "false");
  emit(out, c, j, lines);
  return verdict(pass);
}

// ---------------------------------------------------------------- ineq

MonotoneFunction monotone_by_name(const std::string& name) {
  if (name == "sqrt") return MonotoneFunction::power(0.5);
  if (name == "rational") return MonotoneFunction::rational();
  if (name == "log1p") return MonotoneFunction::log1p();
  throw UsageError("unknown monotone function: " + name + " (sqrt, rational, log1p)");
}

int cmd_ineq(const std::string& kind, const std::string& a_path, const std::string& b_path, double s, double t,
             const std::string& f, const Common& c, std::ostream& out) {
  const ComplexMatrix a = load_matrix(a_path), b = load_matrix(b_path);
  Json j;
  j["kind"] = kind;
  std::vector<std::pair<std::string, std::string>> lines;
  std::vector<InequalityReport> reports;
  auto add = [&](const std::string& label, const InequalityReport& r) {
    j[label] = report_json(r);
    lines.emplace_back(label + ".lhs", fmt(r.lhs));
    lines.emplace_back(label + ".rhs", fmt(r.rhs));
    lines.emplace_back(label + ".slack", fmt(r.slack));
    reports.push_back(r);
  };
  bool extra_pass = true;
  if (kind == "sandwich") {
    const SandwichReport r = norm_sandwich(a, b);
    add("lower", r.lower);
    add("upper", r.upper);
  } else if (kind == "powers-stormer") {
    add("report", powers_stormer(a, b));
  } else if (kind == "ozawa") {
    add("report", ozawa_s(a, b, s));
  } else if (kind == "ogata") {
    const OgataReport r = ogata_modular(PositiveFunctional(a), PositiveFunctional(b), s);
    add("report", r.report);
    j["lhs_trace"] = r.lhs_trace;
    j["route_gap"] = r.route_gap;
    lines.emplace_back("route_gap", fmt(r.route_gap));
    extra_pass = r.route_gap <= c.tol.residual() * std::max(1.0, r.lhs_trace);
  } else if (kind == "hoa") {
    add("report", hoa_generalized(a, b, monotone_by_name(f)));
  } else if (kind == "phillips") {
    add("report", phillips(a, b, t));
  } else {
    throw UsageError("unknown inequality: " + kind);
  }
  bool pass = extra_pass;
  for (const auto& r : reports) pass = pass && passes(r, c.tol);
  j["pass"] = pass;
  lines.emplace_back("pass", pass ? "true" : "false");
  emit(out, c, j, lines);
  return verdict(pass);
}

// ---------------------------------------------------------------- campaign

int cmd_campaign(const std::string& suite, const Common& c, std::ostream& out) {
  CampaignConfig config;
  config.seed = c.seed;
  config.dimension = c.dim;
  config.samples = c.samples;
  config.tolerance = c.tol;
  const CampaignReport report = run_campaign(config, suite);
  const Json j = campaign_to_json(report);
  std::vector<std::pair<std::string, std::string>> lines{{"suite", suite},
                                                         {"samples", std::to_string(report.total.samples)},
                                                         {"failures", std::to_string(report.total.failures)},
                                                         {"worst_slack", fmt(report.total.worst_slack)},
                                                         {"wall_time", fmt(report.wall_time)}};
  for (const auto& r : report.suites)
    if (report.suites.size() > 1)
      lines.emplace_back("  " + r.suite, std::to_string(r.failures) + " failures, worst " + fmt(r.worst_slack));
  emit(out, c, j, lines);
  return verdict(report.total.failures == 0);
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"modkit: modular theory of B(H_d) and trace-inequality verification"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&c](CLI::App* cmd) {
    cmd->add_flag("--json", c.json, "Emit JSON");
    cmd->add_option("--tol", c.tol_flag, "Global relative tolerance (overrides MODKIT_TOL)");
  };
  auto add_sampling = [&c](CLI::App* cmd) {
    cmd->add_option("--seed", c.seed, "Random seed");
    cmd->add_option("--samples", c.samples, "Number of random samples")->check(CLI::PositiveNumber);
  };

  std::string path, phi_path, omega_path, a_path, b_path, kind, suite = "all", f = "sqrt";
  std::optional<double> t_opt;
  bool verify = false;
  double beta = 1.0, s = 0.5, t = 2.0;

  auto* schmidt = app.add_subcommand("schmidt", "Schmidt decomposition of a vector or matrix payload");
  schmidt->add_option("input", path, "File, or - for stdin")->required();
  add_common(schmidt);

  auto* modular = app.add_subcommand("modular", "Relative modular operator of two density matrices");
  modular->add_option("phi", phi_path, "Density matrix of phi")->required();
  modular->add_option("omega", omega_path, "Density matrix of omega (faithful)")->required();
  modular->add_option("--t", t_opt, "Also check Delta^{it} and report the Connes cocycle at t");
  modular->add_flag("--verify", verify, "Run the Tomita-Takesaki checks on matrix units");
  add_common(modular);

  auto* kms = app.add_subcommand("kms-verify", "KMS boundary condition for a faithful Gibbs state");
  kms->add_option("state", path, "Density matrix")->required();
  kms->add_option("--beta", beta, "Inverse temperature");
  add_common(kms);
  add_sampling(kms);

  auto* cone = app.add_subcommand("cone", "Natural-cone membership and decomposition");
  cone->add_option("input", path, "File, or - for stdin")->required();
  cone->add_option("--seed", c.seed, "Seed for the extreme-ray probe");
  add_common(cone);

  auto* ineq = app.add_subcommand("ineq", "Evaluate one trace inequality on two PSD matrices");
  ineq->add_option("kind", kind, "sandwich | powers-stormer | ozawa | ogata | hoa | phillips")->required();
  ineq->add_option("A", a_path, "First matrix (phi1 for ogata)")->required();
  ineq->add_option("B", b_path, "Second matrix (phi2 for ogata)")->required();
  ineq->add_option("--s", s, "Exponent s in [0, 1] (ozawa, ogata)");
  ineq->add_option("--t", t, "Exponent t >= 1 (phillips)");
  ineq->add_option("--f", f, "Monotone function for hoa: sqrt | rational | log1p");
  add_common(ineq);

  auto* campaign = app.add_subcommand("campaign", "Seeded verification campaign");
  campaign->add_option("--suite", suite, "vec | modular | kms | cone | inequalities | all");
  campaign->add_option("--dim", c.dim, "Matrix dimension (2..16)");
  add_common(campaign);
  add_sampling(campaign);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    c.tol = resolve_tolerance(c.tol_flag, std::getenv("MODKIT_TOL"));
    if (schmidt->parsed()) return cmd_schmidt(path, c, out);
    if (modular->parsed()) return cmd_modular(phi_path, omega_path, t_opt, verify, c, out);
    if (kms->parsed()) return cmd_kms(path, beta, c, out);
    if (cone->parsed()) return cmd_cone(path, c, out);
    if (ineq->parsed()) return cmd_ineq(kind, a_path, b_path, s, t, f, c, out);
    if (campaign->parsed()) return cmd_campaign(suite, c, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace modkit::cli
