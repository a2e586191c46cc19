// Command-line front end: `verify` runs the identity/involution/rank suites
// and writes a JSON report, `simulate` integrates a trajectory and writes a
// CSV with a drift summary, `curvature` prints the curvature diagnostics.
//
// Exit codes: 0 pass, 1 check failure, 2 configuration error, 3 runtime
// singularity.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ckspace/dynamics.hpp"
#include "ckspace/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitSingularity = 3;

struct CommonOptions {
  std::string space = "all";
  std::optional<double> kappa1;
  std::optional<double> kappa2;
  std::string potential = "all";
  double beta0 = 0.7;
  double beta1 = 0.3;
  double beta2 = 0.45;
  double beta3 = 0.6;
  double k = 1.2;
  std::uint64_t seed = 1;
  int points = 200;
  double tol_bracket = 1e-8;
  double tol_rank = 1e-9;
  std::string out;
};

void add_space_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--space", opt.space,
                  "Space preset: s3|e3|h3|ads|m|ds|all");
  cmd->add_option("--kappa1", opt.kappa1, "Explicit curvature kappa1");
  cmd->add_option("--kappa2", opt.kappa2, "Explicit signature kappa2 (!= 0)");
}

void add_potential_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--potential", opt.potential,
                  "geodesic|family|sw|gkc1|gkc2|gkc3|kc|all");
  cmd->add_option("--beta0", opt.beta0, "Oscillator strength (sw, family)");
  cmd->add_option("--beta1", opt.beta1, "Barrier strength along x");
  cmd->add_option("--beta2", opt.beta2, "Barrier strength along y");
  cmd->add_option("--beta3", opt.beta3, "Barrier strength along z");
  cmd->add_option("--k", opt.k, "Kepler-Coulomb strength");
}

// Resolves --space/--kappa1/--kappa2 into named parameter sets.
// Preset and explicit kappas are mutually exclusive.
std::vector<std::pair<std::string, ckspace::CKParams>> resolve_spaces(
    const CommonOptions& opt, bool space_flag_given) {
  const bool explicit_kappa = opt.kappa1.has_value() || opt.kappa2.has_value();
  if (explicit_kappa && space_flag_given)
    throw std::invalid_argument(
        "--space and --kappa1/--kappa2 are mutually exclusive");
  if (explicit_kappa) {
    if (!opt.kappa1.has_value() || !opt.kappa2.has_value())
      throw std::invalid_argument("--kappa1 and --kappa2 must both be given");
    if (*opt.kappa2 == 0.0)
      throw std::invalid_argument("--kappa2 must be nonzero");
    return {{"custom", ckspace::CKParams(*opt.kappa1, *opt.kappa2)}};
  }
  if (opt.space == "all") {
    std::vector<std::pair<std::string, ckspace::CKParams>> all;
    for (const auto& [name, params] : ckspace::canonical_spaces())
      all.emplace_back(name, params);
    return all;
  }
  const auto preset = ckspace::CKParams::preset(opt.space);
  if (!preset)
    throw std::invalid_argument("unknown space preset: " + opt.space);
  return {{opt.space, *preset}};
}

// The `family` entry uses F(r) = beta0 r^2, which contracts to the proper
// flat SW radial term.
ckspace::PotentialSpec make_potential(const std::string& name,
                                      const CommonOptions& opt) {
  using ckspace::PotentialSpec;
  if (name == "geodesic") return PotentialSpec::family(0.0, 0.0, 0.0);
  if (name == "family") {
    const double b0 = opt.beta0;
    return PotentialSpec::family(
        opt.beta1, opt.beta2, opt.beta3,
        [b0](double r) { return b0 * r * r; },
        [b0](double r) { return 2.0 * b0 * r; });
  }
  if (name == "sw")
    return PotentialSpec::sw(opt.beta0, opt.beta1, opt.beta2, opt.beta3);
  if (name == "gkc1") return PotentialSpec::gkc1(opt.k, opt.beta2, opt.beta3);
  if (name == "gkc2") return PotentialSpec::gkc2(opt.k, opt.beta1, opt.beta3);
  if (name == "gkc3") return PotentialSpec::gkc3(opt.k, opt.beta1, opt.beta2);
  if (name == "kc") return PotentialSpec::kc(opt.k);
  throw std::invalid_argument("unknown potential: " + name);
}

std::vector<std::string> resolve_potentials(const CommonOptions& opt) {
  if (opt.potential == "all")
    return {"geodesic", "family", "sw", "gkc1", "gkc2", "gkc3", "kc"};
  make_potential(opt.potential, opt);  // validate the name
  return {opt.potential};
}

json config_json(const CommonOptions& opt) {
  json cfg;
  cfg["space"] = opt.space;
  if (opt.kappa1) cfg["kappa1"] = *opt.kappa1;
  if (opt.kappa2) cfg["kappa2"] = *opt.kappa2;
  cfg["potential"] = opt.potential;
  cfg["beta"] = {opt.beta0, opt.beta1, opt.beta2, opt.beta3};
  cfg["k"] = opt.k;
  cfg["seed"] = opt.seed;
  cfg["points"] = opt.points;
  cfg["tol_bracket"] = opt.tol_bracket;
  cfg["tol_rank"] = opt.tol_rank;
  return cfg;
}

json record_json(const ckspace::CheckRecord& rec) {
  json j;
  j["name"] = rec.name;
  j["kind"] = rec.kind;
  j["pass"] = rec.pass;
  j["tolerance"] = rec.tolerance;
  j["points_used"] = rec.points_used;
  j["points_skipped"] = rec.points_skipped;
  if (rec.kind == "rank") {
    j["rank"] = rec.rank;
    j["expected_rank"] = rec.expected_rank;
    j["rank_is_upper_bound"] = rec.rank_is_upper_bound;
  } else {
    j["max_abs_residual"] = rec.max_abs_residual;
  }
  return j;
}

int cmd_verify(const CommonOptions& opt, bool space_flag_given) {
  const auto spaces = resolve_spaces(opt, space_flag_given);
  const auto potentials = resolve_potentials(opt);

  json report;
  report["schema_version"] = 1;
  report["command"] = "verify";
  report["config"] = config_json(opt);
  report["cells"] = json::array();

  int total = 0, passed = 0;
  for (const auto& [space_name, params] : spaces) {
    for (const std::string& pot_name : potentials) {
      ckspace::CheckSpec spec;
      spec.space = params;
      spec.potential = make_potential(pot_name, opt);
      spec.points = opt.points;
      spec.seed = opt.seed;
      spec.tol_bracket = opt.tol_bracket;
      spec.tol_rank = opt.tol_rank;

      const ckspace::VerificationReport rep =
          pot_name == "geodesic" ? ckspace::geodesic_suite(spec)
                                 : ckspace::potential_suite(spec);

      json cell;
      cell["space"] = space_name;
      cell["potential"] = pot_name;
      cell["checks"] = json::array();
      std::printf("--- space=%s potential=%s\n", space_name.c_str(),
                  pot_name.c_str());
      for (const ckspace::CheckRecord& rec : rep.checks) {
        cell["checks"].push_back(record_json(rec));
        ++total;
        if (rec.pass) ++passed;
        if (rec.kind == "rank")
          std::printf("  [%s] %-34s rank=%d expected%s%d\n",
                      rec.pass ? "PASS" : "FAIL", rec.name.c_str(), rec.rank,
                      rec.rank_is_upper_bound ? "<=" : "=",
                      rec.expected_rank);
        else
          std::printf("  [%s] %-34s residual=%.3e tol=%.1e (used %d, "
                      "skipped %d)\n",
                      rec.pass ? "PASS" : "FAIL", rec.name.c_str(),
                      rec.max_abs_residual, rec.tolerance, rec.points_used,
                      rec.points_skipped);
      }
      report["cells"].push_back(cell);
    }
  }
  report["summary"] = {{"checks", total},
                       {"passed", passed},
                       {"failed", total - passed},
                       {"all_pass", passed == total}};
  std::printf("=== %d/%d checks passed\n", passed, total);

  const std::string out = opt.out.empty() ? "report.json" : opt.out;
  std::ofstream f(out);
  if (!f) {
    std::fprintf(stderr, "error: cannot write %s\n", out.c_str());
    return kExitConfigError;
  }
  f << report.dump(2) << '\n';
  return passed == total ? kExitPass : kExitCheckFailure;
}

std::vector<ckspace::Observable> watch_list(const ckspace::PotentialSpec& pot,
                                            const ckspace::CKParams& params) {
  using namespace ckspace;
  std::vector<Observable> watch;
  watch.push_back(hamiltonian(pot, params).renamed("H"));
  const RotationIntegrals rot = integrals_rotation(pot, params);
  watch.push_back(rot.i12);
  watch.push_back(rot.i13);
  watch.push_back(rot.i23);
  watch.push_back(integral_i123(pot, params));
  if (pot.kind == PotentialKind::SW) {
    const SWIntegrals swi = integrals_sw(pot, params);
    watch.push_back(swi.i01);
    watch.push_back(swi.i02);
    watch.push_back(swi.i03);
  } else if (pot.kind == PotentialKind::KC) {
    for (const Observable& l : lrl_vector(pot.k, params)) watch.push_back(l);
  } else if (const int gi = pot.gkc_index(); gi != 0) {
    watch.push_back(integral_L(gi, pot, params));
    const double betas[3] = {pot.beta1, pot.beta2, pot.beta3};
    for (int j = 1; j <= 3; ++j)
      if (j != gi && betas[j - 1] == 0.0)
        watch.push_back(integral_L(j, pot, params));
  }
  return watch;
}

int cmd_simulate(const CommonOptions& opt, bool space_flag_given,
                 const std::string& init, double t_end) {
  const auto spaces = resolve_spaces(opt, space_flag_given);
  if (spaces.size() != 1)
    throw std::invalid_argument("simulate needs a single space");
  if (opt.potential == "all")
    throw std::invalid_argument("simulate needs a single potential");
  const auto& [space_name, params] = spaces.front();
  const ckspace::PotentialSpec pot = make_potential(opt.potential, opt);

  std::array<double, 6> init_vals{};
  {
    std::stringstream ss(init);
    std::string item;
    int n = 0;
    while (std::getline(ss, item, ',') && n < 6)
      init_vals[n++] = std::stod(item);
    if (n != 6)
      throw std::invalid_argument(
          "--init needs r,theta,phi,pr,ptheta,pphi");
  }
  const ckspace::PhasePoint pt0{{init_vals[0], init_vals[1], init_vals[2]},
                                init_vals[3], init_vals[4], init_vals[5]};

  ckspace::IntegrateOptions iopts;
  iopts.guard = ckspace::singularity_guard(pot, params);
  if (iopts.guard(pt0) < iopts.guard_margin) {
    std::fprintf(stderr, "error: initial point singular\n");
    return kExitConfigError;
  }

  const auto watch = watch_list(pot, params);
  const ckspace::Observable h = ckspace::hamiltonian(pot, params);
  const ckspace::Trajectory traj =
      ckspace::integrate(h, pt0, t_end, watch, iopts);

  const std::string out = opt.out.empty() ? "trajectory.csv" : opt.out;
  std::ofstream f(out);
  if (!f) {
    std::fprintf(stderr, "error: cannot write %s\n", out.c_str());
    return kExitConfigError;
  }
  ckspace::write_csv(f, traj);

  std::printf("space=%s potential=%s steps=%zu status=%s\n",
              space_name.c_str(), opt.potential.c_str(), traj.samples.size(),
              ckspace::trajectory_status_name(traj.status));
  for (std::size_t i = 0; i < traj.watched_names.size(); ++i)
    std::printf("  drift %-8s %.3e\n", traj.watched_names[i].c_str(),
                traj.max_relative_drift(i));

  if (traj.status != ckspace::TrajectoryStatus::Completed) {
    std::fprintf(stderr, "warning: %s\n", traj.message.c_str());
    return kExitSingularity;
  }
  return kExitPass;
}

int cmd_curvature(const CommonOptions& opt, bool space_flag_given) {
  const auto spaces = resolve_spaces(opt, space_flag_given);
  const int points = std::min(opt.points, 16);
  for (const auto& [space_name, params] : spaces) {
    const ckspace::PointSampler sampler(opt.seed);
    double worst_fd = 0.0;
    ckspace::CurvatureReport rep{};
    for (int i = 0; i < points; ++i) {
      const ckspace::PolarPoint q = sampler.at(i).q;
      rep = ckspace::riemann_ricci(q, params);
      const ckspace::CurvatureResiduals res =
          ckspace::curvature_residuals(q, params);
      worst_fd = std::max({worst_fd, res.christoffel_fd, res.riemann_fd,
                           res.sectional_dev, res.scalar_dev});
    }
    std::printf(
        "space=%-6s sectional=(%g, %g, %g) K=%g fd_residual=%.3e\n",
        space_name.c_str(), rep.sectional[0], rep.sectional[1],
        rep.sectional[2], rep.scalar, worst_fd);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian mechanics on the six Cayley-Klein spaces of "
               "constant curvature"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string init;
  double t_end = 10.0;

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the involution/independence/identity suites");
  add_space_flags(verify, opt);
  add_potential_flags(verify, opt);
  verify->add_option("--seed", opt.seed, "Sampler seed");
  verify->add_option("--points", opt.points, "Sample points per check");
  verify->add_option("--tol-bracket", opt.tol_bracket, "Bracket tolerance");
  verify->add_option("--tol-rank", opt.tol_rank, "SVD rank threshold");
  verify->add_option("--out", opt.out, "Report path (default report.json)");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Integrate a trajectory and report integral drift");
  add_space_flags(simulate, opt);
  add_potential_flags(simulate, opt);
  simulate->add_option("--init", init, "r,theta,phi,pr,ptheta,pphi")
      ->required();
  simulate->add_option("--t-end", t_end, "Integration horizon");
  simulate->add_option("--seed", opt.seed, "Sampler seed");
  simulate->add_option("--out", opt.out, "CSV path (default trajectory.csv)");

  CLI::App* curvature = app.add_subcommand(
      "curvature", "Print sectional/scalar curvature with FD residuals");
  add_space_flags(curvature, opt);
  curvature->add_option("--points", opt.points, "Sample points");
  curvature->add_option("--seed", opt.seed, "Sampler seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitConfigError;
  }

  try {
    if (verify->parsed())
      return cmd_verify(opt, verify->count("--space") > 0);
    if (simulate->parsed())
      return cmd_simulate(opt, simulate->count("--space") > 0, init, t_end);
    if (curvature->parsed())
      return cmd_curvature(opt, curvature->count("--space") > 0);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheckFailure;
  }
  return kExitConfigError;
}
