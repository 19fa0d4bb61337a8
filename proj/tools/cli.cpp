#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "riesz/configurations.hpp"
#include "riesz/discrepancy.hpp"
#include "riesz/errors.hpp"
#include "riesz/measures.hpp"
#include "riesz/rng.hpp"

#ifndef RIESZ_TOOL_VERSION
#define RIESZ_TOOL_VERSION "unknown"
#endif

namespace riesz::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Raised for bad command-line values; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CompactSetModel load_set(const fs::path& path) {
  try {
    return parse_set_definition(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path.string() + "'");
  f << text;
}

fs::path manifest_path_for(const fs::path& out, const std::string& explicit_path) {
  if (!explicit_path.empty()) return explicit_path;
  fs::path p = out;
  p.replace_extension(".manifest.json");
  return p;
}

Point as_point(const std::vector<double>& v, const CompactSetModel& set, const char* what) {
  if (v.size() != set.dim()) {
    throw UsageError(std::string(what) + " needs " + std::to_string(set.dim()) + " coordinates");
  }
  return v;
}

// Default exterior probe: one unit beyond the enclosing ball along e1.
Point default_probe(const CompactSetModel& set) {
  return axpy(set.enclosing_radius() + 1.0, unit_vector(set.dim(), 0), set.enclosing_center());
}

// Default first Leja point: the point of E furthest along the last axis.
Point default_xi0(const CompactSetModel& set) {
  const Point far = axpy(set.enclosing_radius() + 1.0, unit_vector(set.dim(), set.dim() - 1), set.enclosing_center());
  return set.project(far);
}

json manifest(const std::string& command, const std::vector<std::string>& args, const CompactSetModel& set,
              const KernelSpec& spec, std::uint64_t seed, json params, json outputs) {
  return {{"command", command},
          {"argv", args},
          {"set_definition", format_set_definition(set)},
          {"kernel", {{"alpha", spec.alpha()}, {"dim", spec.dim()}}},
          {"seed", seed},
          {"params", std::move(params)},
          {"outputs", std::move(outputs)},
          {"tool_version", RIESZ_TOOL_VERSION}};
}

struct GenerateArgs {
  std::string set_path;
  std::string method = "fekete";
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out = "points.csv";
  std::string manifest;
  double alpha = 2.0;
  std::size_t restarts = 1;
  std::size_t max_iters = 5000;
  std::size_t candidates = 2000;
  std::vector<double> xi0;
};

struct Generated {
  PointConfig points;
  json results = json::object();
};

Generated generate_points(const CompactSetModel& set, const KernelSpec& spec, const std::string& method, std::size_t n,
                          std::uint64_t seed, const GenerateArgs& a) {
  Generated g;
  if (method == "fekete") {
    if (n < 2) throw UsageError("fekete needs --n >= 2");
    FeketeSearchParams params;
    params.n = n;
    params.restarts = a.restarts;
    params.max_iters = a.max_iters;
    params.seed = seed;
    const auto r = fekete_search(set, spec, params);
    g.points = r.points;
    g.results = {{"iterations", r.iterations}, {"converged", r.converged}, {"best_restart", r.best_restart}};
  } else if (method == "leja") {
    if (n < 1) throw UsageError("leja needs --n >= 1");
    const Point xi0 = a.xi0.empty() ? default_xi0(set) : as_point(a.xi0, set, "--xi0");
    g.points = leja_sequence(set, spec, n, xi0, a.candidates, seed);
    g.results = {{"xi0", xi0}};
  } else if (method == "random") {
    if (n < 1) throw UsageError("random needs --n >= 1");
    g.points = random_config(set, n, seed);
  } else {
    throw UsageError("unknown --method '" + method + "' (fekete, leja, random)");
  }
  return g;
}

int cmd_generate(const GenerateArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  const auto set = load_set(a.set_path);
  const KernelSpec spec(a.alpha, static_cast<int>(set.dim()));
  auto g = generate_points(set, spec, a.method, a.n, a.seed, a);

  std::ostringstream csv;
  write_points_csv(csv, g.points);
  write_text(a.out, csv.str());

  if (g.points.size() >= 2) {
    const double e = discrete_energy(g.points, spec);
    g.results["energy"] = e;
    out << "energy " << number(e) << "\n";
  } else {
    g.results["energy"] = nullptr;
    out << "energy undefined for a single point\n";
  }
  const fs::path mpath = manifest_path_for(a.out, a.manifest);
  json params = {{"method", a.method}, {"n", a.n}};
  if (a.method == "fekete") {
    params["restarts"] = a.restarts;
    params["max_iters"] = a.max_iters;
  } else if (a.method == "leja") {
    params["candidates"] = a.candidates;
    params["xi0"] = g.results["xi0"];
  }
  auto m = manifest("generate", args, set, spec, a.seed, params, {{"points", a.out}, {"manifest", mpath.string()}});
  m["results"] = g.results;
  write_text(mpath, m.dump(2) + "\n");
  return kOk;
}

struct StudyArgs {
  GenerateArgs gen;
  std::vector<std::size_t> ns;
  double c = 1.0;
  std::optional<double> a;
  std::vector<double> probe;
  std::string phi = "potential";
  std::size_t grid = 2000;
  std::size_t mc_samples = 100000;
};

const char* const kStudyColumns[] = {"n", "energy", "energy_gap", "m_E", "deficit_at_probe", "sup_deficit",
                                     "lhs", "rhs", "r", "moment_distance", "I_value"};

int cmd_study(const StudyArgs& s, const std::vector<std::string>& args, std::ostream& out) {
  const auto set = load_set(s.gen.set_path);
  const KernelSpec spec(s.gen.alpha, static_cast<int>(set.dim()));
  if (!spec.is_newtonian()) throw UnsupportedOracleError("study needs the Newtonian kernel (--alpha 2)");
  // Only balls and spheres have closed-form equilibrium data; refuse before
  // building the (slow) discretized oracle for anything else.
  const bool analytic = std::holds_alternative<Ball>(set.shape()) || std::holds_alternative<SphereSurface>(set.shape());
  if (!analytic) {
    throw UnsupportedOracleError(std::string("no analytic equilibrium oracle for shape '") +
                                 std::string(set.shape_name()) + "'; study needs an exact W(E)");
  }
  const auto oracle = equilibrium_oracle(set, spec);
  if (s.ns.empty()) throw UsageError("--ns needs at least one n");
  for (auto n : s.ns) {
    if (n < 2) throw UsageError("every n in --ns must be >= 2");
  }
  const double a = s.a.value_or(1.0 / static_cast<double>(set.dim()));
  if (!(a > 0.0) || !(s.c > 0.0)) throw UsageError("--rc and --ra must be positive");
  const Point y = s.probe.empty() ? default_probe(set) : as_point(s.probe, set, "--probe");
  if (set.distance(y) <= kMembershipTolerance) throw UsageError("--probe must lie outside the set");

  TestFunction phi;
  if (s.phi == "potential") phi = phi_for_potential(set, y, spec);
  else if (s.phi == "hat") phi = radial_hat(set.project(y), 0.5 * set.enclosing_radius());
  else throw UsageError("unknown --phi '" + s.phi + "' (potential, hat)");

  // Leja points are nested, so one sequence serves every n.
  std::optional<PointConfig> leja;
  const std::size_t n_max = *std::max_element(s.ns.begin(), s.ns.end());
  if (s.gen.method == "leja") leja = generate_points(set, spec, "leja", n_max, s.gen.seed, s.gen).points;

  std::ostringstream csv;
  for (std::size_t i = 0; i < std::size(kStudyColumns); ++i) csv << (i ? "," : "") << kStudyColumns[i];
  csv << "\n";
  for (std::size_t n : s.ns) {
    const PointConfig pts = leja ? leja->prefix(n)
                                 : generate_points(set, spec, s.gen.method, n, substream_seed(s.gen.seed, s.gen.method, n), s.gen).points;
    const double r = s.c * std::pow(static_cast<double>(n), -a);
    const double energy = discrete_energy(pts, spec);
    const double deficit = oracle.potential(y) - discrete_potential(pts, spec, y);
    const double sup = sup_potential_deficit(oracle, pts, set, spec, s.grid, substream_seed(s.gen.seed, "deficit", n));
    BoundOptions bound;
    bound.mc_samples = s.mc_samples;
    bound.seed = substream_seed(s.gen.seed, "bound", n);
    const auto rep = discrepancy_bound(set, oracle, pts, phi, r, spec, bound);
    const double moments = moment_distance(pts, oracle, 2, s.mc_samples, substream_seed(s.gen.seed, "moments"));
    const double row[] = {energy, energy - oracle.robin_constant(), closeness_m_E(pts, set, oracle), deficit, sup,
                          rep.lhs, rep.rhs, r, moments, rep.I_value};
    csv << n;
    for (double v : row) csv << "," << number(v);
    csv << "\n";
    out << "n " << n << " energy " << number(energy) << " lhs " << number(rep.lhs) << " rhs " << number(rep.rhs) << "\n";
  }
  write_text(s.gen.out, csv.str());

  const fs::path mpath = manifest_path_for(s.gen.out, s.gen.manifest);
  json params = {{"method", s.gen.method}, {"ns", s.ns}, {"rc", s.c}, {"ra", a}, {"probe", y}, {"phi", s.phi},
                 {"grid", s.grid}, {"mc_samples", s.mc_samples}};
  if (s.gen.method == "fekete") params["restarts"] = s.gen.restarts;
  if (s.gen.method == "leja") params["candidates"] = s.gen.candidates;
  write_text(mpath, manifest("study", args, set, spec, s.gen.seed, params, {{"csv", s.gen.out}, {"manifest", mpath.string()}}).dump(2) + "\n");
  return kOk;
}

struct VerifyArgs {
  std::vector<std::string> only;
  std::uint64_t seed = 1;
  std::string ledger;
  std::string out;
};

int cmd_verify(const VerifyArgs& v, std::ostream& out, std::ostream& err) {
  acceptance::Options options;
  options.seed = v.seed;
  options.only = v.only;
  options.ledger = v.ledger;
  acceptance::Report report;
  try {
    report = acceptance::run(options, &err);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string verdict = report.verdict().dump(2) + "\n";
  if (v.out.empty()) out << verdict;
  else write_text(v.out, verdict);
  const auto failed = report.failed();
  if (failed.empty()) return kOk;
  err << "verification failed:";
  for (const auto& name : failed) err << " " << name;
  err << "\n";
  return kVerificationFailed;
}

struct PotentialArgs {
  std::string set_path;
  std::string points;
  std::vector<double> y;
  double alpha = 2.0;
};

int cmd_potential(const PotentialArgs& p, std::ostream& out) {
  const auto set = load_set(p.set_path);
  const KernelSpec spec(p.alpha, static_cast<int>(set.dim()));
  std::ifstream in(p.points);
  if (!in) throw ParseError("cannot read '" + p.points + "'");
  const auto pts = read_points_csv(in);
  if (pts.dim() != set.dim()) throw UsageError("points and set dimensions differ");
  const Point y = as_point(p.y, set, "--y");
  const auto oracle = equilibrium_oracle(set, spec);
  const double eq = oracle.potential(y);
  const double conf = discrete_potential(pts, spec, y);
  const json result = {{"y", y},
                       {"d_E", set.distance(y)},
                       {"equilibrium_potential", eq},
                       {"configuration_potential", conf},
                       {"deficit", eq - conf},
                       {"robin_constant", oracle.robin_constant()},
                       {"approximate", oracle.approximate()}};
  out << result.dump(2) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riesz and Newtonian energy points: generation, convergence studies, verification", "riesz"};
  app.require_subcommand(1);
  app.set_version_flag("--version", RIESZ_TOOL_VERSION);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Compute Fekete, Leja or random points on a set");
  auto add_generation_flags = [](CLI::App* cmd, GenerateArgs& g, const char* out_default) {
    cmd->add_option("--set", g.set_path, "Set definition file (key = value lines)")->required();
    cmd->add_option("--method", g.method, "fekete, leja or random")->capture_default_str();
    cmd->add_option("--seed", g.seed, "Run seed")->capture_default_str();
    g.out = out_default;
    cmd->add_option("--out", g.out, "Output CSV")->capture_default_str();
    cmd->add_option("--manifest", g.manifest, "Manifest JSON (default: <out>.manifest.json)");
    cmd->add_option("--alpha", g.alpha, "Riesz exponent alpha")->capture_default_str();
    cmd->add_option("--restarts", g.restarts, "Fekete random restarts")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--max-iters", g.max_iters, "Fekete iteration cap")->capture_default_str();
    cmd->add_option("--candidates", g.candidates, "Leja candidates per step")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--xi0", g.xi0, "First Leja point, comma separated")->delimiter(',');
  };
  add_generation_flags(generate, gen, "points.csv");
  generate->add_option("--n", gen.n, "Number of points")->required();

  StudyArgs study;
  auto* study_cmd = app.add_subcommand("study", "Convergence table over an n schedule");
  add_generation_flags(study_cmd, study.gen, "study.csv");
  study_cmd->add_option("--ns", study.ns, "n schedule, comma separated")->delimiter(',')->required();
  study_cmd->add_option("--rc", study.c, "Smoothing radius r_n = c n^-a: c")->capture_default_str();
  study_cmd->add_option("--ra", study.a, "Smoothing radius exponent a (default 1/d)");
  study_cmd->add_option("--probe", study.probe, "Exterior probe y, comma separated")->delimiter(',');
  study_cmd->add_option("--phi", study.phi, "Test function: potential or hat")->capture_default_str();
  study_cmd->add_option("--grid", study.grid, "Grid size for the sup deficit")->capture_default_str();
  study_cmd->add_option("--mc-samples", study.mc_samples, "Equilibrium samples for integrals and moments")->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance criteria");
  verify_cmd->add_option("--only", verify.only, "Criterion or group names, comma separated")->delimiter(',');
  verify_cmd->add_option("--seed", verify.seed, "Suite seed")->capture_default_str();
  verify_cmd->add_option("--ledger", verify.ledger, "Oracle ledger CSV (default: the committed ledger)");
  verify_cmd->add_option("--out", verify.out, "Verdict JSON path (default: standard output)");

  PotentialArgs pot;
  auto* potential = app.add_subcommand("potential", "Equilibrium minus configuration potential at one point");
  potential->add_option("--set", pot.set_path, "Set definition file")->required();
  potential->add_option("--points", pot.points, "Points CSV")->required();
  potential->add_option("--y", pot.y, "Query point, comma separated")->delimiter(',')->required();
  potential->add_option("--alpha", pot.alpha, "Riesz exponent alpha")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen, args, out);
    if (study_cmd->parsed()) return cmd_study(study, args, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
    if (potential->parsed()) return cmd_potential(pot, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InfeasibleInputError& e) {
    err << "infeasible input: " << e.what() << "\n";
    return kInfeasible;
  } catch (const UnsupportedOracleError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kParseError;
}

}  // namespace riesz::cli
