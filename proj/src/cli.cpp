#include "groverian/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "groverian/analytic.hpp"
#include "groverian/grover.hpp"
#include "groverian/io.hpp"
#include "groverian/refutation.hpp"
#include "groverian/solver.hpp"
#include "json.hpp"

namespace groverian::cli {

namespace {

using nlohmann::json;

struct GlobalFlags {
  int seeds = SolverConfig{}.n_starts;
  double tol = SolverConfig{}.tol;
  int max_sweeps = SolverConfig{}.max_sweeps;
  std::uint64_t rng_seed = SolverConfig{}.rng_seed;
  std::string restriction = "full";
  bool normalize = false;
  std::string format = "json";
  int threads = 1;

  SolverConfig solver() const {
    SolverConfig cfg;
    cfg.n_starts = seeds;
    cfg.tol = tol;
    cfg.max_sweeps = max_sweeps;
    cfg.rng_seed = rng_seed;
    cfg.restriction = restriction == "real" ? Restriction::kRealPlane : Restriction::kFullBloch;
    cfg.threads = threads;
    cfg.validate();
    return cfg;
  }
};

double r12(double v) { return io::round_sig12(v); }

json spinor_json(const Spinor& s) {
  return json::array({json::array({r12(s[0].real()), r12(s[0].imag())}),
                      json::array({r12(s[1].real()), r12(s[1].imag())})});
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

void emit_csv(std::ostream& out, const std::vector<std::string>& header,
              const std::vector<std::string>& row) {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
  };
  out << join(header) << '\n' << join(row) << '\n';
}

// ---- pmax ----------------------------------------------------------------

struct PmaxArgs {
  std::string file;
  std::string family;
};

int cmd_pmax(const PmaxArgs& a, const GlobalFlags& g, std::ostream& out) {
  const PureState psi = a.file.empty() ? io::make_family(io::parse_family(a.family))
                                       : io::read_state_file(a.file, g.normalize);
  const PmaxResult r = pmax_alternating(psi, g.solver());
  const double pmax = std::min(1.0, r.pmax);
  const double grov = analytic::groverian_from_pmax(pmax);
  if (g.format == "csv") {
    emit_csv(out, {"pmax", "groverian", "converged", "sweeps_used", "best_start"},
             {io::format_sig12(pmax), io::format_sig12(grov), r.converged ? "true" : "false",
              std::to_string(r.sweeps_used), std::to_string(r.best_start)});
    return kOk;
  }
  json optimizer = json::array();
  for (const auto& f : r.optimizer.factors()) optimizer.push_back(spinor_json(f.spinor()));
  emit(out, {{"n_qubits", psi.n_qubits()},
             {"pmax", r12(pmax)},
             {"groverian", r12(grov)},
             {"converged", r.converged},
             {"sweeps_used", r.sweeps_used},
             {"best_start", r.best_start},
             {"optimizer", optimizer}});
  return kOk;
}

// ---- analytic ------------------------------------------------------------

struct AnalyticArgs {
  std::string family;
  bool verify = false;
};

int cmd_analytic(const AnalyticArgs& a, const GlobalFlags& g, std::ostream& out) {
  const io::FamilySpec spec = io::parse_family(a.family);
  analytic::AnalyticResult res;
  io::FamilySpec state_spec = spec;
  if (spec.name == "gghz" || spec.name == "ghz") {
    double a_sq = 0.5;
    if (spec.name == "gghz") {
      if (spec.has("a2") == spec.has("a")) {
        throw InvalidArgument("family 'gghz': give exactly one of a= or a2=");
      }
      a_sq = spec.has("a2") ? spec.get_double("a2") : spec.get_double("a") * spec.get_double("a");
    }
    res = analytic::pmax_gghz(a_sq);
    if (!state_spec.has("n")) state_spec.params["n"] = "3";
  } else if (spec.name == "w") {
    res = analytic::pmax_w(spec.get_int("n"));
  } else if (spec.name == "dicke") {
    res = analytic::pmax_dicke(spec.get_int("n"), spec.get_int("k"));
  } else {
    throw InvalidArgument("no closed form for family '" + spec.name +
                          "' (supported: ghz, gghz, w, dicke)");
  }
  // validates parameter names and ranges even without --verify
  const PureState psi = io::make_family(state_spec);

  json doc{{"family_label", res.family_label},
           {"pmax", r12(res.pmax)},
           {"groverian", r12(res.groverian)},
           {"separable", res.separable}};
  std::vector<std::string> header{"family_label", "pmax", "groverian", "separable"};
  std::vector<std::string> row{res.family_label, io::format_sig12(res.pmax),
                               io::format_sig12(res.groverian), res.separable ? "true" : "false"};
  if (a.verify) {
    const double solver_pmax = std::min(1.0, pmax_alternating(psi, g.solver()).pmax);
    const bool ok = std::abs(solver_pmax - res.pmax) < 1e-7;
    doc["solver_pmax"] = r12(solver_pmax);
    doc["verified"] = ok;
    header.insert(header.end(), {"solver_pmax", "verified"});
    row.insert(row.end(), {io::format_sig12(solver_pmax), ok ? "true" : "false"});
  }
  if (g.format == "csv") {
    emit_csv(out, header, row);
  } else {
    emit(out, doc);
  }
  return kOk;
}

// ---- refute --------------------------------------------------------------

struct RefuteArgs {
  int grid = 181;
  double eps = 1e-8;
  int samples = 100000;
};

int cmd_refute(const RefuteArgs& a, const GlobalFlags& g, std::ostream& out) {
  if (g.format != "json") throw InvalidArgument("refute: only --format json is supported");
  namespace rf = refutation;
  const rf::Constraint5Report report = rf::constraint5_search(a.grid, a.eps);
  const rf::FlawedMaximum flawed = rf::flawed_max_ghz();
  const double true_max = std::min(1.0, pmax_alternating(make_ghz(3), g.solver()).pmax);
  const double deviation = rf::product_sum_identity_check(a.samples, g.rng_seed);

  json solutions = json::array();
  for (const auto& s : report.solutions) {
    solutions.push_back({{"theta", {r12(s.theta[0]), r12(s.theta[1]), r12(s.theta[2])}},
                         {"j", {r12(s.j.j0), r12(s.j.j1), r12(s.j.j2), r12(s.j.j3)}},
                         {"objective", r12(s.objective)}});
  }
  const auto& w = flawed.witness;
  emit(out, {{"solutions", solutions},
             {"flawed_max", r12(flawed.value)},
             {"true_max", r12(true_max)},
             {"gap", r12(flawed.value - true_max)},
             {"hyperplane_min_residual", r12(report.hyperplane_min_residual)},
             {"identity_deviation", r12(deviation)},
             {"grid_resolution", report.grid_resolution},
             {"grid_max_objective", r12(report.grid_max_objective)},
             {"candidates", report.candidates},
             {"witness",
              {{"angles", {r12(w.w), r12(w.x), r12(w.y), r12(w.z)}},
               {"hyperplane_residual", r12(flawed.feasibility.residual)},
               {"feasible", flawed.feasibility.angles.has_value()}}}});
  return kOk;
}

// ---- grover-trace --------------------------------------------------------

struct TraceArgs {
  int n = 3;
  std::int64_t marked = 0;
  int iterations = -1;
  std::string output;
};

int cmd_grover_trace(const TraceArgs& a, const GlobalFlags& g, std::ostream& out) {
  if (a.marked < 0) throw InvalidArgument("grover-trace: --marked must be >= 0");
  grover::GroverConfig cfg;
  cfg.n_qubits = a.n;
  cfg.marked_index = static_cast<std::size_t>(a.marked);
  if (a.iterations >= 0) cfg.iterations = a.iterations;
  cfg.solver = g.solver();
  cfg.validate();
  const grover::GroverTrace trace = grover::run_trace(cfg);

  if (!a.output.empty()) io::write_trace_csv_file(a.output, trace.rows);
  if (g.format == "csv") {
    if (a.output.empty()) io::write_trace_csv(out, trace.rows);
    return kOk;
  }

  json rows = json::array();
  double max_grov = 0.0;
  for (const auto& r : trace.rows) {
    max_grov = std::max(max_grov, r.groverian);
    rows.push_back({{"iteration", r.iteration},
                    {"success_probability", r12(r.success_probability)},
                    {"pmax", r12(r.pmax)},
                    {"groverian", r12(r.groverian)}});
  }
  const auto& last = trace.rows.back();
  json doc{{"n_qubits", cfg.n_qubits},
           {"marked_index", cfg.marked_index},
           {"iterations", last.iteration},
           {"final_success_probability", r12(last.success_probability)},
           {"final_pmax", r12(last.pmax)},
           {"final_groverian", r12(last.groverian)},
           {"max_groverian", r12(max_grov)},
           {"rows", rows}};
  if (!a.output.empty()) doc["csv"] = a.output;
  emit(out, doc);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groverian entanglement toolkit"};
  app.name("groverian");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--seeds", g.seeds, "Number of solver starts")->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tol, "Per-sweep convergence threshold")->check(CLI::PositiveNumber);
  app.add_option("--max-sweeps", g.max_sweeps, "Sweep limit per start")->check(CLI::PositiveNumber);
  app.add_option("--rng-seed", g.rng_seed, "Seed for random starts and sampling");
  app.add_option("--restriction", g.restriction, "Product-state family")
      ->check(CLI::IsMember({"full", "real"}));
  app.add_flag("--normalize", g.normalize, "Rescale input states instead of rejecting them");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", g.threads, "Worker threads for solver starts")
      ->check(CLI::PositiveNumber);

  PmaxArgs pmax_args;
  auto* pmax = app.add_subcommand("pmax", "Numerical P_max and Groverian measure of a state");
  auto* file_opt = pmax->add_option("--file", pmax_args.file, "State JSON file");
  auto* fam_opt = pmax->add_option("--family", pmax_args.family, "Named state, e.g. ghz:3");
  file_opt->excludes(fam_opt);
  pmax->require_option(1);

  AnalyticArgs analytic_args;
  auto* analytic_cmd = app.add_subcommand("analytic", "Closed-form P_max for symmetric families");
  analytic_cmd->add_option("--family", analytic_args.family, "gghz:a2=..|w:n|dicke:n,k=..")
      ->required();
  analytic_cmd->add_flag("--verify", analytic_args.verify, "Cross-check against the solver");

  RefuteArgs refute_args;
  auto* refute = app.add_subcommand("refute", "Reproduce the GHZ four-angle maximization flaw");
  refute->add_option("--grid", refute_args.grid, "Grid points per angle")->check(CLI::Range(9, 2001));
  refute->add_option("--eps", refute_args.eps, "Threshold on max|J_i|")->check(CLI::PositiveNumber);
  refute->add_option("--samples", refute_args.samples, "Identity check samples")
      ->check(CLI::PositiveNumber);

  TraceArgs trace_args;
  auto* trace = app.add_subcommand("grover-trace", "Entanglement along Grover iterations");
  trace->add_option("--n", trace_args.n, "Qubits")->required();
  trace->add_option("--marked", trace_args.marked, "Marked basis index")->required();
  trace->add_option("--iterations", trace_args.iterations, "Iterations (default: optimal)")
      ->check(CLI::NonNegativeNumber);
  trace->add_option("--output", trace_args.output, "CSV output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (pmax->parsed()) return cmd_pmax(pmax_args, g, out);
    if (analytic_cmd->parsed()) return cmd_analytic(analytic_args, g, out);
    if (refute->parsed()) return cmd_refute(refute_args, g, out);
    if (trace->parsed()) return cmd_grover_trace(trace_args, g, out);
  } catch (const NormalizationError& e) {
    err << "error: " << e.what() << '\n';
    return kNormalizationError;
  } catch (const io::IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace groverian::cli
