#pragma once

#include <cstdint>
#include <vector>

#include "groverian/state.hpp"

namespace groverian {

enum class Restriction {
  kFullBloch,  // arbitrary complex single-qubit factors
  kRealPlane,  // factors cos(t)|0> + sin(t)|1>
};

struct SolverConfig {
  int n_starts = 32;
  int max_sweeps = 500;
  // absolute change of the squared overlap per sweep
  double tol = 1e-12;
  std::uint64_t rng_seed = 0x5eed'0f'9e0f'a11eULL;
  Restriction restriction = Restriction::kFullBloch;
  // worker threads for independent starts; results do not depend on it
  int threads = 1;

  void validate() const;
};

/// Outcome of a single ascent from one starting product state.
struct AscentResult {
  double pmax = 0.0;
  std::vector<Spinor> factors;
  int sweeps_used = 0;
  bool converged = false;
  // squared overlap at the start (entry 0) and after every full sweep
  std::vector<double> history;
};

struct PmaxResult {
  double pmax = 0.0;
  ProductState optimizer;
  int sweeps_used = 0;
  bool converged = false;
  int best_start = 0;
};

/// Runs cyclic exact single-factor updates from `start` until the per-sweep
/// gain drops below cfg.tol or cfg.max_sweeps is reached.
AscentResult ascend_from(const PureState& psi, std::vector<Spinor> start, const SolverConfig& cfg);

/// Start k of the multi-start schedule. Start 0 is the dominant computational
/// basis state; later starts are random and depend only on (rng_seed, k).
std::vector<Spinor> start_factors(const PureState& psi, const SolverConfig& cfg, int k);

/// Multi-start maximization of |<phi_1...phi_n|psi>|^2 over product states.
PmaxResult pmax_alternating(const PureState& psi, const SolverConfig& cfg = {});

/// sqrt(1 - P_max) using pmax_alternating.
double groverian(const PureState& psi, const SolverConfig& cfg = {});

/// (sum_x a_x prod_i c_i(x_i))^2 with c_i(0) = cos(theta_i), c_i(1) = sin(theta_i).
/// Requires real amplitudes.
double objective_real(const PureState& psi, const RealAngles& angles);

/// Analytic partial derivatives of objective_real.
std::vector<double> gradient_real(const PureState& psi, const RealAngles& angles);

/// Maximum of objective_real over the uniform grid of `resolution` points per
/// angle spanning [-pi/2, pi/2]. Lower bound on P_max for real states.
double pmax_gridsearch(const PureState& psi, int resolution);

inline constexpr double kGridBudget = 1e8;

}  // namespace groverian
