#include "groverian/grover.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "groverian/analytic.hpp"

namespace groverian::grover {

void GroverConfig::validate() const {
  if (n_qubits < 2) throw InvalidArgument("GroverConfig: n_qubits must be >= 2");
  if (n_qubits > 30) throw InvalidArgument("GroverConfig: n_qubits must be <= 30");
  if (marked_index >= (std::size_t{1} << n_qubits)) {
    throw InvalidArgument("GroverConfig: marked_index " + std::to_string(marked_index) +
                          " out of range for " + std::to_string(n_qubits) + " qubits");
  }
  if (iterations && *iterations < 0) throw InvalidArgument("GroverConfig: iterations must be >= 0");
  solver.validate();
}

int GroverConfig::resolved_iterations() const {
  return iterations ? *iterations : optimal_iterations(n_qubits);
}

PureState oracle_apply(const PureState& psi, std::size_t marked) {
  if (marked >= psi.dimension()) {
    throw InvalidArgument("oracle_apply: marked index " + std::to_string(marked) + " out of range");
  }
  std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
  amps[marked] = -amps[marked];
  return PureState(psi.n_qubits(), std::move(amps));
}

PureState diffusion_apply(const PureState& psi) {
  const auto a = psi.amplitudes();
  const Complex mean = std::accumulate(a.begin(), a.end(), Complex{}) / static_cast<double>(a.size());
  std::vector<Complex> amps(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) amps[x] = 2.0 * mean - a[x];
  return PureState(psi.n_qubits(), std::move(amps));
}

double rotation_angle(int n) {
  if (n < 1) throw InvalidArgument("rotation_angle: n must be >= 1");
  return std::asin(std::pow(2.0, -0.5 * n));
}

double closed_form_success(int n, int k) {
  const double s = std::sin((2.0 * k + 1.0) * rotation_angle(n));
  return s * s;
}

int optimal_iterations(int n) {
  if (n < 2) throw InvalidArgument("optimal_iterations: n must be >= 2, got " + std::to_string(n));
  const double theta = rotation_angle(n);
  const int centre = static_cast<int>(std::lround(std::numbers::pi / (4.0 * theta) - 0.5));
  int best = std::max(0, centre - 1);
  for (int k = best + 1; k <= centre + 1; ++k) {
    if (closed_form_success(n, k) > closed_form_success(n, best)) best = k;
  }
  return best;
}

GroverTrace run_trace(const GroverConfig& cfg) {
  cfg.validate();
  const int iterations = cfg.resolved_iterations();
  GroverTrace trace;
  trace.states.reserve(static_cast<std::size_t>(iterations) + 1);
  trace.rows.reserve(trace.states.capacity());

  PureState psi = make_uniform(cfg.n_qubits);
  for (int k = 0; k <= iterations; ++k) {
    if (k > 0) psi = diffusion_apply(oracle_apply(psi, cfg.marked_index));
    const double pmax = std::min(1.0, pmax_alternating(psi, cfg.solver).pmax);
    trace.rows.push_back({k, std::norm(psi[cfg.marked_index]), pmax,
                          analytic::groverian_from_pmax(pmax)});
    trace.states.push_back(psi);
  }
  return trace;
}

}  // namespace groverian::grover
