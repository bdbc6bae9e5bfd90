#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "groverian/solver.hpp"
#include "groverian/state.hpp"

namespace groverian::grover {

struct GroverConfig {
  int n_qubits = 3;
  std::size_t marked_index = 0;
  // defaults to optimal_iterations(n_qubits)
  std::optional<int> iterations;
  SolverConfig solver;

  void validate() const;
  int resolved_iterations() const;
};

struct TraceRow {
  int iteration = 0;
  double success_probability = 0.0;
  double pmax = 0.0;
  double groverian = 0.0;
};

struct GroverTrace {
  std::vector<TraceRow> rows;
  // states[k] is the register after k iterations; states[0] is |+>^n
  std::vector<PureState> states;
};

/// Phase oracle: negates the amplitude of `marked`.
PureState oracle_apply(const PureState& psi, std::size_t marked);

/// Inversion about the mean, a_x -> 2 mean(a) - a_x.
PureState diffusion_apply(const PureState& psi);

/// Rotation angle theta = asin(2^{-n/2}) of one Grover iteration.
double rotation_angle(int n);

/// sin^2((2k + 1) theta).
double closed_form_success(int n, int k);

/// Integer k maximizing closed_form_success, searched among the neighbours of
/// round(pi / (4 theta) - 1/2); lowest k wins ties.
int optimal_iterations(int n);

/// Row 0 is the uniform superposition; row k follows k oracle+diffusion steps.
GroverTrace run_trace(const GroverConfig& cfg);

}  // namespace groverian::grover
