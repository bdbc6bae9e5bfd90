#include "groverian/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "groverian/analytic.hpp"

namespace groverian {

namespace {

// below this the environment carries no direction; keep the old factor
constexpr double kDegenerateEnvironment = 1e-14;

struct FactorUpdate {
  Spinor factor;
  double value;  // squared overlap after the update
};

FactorUpdate best_full_factor(const Spinor& v) {
  const double norm2 = std::norm(v[0]) + std::norm(v[1]);
  const double norm = std::sqrt(norm2);
  if (norm < kDegenerateEnvironment) return {{}, -1.0};
  return {{v[0] / norm, v[1] / norm}, norm2};
}

// max over real unit e of |e.v|^2 = e^T (a a^T + b b^T) e with v = a + ib
FactorUpdate best_real_factor(const Spinor& v) {
  const double a0 = v[0].real(), a1 = v[1].real();
  const double b0 = v[0].imag(), b1 = v[1].imag();
  const double p = a0 * a0 + b0 * b0;
  const double r = a1 * a1 + b1 * b1;
  const double q = a0 * a1 + b0 * b1;
  const double half_diff = 0.5 * (p - r);
  const double lambda = 0.5 * (p + r) + std::hypot(half_diff, q);
  if (std::sqrt(lambda) < kDegenerateEnvironment) return {{}, -1.0};
  const double theta = 0.5 * std::atan2(2.0 * q, p - r);
  return {{std::cos(theta), std::sin(theta)}, lambda};
}

std::mt19937_64 start_rng(std::uint64_t seed, int k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k)};
  return std::mt19937_64(seq);
}

}  // namespace

void SolverConfig::validate() const {
  if (n_starts < 1) throw InvalidArgument("SolverConfig: n_starts must be >= 1");
  if (max_sweeps < 1) throw InvalidArgument("SolverConfig: max_sweeps must be >= 1");
  if (!(tol > 0.0)) throw InvalidArgument("SolverConfig: tol must be > 0");
  if (threads < 1) throw InvalidArgument("SolverConfig: threads must be >= 1");
}

std::vector<Spinor> start_factors(const PureState& psi, const SolverConfig& cfg, int k) {
  const int n = psi.n_qubits();
  if (k == 0) return ProductState::basis(n, psi.dominant_basis_index()).spinors();

  auto rng = start_rng(cfg.rng_seed, k);
  std::vector<Spinor> f(static_cast<std::size_t>(n));
  if (cfg.restriction == Restriction::kRealPlane) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi / 2, std::numbers::pi / 2);
    for (auto& s : f) {
      const double t = angle(rng);
      s = {std::cos(t), std::sin(t)};
    }
  } else {
    // normalized complex Gaussian pair is Haar distributed on the Bloch sphere
    std::normal_distribution<double> gauss;
    for (auto& s : f) {
      double norm2 = 0.0;
      while (norm2 < 1e-24) {
        for (auto& c : s) c = {gauss(rng), gauss(rng)};
        norm2 = std::norm(s[0]) + std::norm(s[1]);
      }
      const double norm = std::sqrt(norm2);
      for (auto& c : s) c /= norm;
    }
  }
  return f;
}

AscentResult ascend_from(const PureState& psi, std::vector<Spinor> start, const SolverConfig& cfg) {
  cfg.validate();
  const int n = psi.n_qubits();
  if (static_cast<int>(start.size()) != n) {
    throw InvalidArgument("ascend_from: start has wrong number of factors");
  }
  AscentResult out;
  out.factors = std::move(start);
  double value = std::norm(overlap(psi, out.factors));
  out.history.push_back(value);

  for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
    const double before = value;
    for (int k = 0; k < n; ++k) {
      const Spinor env = environment_vector(psi, out.factors, k);
      const FactorUpdate u = cfg.restriction == Restriction::kRealPlane ? best_real_factor(env)
                                                                        : best_full_factor(env);
      // each update is the exact optimum for factor k; the guard only
      // absorbs rounding so the recorded sequence never decreases
      if (u.value >= value) {
        out.factors[static_cast<std::size_t>(k)] = u.factor;
        value = u.value;
      }
    }
    out.history.push_back(value);
    out.sweeps_used = sweep + 1;
    if (value - before < cfg.tol) {
      out.converged = true;
      break;
    }
  }
  out.pmax = value;
  return out;
}

PmaxResult pmax_alternating(const PureState& psi, const SolverConfig& cfg) {
  cfg.validate();
  if (std::abs(psi.squared_norm() - 1.0) > kConstructionNormTolerance) {
    throw NormalizationError("pmax_alternating: input state is not normalized");
  }

  const auto n_starts = static_cast<std::size_t>(cfg.n_starts);
  std::vector<AscentResult> results(n_starts);
  auto run = [&](std::size_t k) {
    results[k] = ascend_from(psi, start_factors(psi, cfg, static_cast<int>(k)), cfg);
  };

  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(cfg.threads), n_starts);
  if (workers <= 1) {
    for (std::size_t k = 0; k < n_starts; ++k) run(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < n_starts; k = next++) run(k);
      });
    }
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < n_starts; ++k) {
    if (results[k].pmax > results[best].pmax) best = k;
  }
  const AscentResult& r = results[best];
  std::vector<SingleQubitState> factors;
  factors.reserve(r.factors.size());
  for (const auto& s : r.factors) factors.push_back(SingleQubitState::normalized(s[0], s[1]));
  return PmaxResult{r.pmax, ProductState(std::move(factors)), r.sweeps_used, r.converged,
                    static_cast<int>(best)};
}

double groverian(const PureState& psi, const SolverConfig& cfg) {
  return analytic::groverian_from_pmax(std::min(1.0, pmax_alternating(psi, cfg).pmax));
}

namespace {

void require_real(const PureState& psi, const char* what) {
  if (!psi.is_real(1e-12)) {
    throw InvalidArgument(std::string(what) + ": state has complex amplitudes");
  }
}

void require_angles(const PureState& psi, const RealAngles& angles, const char* what) {
  if (angles.size() != psi.n_qubits()) {
    throw InvalidArgument(std::string(what) + ": expected " + std::to_string(psi.n_qubits()) +
                          " angles, got " + std::to_string(angles.size()));
  }
}

std::vector<Spinor> real_spinors(const RealAngles& angles) {
  std::vector<Spinor> f;
  f.reserve(static_cast<std::size_t>(angles.size()));
  for (double t : angles.thetas()) f.push_back({std::cos(t), std::sin(t)});
  return f;
}

}  // namespace

double objective_real(const PureState& psi, const RealAngles& angles) {
  require_real(psi, "objective_real");
  require_angles(psi, angles, "objective_real");
  return std::norm(overlap(psi, real_spinors(angles)));
}

std::vector<double> gradient_real(const PureState& psi, const RealAngles& angles) {
  require_real(psi, "gradient_real");
  require_angles(psi, angles, "gradient_real");
  const auto f = real_spinors(angles);
  const double s = overlap(psi, f).real();
  std::vector<double> grad(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Spinor v = environment_vector(psi, f, static_cast<int>(i));
    const double t = angles[i];
    // d/dtheta of (cos t, sin t) is (-sin t, cos t)
    const double ds = -std::sin(t) * v[0].real() + std::cos(t) * v[1].real();
    grad[i] = 2.0 * s * ds;
  }
  return grad;
}

double pmax_gridsearch(const PureState& psi, int resolution) {
  require_real(psi, "pmax_gridsearch");
  if (resolution < 3) throw InvalidArgument("pmax_gridsearch: resolution must be >= 3");
  const int n = psi.n_qubits();
  if (std::pow(static_cast<double>(resolution), n) > kGridBudget) {
    throw InvalidArgument("pmax_gridsearch: resolution^n exceeds the 1e8 point budget");
  }

  std::vector<double> cosines(static_cast<std::size_t>(resolution));
  std::vector<double> sines(cosines.size());
  for (int i = 0; i < resolution; ++i) {
    // written so the middle point of an odd grid is exactly zero
    const double t = std::numbers::pi * (static_cast<double>(i) / (resolution - 1) - 0.5);
    cosines[static_cast<std::size_t>(i)] = std::cos(t);
    sines[static_cast<std::size_t>(i)] = std::sin(t);
  }

  // levels[q] holds psi contracted with the angles chosen for qubits < q
  std::vector<std::vector<double>> levels(static_cast<std::size_t>(n) + 1);
  levels[0].reserve(psi.dimension());
  for (const auto& a : psi.amplitudes()) levels[0].push_back(a.real());
  for (int q = 1; q <= n; ++q) levels[static_cast<std::size_t>(q)].resize(psi.dimension() >> q);

  double best = 0.0;
  auto descend = [&](auto&& self, int q) -> void {
    if (q == n) {
      const double s = levels[static_cast<std::size_t>(n)][0];
      best = std::max(best, s * s);
      return;
    }
    const auto& in = levels[static_cast<std::size_t>(q)];
    auto& out = levels[static_cast<std::size_t>(q) + 1];
    const std::size_t half = out.size();
    for (int i = 0; i < resolution; ++i) {
      const double c = cosines[static_cast<std::size_t>(i)];
      const double s = sines[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < half; ++j) out[j] = c * in[j] + s * in[j + half];
      self(self, q + 1);
    }
  };
  descend(descend, 0);
  return best;
}

}  // namespace groverian
