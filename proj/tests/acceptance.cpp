// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "groverian/analytic.hpp"
#include "groverian/cli.hpp"
#include "groverian/grover.hpp"
#include "groverian/refutation.hpp"
#include "groverian/solver.hpp"
#include "json.hpp"
#include "test_util.hpp"

namespace {

using namespace groverian;
using std::numbers::pi;

struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // <= 0: no runtime bound
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome ghz3() {
  Outcome o;
  SolverConfig cfg;
  cfg.n_starts = 32;
  const double p = pmax_alternating(make_ghz(3), cfg).pmax;
  const double g = analytic::groverian_from_pmax(std::min(1.0, p));
  o.check(std::abs(p - 0.5) <= 1e-9, "pmax " + fmt(p) + " != 0.5");
  o.check(std::abs(g - 0.70710678) <= 1e-6, "groverian " + fmt(g));
  return o;
}

Outcome refutation_report() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run({"refute", "--grid", "181"}, out, err);
  o.check(code == 0, "refute exit " + std::to_string(code) + ": " + err.str());
  if (code != 0) return o;
  const auto j = nlohmann::json::parse(out.str());
  const double flawed = j["flawed_max"].get<double>();
  const double truth = j["true_max"].get<double>();
  o.check(flawed == 1.0, "flawed_max " + fmt(flawed) + " != 1.0");
  o.check(std::abs(truth - 0.5) <= 1e-9, "true_max " + fmt(truth));
  o.check(std::abs((flawed - truth) - 0.5) <= 1e-9, "gap " + fmt(flawed - truth));
  o.check(std::abs(j["gap"].get<double>() - 0.5) <= 1e-9, "reported gap");
  return o;
}

Outcome gghz_sweep() {
  Outcome o;
  for (int n : {3, 5}) {
    for (int i = 1; i <= 9; ++i) {
      const double a_sq = i / 10.0;
      const double p = pmax_alternating(make_gghz(n, std::sqrt(a_sq))).pmax;
      const double expected = std::max(a_sq, 1.0 - a_sq);
      o.check(std::abs(p - expected) <= 1e-8,
              "n=" + std::to_string(n) + " a2=" + fmt(a_sq) + " pmax " + fmt(p));
    }
  }
  return o;
}

Outcome w_values() {
  Outcome o;
  const double w3 = pmax_alternating(make_w(3)).pmax;
  const double w4 = pmax_alternating(make_w(4)).pmax;
  const double w5 = pmax_alternating(make_w(5)).pmax;
  o.check(std::abs(w3 - 4.0 / 9.0) <= 1e-8, "w3 " + fmt(w3));
  o.check(std::abs(w4 - 27.0 / 64.0) <= 1e-8, "w4 " + fmt(w4));
  o.check(std::abs(w5 - 0.4096) <= 1e-8, "w5 " + fmt(w5));
  o.check(std::abs(w4 - 0.75 * 0.75) > 0.14, "w4 too close to (3/4)^2");
  return o;
}

Outcome product_sum_identity() {
  Outcome o;
  const double dev = refutation::product_sum_identity_check(100000, 2024);
  o.check(dev < 1e-12, "max deviation " + fmt(dev));
  return o;
}

Outcome constraint_analysis() {
  namespace rf = refutation;
  Outcome o;
  const rf::Constraint5Report r = rf::constraint5_search(181, 1e-8);
  const auto hit = std::find_if(r.solutions.begin(), r.solutions.end(), [](const auto& s) {
    return std::all_of(s.theta.begin(), s.theta.end(),
                       [](double t) { return std::abs(t - pi / 4) < 1e-12; });
  });
  o.check(hit != r.solutions.end(), "(pi/4, pi/4, pi/4) not found");
  if (hit != r.solutions.end()) {
    o.check(hit->j.max_abs() < 1e-8, "max|J| " + fmt(hit->j.max_abs()));
    o.check(std::abs(hit->objective - 0.25) < 1e-12, "objective " + fmt(hit->objective));
  }
  for (const auto& s : r.solutions) {
    o.check(s.objective <= 0.5 - 1e-6, "J=0 solution with objective " + fmt(s.objective));
  }
  o.check(std::abs(r.hyperplane_min_residual - pi) <= 1e-12,
          "hyperplane residual " + fmt(r.hyperplane_min_residual));
  return o;
}

Outcome constraint_separation() {
  namespace rf = refutation;
  Outcome o;
  const auto t = rf::transform_to_wxyz(RealAngles({0, 0, 0}));
  const double r4 = rf::constraint4_residual(t);
  const double min_j = rf::j_vector(t).min_abs();
  o.check(r4 == 0.0, "constraint (J0=-J1=-J2=J3) residual " + fmt(r4));
  o.check(min_j == 1.0, "min|J| " + fmt(min_j));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(8);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const PureState psi = testing::random_state(2, rng);
    worst = std::max(worst, std::abs(pmax_alternating(psi).pmax - schmidt_pmax_2qubit(psi)));
  }
  o.check(worst < 1e-7, "2-qubit Schmidt mismatch " + fmt(worst));
  double shortfall = 0.0;
  for (int i = 0; i < 50; ++i) {
    const PureState psi = testing::random_real_state(3, rng);
    shortfall = std::max(shortfall, pmax_gridsearch(psi, 61) - pmax_alternating(psi).pmax);
  }
  o.check(shortfall <= 1e-6, "grid beats solver by " + fmt(shortfall));
  return o;
}

Outcome property_suite() {
  Outcome o;
  std::mt19937_64 rng(9);
  const SolverConfig cfg;

  bool monotone = true;
  for (int i = 0; i < 40; ++i) {
    const PureState psi = testing::random_state(2 + i % 5, rng);
    for (int k = 0; k < 4; ++k) {
      const auto a = ascend_from(psi, start_factors(psi, cfg, k), cfg);
      for (std::size_t s = 1; s < a.history.size(); ++s) monotone &= a.history[s] >= a.history[s - 1];
    }
  }
  o.check(monotone, "ascent not monotone");

  double lu = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + i % 3;
    const PureState psi = testing::random_state(n, rng);
    std::vector<testing::Unitary2> us;
    for (int q = 0; q < n; ++q) us.push_back(testing::random_unitary(rng));
    lu = std::max(lu, std::abs(pmax_alternating(psi).pmax -
                               pmax_alternating(testing::apply_local(psi, us)).pmax));
  }
  o.check(lu < 1e-7, "local-unitary change " + fmt(lu));

  double perm_dev = 0.0;
  for (int i = 0; i < 30; ++i) {
    const int n = 3 + i % 3;
    const PureState psi = testing::random_state(n, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    perm_dev = std::max(perm_dev, std::abs(pmax_alternating(psi).pmax -
                                           pmax_alternating(psi.permuted(perm)).pmax));
  }
  o.check(perm_dev < 1e-9, "permutation change " + fmt(perm_dev));

  double grad_err = 0.0;
  std::uniform_real_distribution<double> u(-pi / 2, pi / 2);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 4;
    const PureState psi = testing::random_real_state(n, rng);
    std::vector<double> th(static_cast<std::size_t>(n));
    for (auto& t : th) t = u(rng);
    const auto g = gradient_real(psi, RealAngles(th));
    const double h = 1e-6;
    for (std::size_t k = 0; k < th.size(); ++k) {
      std::vector<Spinor> fp, fm;
      for (std::size_t m = 0; m < th.size(); ++m) {
        const double dp = m == k ? h : 0.0;
        fp.push_back({std::cos(th[m] + dp), std::sin(th[m] + dp)});
        fm.push_back({std::cos(th[m] - dp), std::sin(th[m] - dp)});
      }
      const double fd = (std::norm(overlap(psi, fp)) - std::norm(overlap(psi, fm))) / (2 * h);
      grad_err = std::max(grad_err, std::abs(g[k] - fd));
    }
  }
  o.check(grad_err < 1e-6, "gradient error " + fmt(grad_err));

  double bound_gap = 0.0;
  for (int i = 0; i < 50; ++i) {
    const PureState psi = testing::random_state(1 + i % 6, rng);
    SolverConfig one;
    one.n_starts = 1;
    bound_gap = std::max(bound_gap, std::norm(psi[psi.dominant_basis_index()]) -
                                        pmax_alternating(psi, one).pmax);
  }
  o.check(bound_gap <= 1e-9, "pmax below max|a_x|^2 by " + fmt(bound_gap));
  return o;
}

Outcome grover_traces() {
  Outcome o;
  auto check_rows = [&](const grover::GroverTrace& t, std::size_t marked) {
    for (std::size_t k = 0; k < t.states.size(); ++k) {
      const PureState& psi = t.states[k];
      o.check(psi.max_imaginary() < 1e-12, "row " + std::to_string(k) + " not real");
      const Complex other = psi[marked == 0 ? 1 : 0];
      for (std::size_t x = 0; x < psi.dimension(); ++x) {
        if (x != marked && std::abs(psi[x] - other) >= 1e-12) {
          o.check(false, "row " + std::to_string(k) + " breaks two-value structure");
          break;
        }
      }
    }
    o.check(t.rows.front().groverian < 1e-6, "row-0 groverian " + fmt(t.rows.front().groverian));
  };

  grover::GroverConfig three;
  three.n_qubits = 3;
  three.marked_index = 5;
  three.iterations = 2;
  const auto t3 = grover::run_trace(three);
  const double s3 = t3.rows.back().success_probability;
  o.check(std::abs(s3 - 121.0 / 128.0) <= 1e-12, "n=3 success " + fmt(s3));
  check_rows(t3, 5);

  grover::GroverConfig five;
  five.n_qubits = 5;
  five.marked_index = 7;
  five.iterations = 4;
  const auto t5 = grover::run_trace(five);
  const double s5 = t5.rows.back().success_probability;
  const double closed = std::pow(std::sin(9.0 * std::asin(1.0 / std::sqrt(32.0))), 2);
  o.check(std::abs(s5 - closed) <= 1e-12, "n=5 success " + fmt(s5) + " vs " + fmt(closed));
  o.check(s5 > 0.999, "n=5 success below 0.999");
  check_rows(t5, 7);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "GHZ3 pmax = 1/2, groverian = 0.70710678", 0.1, ghz3},
      {2, "refute: flawed_max 1.0, true_max 0.5, gap 0.5", 5.0, refutation_report},
      {3, "GGHZ sweep n in {3,5}: pmax = max(a2, 1-a2)", 5.0, gghz_sweep},
      {4, "W states: 4/9, 27/64, 0.4096; |W4 - (3/4)^2| > 0.14", 2.0, w_values},
      {5, "product-to-sum identity over 1e5 triples", 1.0, product_sum_identity},
      {6, "J=0 search: (pi/4)^3 at 0.25, none above 1/2, residual pi", 5.0, constraint_analysis},
      {7, "constraint separation at theta = 0", 0.0, constraint_separation},
      {8, "oracle equivalence: Schmidt (n=2), grid (n=3 real)", 20.0, oracle_equivalence},
      {9, "property suite", 0.0, property_suite},
      {10, "Grover traces n=3, n=5", 10.0, grover_traces},
  };

  int failed = 0;
  double total = 0.0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += secs;
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.check(false, "runtime " + fmt(secs) + " s exceeds " + fmt(c.time_limit_s) + " s");
    }
    failed += !o.ok;
    std::printf("[%s] %2d  %-62s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  if (total >= 60.0) {
    std::printf("[FAIL] suite runtime %.1f s exceeds 60 s\n", total);
    ++failed;
  }
  std::printf("%zu criteria, %d failed, %.2f s\n", criteria.size(), failed, total);
  return failed == 0 ? 0 : 1;
}
