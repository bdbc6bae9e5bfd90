#include "groverian/refutation.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

namespace groverian::refutation {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;
constexpr double kQuarterPi = kPi / 4;

JVector j_from_phases(std::complex<double> ew, std::complex<double> ex, std::complex<double> ey,
                      std::complex<double> ez) {
  return {-ew.imag() - ew.real(), -ex.imag() + ex.real(), -ey.imag() + ey.real(),
          -ez.imag() - ez.real()};
}

JVector j_of_theta(const Eigen::Vector3d& th) {
  return j_vector(TransformedAngles{th(0) + th(1) + th(2), th(0) + th(1) - th(2),
                                    th(0) - th(1) + th(2), th(0) - th(1) - th(2)});
}

// Gauss-Newton on the overdetermined system J(transform(theta)) = 0.
// Converges quadratically onto isolated zero-residual solutions.
Eigen::Vector3d refine(Eigen::Vector3d th) {
  Eigen::Matrix<double, 4, 3> dt_dtheta;
  dt_dtheta << 1, 1, 1, 1, 1, -1, 1, -1, 1, 1, -1, -1;
  for (int it = 0; it < 50; ++it) {
    const TransformedAngles t{th(0) + th(1) + th(2), th(0) + th(1) - th(2),
                              th(0) - th(1) + th(2), th(0) - th(1) - th(2)};
    const JVector j = j_vector(t);
    if (j.max_abs() < 1e-15) break;
    const Eigen::Vector4d r(j.j0, j.j1, j.j2, j.j3);
    // dJ_i/dt_i for each J_i = -+sin - +cos
    const Eigen::Vector4d d(-std::cos(t.w) + std::sin(t.w), -std::cos(t.x) - std::sin(t.x),
                            -std::cos(t.y) - std::sin(t.y), -std::cos(t.z) + std::sin(t.z));
    const Eigen::Matrix<double, 4, 3> jac = d.asDiagonal() * dt_dtheta;
    const Eigen::Vector3d step = jac.colPivHouseholderQr().solve(-r);
    if (!step.allFinite()) break;
    th += step;
    if (step.lpNorm<Eigen::Infinity>() < 1e-17) break;
  }
  return th;
}

}  // namespace

double JVector::max_abs() const {
  return std::max({std::abs(j0), std::abs(j1), std::abs(j2), std::abs(j3)});
}

double JVector::min_abs() const {
  return std::min({std::abs(j0), std::abs(j1), std::abs(j2), std::abs(j3)});
}

double canonical_angle(double t) {
  double r = std::remainder(t, 2 * kPi);
  if (r <= -kPi) r += 2 * kPi;
  return r;
}

TransformedAngles transform_to_wxyz(const RealAngles& angles) {
  if (angles.size() != 3) {
    throw InvalidArgument("transform_to_wxyz: expected 3 angles, got " +
                          std::to_string(angles.size()));
  }
  const double a = angles[0], b = angles[1], c = angles[2];
  return {a + b + c, a + b - c, a - b + c, a - b - c};
}

double hyperplane_residual(const TransformedAngles& t) { return t.w - t.x - t.y + t.z; }

InverseResult inverse_transform(const TransformedAngles& t) {
  InverseResult out;
  out.residual = hyperplane_residual(t);
  if (std::abs(out.residual) >= kHyperplaneTolerance) return out;
  const double t1 = (t.w + t.z) / 2, t2 = (t.w - t.y) / 2, t3 = (t.w - t.x) / 2;
  try {
    out.angles = RealAngles({t1, t2, t3});
  } catch (const InvalidArgument&) {
    // on the hyperplane but outside the real-plane box
  }
  return out;
}

double ghz_objective_3param(double t1, double t2, double t3) {
  const double s = std::cos(t1) * std::cos(t2) * std::cos(t3) +
                   std::sin(t1) * std::sin(t2) * std::sin(t3);
  return 0.5 * s * s;
}

double ghz_objective_3param(const RealAngles& angles) {
  if (angles.size() != 3) {
    throw InvalidArgument("ghz_objective_3param: expected 3 angles, got " +
                          std::to_string(angles.size()));
  }
  return ghz_objective_3param(angles[0], angles[1], angles[2]);
}

double ghz_objective_4param(const TransformedAngles& t) {
  const double s = (std::cos(t.w) - std::sin(t.w)) + (std::cos(t.x) + std::sin(t.x)) +
                   (std::cos(t.y) + std::sin(t.y)) + (std::cos(t.z) - std::sin(t.z));
  return s * s / 32.0;
}

JVector j_vector(const TransformedAngles& t) {
  return {-std::sin(t.w) - std::cos(t.w), -std::sin(t.x) + std::cos(t.x),
          -std::sin(t.y) + std::cos(t.y), -std::sin(t.z) - std::cos(t.z)};
}

double constraint4_residual(const TransformedAngles& t) {
  const JVector j = j_vector(t);
  return std::max({std::abs(j.j0 + j.j1), std::abs(j.j0 + j.j2), std::abs(j.j0 - j.j3)});
}

std::array<double, 3> constraint4_summed(const TransformedAngles& t) {
  const JVector j = j_vector(t);
  return {j.j0 + j.j1 + j.j2 + j.j3, j.j0 + j.j1 - j.j2 - j.j3, j.j0 - j.j1 + j.j2 - j.j3};
}

double termwise_max_hyperplane_min_residual() {
  // argmax of each bracket term: cos - sin peaks at -pi/4, cos + sin at pi/4
  const std::array<double, 4> base{-kQuarterPi, kQuarterPi, kQuarterPi, -kQuarterPi};
  std::array<std::vector<double>, 4> reps;
  for (std::size_t i = 0; i < 4; ++i) {
    for (int k = -2; k <= 2; ++k) {
      const double v = base[i] + 2 * kPi * k;
      if (v >= -kPi && v <= kPi) reps[i].push_back(v);
    }
  }
  double best = std::numeric_limits<double>::infinity();
  for (double w : reps[0])
    for (double x : reps[1])
      for (double y : reps[2])
        for (double z : reps[3]) best = std::min(best, std::abs(hyperplane_residual({w, x, y, z})));
  return best;
}

Constraint5Report constraint5_search(int grid_resolution, double eps) {
  if (grid_resolution < 9) throw InvalidArgument("constraint5_search: resolution must be >= 9");
  if (!(eps > 0.0)) throw InvalidArgument("constraint5_search: eps must be > 0");

  Constraint5Report report;
  report.grid_resolution = grid_resolution;
  report.eps = eps;

  const auto res = static_cast<std::size_t>(grid_resolution);
  const double spacing = kPi / (grid_resolution - 1);
  std::vector<double> grid(res);
  std::vector<std::complex<double>> phase(res);
  for (std::size_t i = 0; i < res; ++i) {
    grid[i] = kPi * (static_cast<double>(i) / (grid_resolution - 1) - 0.5);
    phase[i] = std::polar(1.0, grid[i]);
  }

  // |dJ_i/dtheta_k| <= sqrt2 and each theta_k enters every combined angle with
  // weight 1, so a solution within half a spacing (max norm) of a grid point
  // leaves max|J| <= 3 sqrt2 * spacing / 2 there. Twice that is the cutoff.
  const double threshold = 3.0 * std::numbers::sqrt2 * spacing;

  std::vector<Eigen::Vector3d> candidates;
  double grid_max = 0.0;
  for (std::size_t a = 0; a < res; ++a) {
    for (std::size_t b = 0; b < res; ++b) {
      const auto ab = phase[a] * phase[b];
      const auto a_b = phase[a] * std::conj(phase[b]);
      for (std::size_t c = 0; c < res; ++c) {
        const auto ec = phase[c];
        const JVector j = j_from_phases(ab * ec, ab * std::conj(ec), a_b * ec, a_b * std::conj(ec));
        if (j.max_abs() < threshold) candidates.emplace_back(grid[a], grid[b], grid[c]);
        const double s = phase[a].real() * phase[b].real() * ec.real() +
                         phase[a].imag() * phase[b].imag() * ec.imag();
        grid_max = std::max(grid_max, 0.5 * s * s);
      }
    }
  }
  report.grid_max_objective = grid_max;
  report.candidates = static_cast<int>(candidates.size());

  for (const auto& start : candidates) {
    const Eigen::Vector3d th = refine(start);
    if (th.cwiseAbs().maxCoeff() > kHalfPi + 1e-9) continue;
    const JVector j = j_of_theta(th);
    if (!(j.max_abs() < eps)) continue;
    const std::array<double, 3> canon{canonical_angle(th(0)), canonical_angle(th(1)),
                                      canonical_angle(th(2))};
    const bool duplicate = std::any_of(
        report.solutions.begin(), report.solutions.end(), [&](const Constraint5Solution& s) {
          return std::abs(s.theta[0] - canon[0]) < 1e-6 && std::abs(s.theta[1] - canon[1]) < 1e-6 &&
                 std::abs(s.theta[2] - canon[2]) < 1e-6;
        });
    if (duplicate) continue;
    report.solutions.push_back({canon, j, ghz_objective_3param(th(0), th(1), th(2))});
  }
  std::sort(report.solutions.begin(), report.solutions.end(),
            [](const Constraint5Solution& l, const Constraint5Solution& r) { return l.theta < r.theta; });

  report.hyperplane_min_residual = termwise_max_hyperplane_min_residual();
  return report;
}

FlawedMaximum flawed_max_ghz() {
  FlawedMaximum out;
  // every bracket term is a cos +- sin form of amplitude sqrt(1^2 + 1^2);
  // summing four independent maxima gives T^2 = 4^2 * 2
  constexpr double amplitude_sq = 2.0;
  out.value = 16.0 * amplitude_sq / 32.0;
  out.witness = {-kQuarterPi, kQuarterPi, kQuarterPi, -kQuarterPi};
  out.feasibility = inverse_transform(out.witness);
  return out;
}

double product_sum_identity_check(int samples, std::uint64_t rng_seed) {
  if (samples < 1) throw InvalidArgument("product_sum_identity_check: samples must be >= 1");
  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> angle(-kHalfPi, kHalfPi);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const RealAngles th({angle(rng), angle(rng), angle(rng)});
    worst = std::max(worst, std::abs(ghz_objective_3param(th) -
                                     ghz_objective_4param(transform_to_wxyz(th))));
  }
  return worst;
}

}  // namespace groverian::refutation
