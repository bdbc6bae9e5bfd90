#pragma once

// Three-qubit GHZ overlap objective in its original angles (theta1..3) and in
// the four combined angles obtained by turning the trigonometric products
// into sums, plus the stationarity analysis in both coordinate systems.
//
// The four combined angles are linearly dependent: every image of the
// 3 -> 4 transform satisfies w - x - y + z = 0. Maximizing the four-angle form
// as if its arguments were free reaches 1, which no product state attains.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "groverian/state.hpp"

namespace groverian::refutation {

struct TransformedAngles {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Stationarity functions of the four-angle objective; J_i is the derivative
/// of the i-th bracket term with respect to its own angle.
struct JVector {
  double j0 = 0.0;
  double j1 = 0.0;
  double j2 = 0.0;
  double j3 = 0.0;

  double max_abs() const;
  double min_abs() const;
};

/// (t1+t2+t3, t1+t2-t3, t1-t2+t3, t1-t2-t3).
TransformedAngles transform_to_wxyz(const RealAngles& angles);

/// w - x - y + z; zero on every image of transform_to_wxyz.
double hyperplane_residual(const TransformedAngles& t);

struct InverseResult {
  std::optional<RealAngles> angles;  // set when t lies on the hyperplane
  double residual = 0.0;
};

inline constexpr double kHyperplaneTolerance = 1e-12;

/// Solves t1 = (w+z)/2, t2 = (w-y)/2, t3 = (w-x)/2 when |residual| < 1e-12.
/// Recovered angles outside [-pi/2, pi/2] are reported as infeasible too.
InverseResult inverse_transform(const TransformedAngles& t);

/// 1/2 (cos t1 cos t2 cos t3 + sin t1 sin t2 sin t3)^2.
double ghz_objective_3param(const RealAngles& angles);
/// Unconstrained variant taking raw angles (no range check).
double ghz_objective_3param(double t1, double t2, double t3);

/// 1/32 [(cos w - sin w) + (cos x + sin x) + (cos y + sin y) + (cos z - sin z)]^2,
/// defined on all of R^4.
double ghz_objective_4param(const TransformedAngles& t);

JVector j_vector(const TransformedAngles& t);

/// max(|j0 + j1|, |j0 + j2|, |j0 - j3|): zero iff j0 = -j1 = -j2 = j3.
double constraint4_residual(const TransformedAngles& t);

/// The three chain-rule sums dT/dtheta_i, i = 1..3:
/// (j0+j1+j2+j3, j0+j1-j2-j3, j0-j1+j2-j3).
std::array<double, 3> constraint4_summed(const TransformedAngles& t);

struct Constraint5Solution {
  std::array<double, 3> theta{};  // canonical representatives in (-pi, pi]
  JVector j;
  double objective = 0.0;
};

struct Constraint5Report {
  int grid_resolution = 0;
  double eps = 0.0;
  // refined points of [-pi/2, pi/2]^3 where max|J_i| < eps
  std::vector<Constraint5Solution> solutions;
  // candidates refined from grid points below the Lipschitz threshold
  int candidates = 0;
  // largest three-angle objective seen on the grid
  double grid_max_objective = 0.0;
  // min |w - x - y + z| over the termwise-maximizing lattice
  // w = -pi/4, x = pi/4, y = pi/4, z = -pi/4 (mod 2pi), representatives in [-pi, pi]
  double hyperplane_min_residual = 0.0;
};

/// Grid scan of [-pi/2, pi/2]^3 for points where all four J_i vanish,
/// refined by Gauss-Newton on J composed with the transform.
Constraint5Report constraint5_search(int grid_resolution, double eps);

/// Min |hyperplane_residual| over representatives in [-pi, pi] of the
/// termwise-maximizing system.
double termwise_max_hyperplane_min_residual();

struct FlawedMaximum {
  double value = 0.0;  // 1.0
  TransformedAngles witness;
  InverseResult feasibility;
};

/// Maximizes each bracket term of the four-angle objective independently.
FlawedMaximum flawed_max_ghz();

/// Max |3-param - 4-param o transform| over `samples` uniform random triples.
double product_sum_identity_check(int samples, std::uint64_t rng_seed);

/// Reduces an angle to (-pi, pi].
double canonical_angle(double t);

}  // namespace groverian::refutation
