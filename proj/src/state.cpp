#include "groverian/state.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace groverian {

namespace {

constexpr int kMaxQubits = 30;

std::size_t dim_for(int n) { return std::size_t{1} << n; }

void require_qubits(int n, const char* what) {
  if (n < 1 || n > kMaxQubits) {
    throw InvalidArgument(std::string(what) + ": n must be in [1, 30], got " +
                          std::to_string(n));
  }
}

// bit of qubit q (qubit 0 is the most significant) in basis index x
int qubit_bit(std::size_t x, int q, int n) { return static_cast<int>((x >> (n - 1 - q)) & 1U); }

}  // namespace

PureState::PureState(int n_qubits, std::vector<Complex> amplitudes, bool normalize,
                     double tolerance)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  require_qubits(n_qubits, "PureState");
  if (amplitudes_.size() != dim_for(n_qubits)) {
    throw InvalidArgument("PureState: amplitudes has length " +
                          std::to_string(amplitudes_.size()) + ", expected 2^" +
                          std::to_string(n_qubits) + " = " +
                          std::to_string(dim_for(n_qubits)));
  }
  for (const auto& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InvalidArgument("PureState: amplitudes contain a non-finite value");
    }
  }
  const double norm2 = squared_norm();
  if (normalize) {
    if (norm2 <= 0.0) throw NormalizationError("PureState: cannot normalize the zero vector");
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& a : amplitudes_) a *= scale;
  } else if (std::abs(norm2 - 1.0) > tolerance) {
    throw NormalizationError("PureState: squared norm " + std::to_string(norm2) +
                             " is not within tolerance of 1");
  }
}

double PureState::squared_norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return s;
}

double PureState::max_imaginary() const {
  double m = 0.0;
  for (const auto& a : amplitudes_) m = std::max(m, std::abs(a.imag()));
  return m;
}

std::size_t PureState::dominant_basis_index() const {
  std::size_t best = 0;
  double best_p = -1.0;
  for (std::size_t x = 0; x < amplitudes_.size(); ++x) {
    const double p = std::norm(amplitudes_[x]);
    if (p > best_p) {
      best_p = p;
      best = x;
    }
  }
  return best;
}

PureState PureState::permuted(std::span<const int> perm) const {
  const int n = n_qubits_;
  if (static_cast<int>(perm.size()) != n) {
    throw InvalidArgument("permuted: permutation length does not match qubit count");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw InvalidArgument("permuted: not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Complex> out(amplitudes_.size());
  for (std::size_t y = 0; y < out.size(); ++y) {
    std::size_t x = 0;
    for (int i = 0; i < n; ++i) {
      if (qubit_bit(y, i, n)) x |= std::size_t{1} << (n - 1 - perm[static_cast<std::size_t>(i)]);
    }
    out[y] = amplitudes_[x];
  }
  return PureState(n, std::move(out));
}

SingleQubitState::SingleQubitState(Complex c0, Complex c1) : amplitudes_{c0, c1} {
  const double norm2 = std::norm(c0) + std::norm(c1);
  if (std::abs(norm2 - 1.0) > kFactorNormTolerance) {
    throw NormalizationError("SingleQubitState: squared norm " + std::to_string(norm2) +
                             " is not 1");
  }
}

SingleQubitState SingleQubitState::normalized(Complex c0, Complex c1) {
  const double norm = std::sqrt(std::norm(c0) + std::norm(c1));
  if (!(norm > 0.0)) throw NormalizationError("SingleQubitState: zero vector");
  return SingleQubitState(c0 / norm, c1 / norm);
}

SingleQubitState SingleQubitState::real_angle(double theta) {
  return SingleQubitState(std::cos(theta), std::sin(theta));
}

SingleQubitState SingleQubitState::basis(int bit) {
  return bit ? SingleQubitState(0.0, 1.0) : SingleQubitState(1.0, 0.0);
}

ProductState::ProductState(std::vector<SingleQubitState> factors) : factors_(std::move(factors)) {
  require_qubits(static_cast<int>(factors_.size()), "ProductState");
}

ProductState ProductState::basis(int n_qubits, std::size_t index) {
  require_qubits(n_qubits, "ProductState::basis");
  if (index >= dim_for(n_qubits)) throw InvalidArgument("ProductState::basis: index out of range");
  std::vector<SingleQubitState> f;
  f.reserve(static_cast<std::size_t>(n_qubits));
  for (int q = 0; q < n_qubits; ++q) f.push_back(SingleQubitState::basis(qubit_bit(index, q, n_qubits)));
  return ProductState(std::move(f));
}

std::vector<Spinor> ProductState::spinors() const {
  std::vector<Spinor> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.spinor());
  return out;
}

PureState ProductState::expand() const {
  const int n = n_qubits();
  std::vector<Complex> amps(dim_for(n));
  for (std::size_t x = 0; x < amps.size(); ++x) {
    Complex a = 1.0;
    for (int q = 0; q < n; ++q) a *= factor(q).spinor()[static_cast<std::size_t>(qubit_bit(x, q, n))];
    amps[x] = a;
  }
  return PureState(n, std::move(amps), false, 1e-9);
}

RealAngles::RealAngles(std::vector<double> thetas) : thetas_(std::move(thetas)) {
  constexpr double half_pi = std::numbers::pi / 2;
  for (std::size_t i = 0; i < thetas_.size(); ++i) {
    const double t = thetas_[i];
    // 1e-12 slack so computed values like 3*(pi/2)/3 are accepted
    if (!std::isfinite(t) || t < -half_pi - 1e-12 || t > half_pi + 1e-12) {
      throw InvalidArgument("RealAngles: theta[" + std::to_string(i) + "] = " + std::to_string(t) +
                            " outside [-pi/2, pi/2]");
    }
  }
}

// ---- families ----------------------------------------------------------

PureState make_ghz(int n) { return make_gghz(n, std::numbers::sqrt2 / 2); }

PureState make_gghz(int n, double a) {
  require_qubits(n, "gghz");
  if (!(a >= 0.0 && a <= 1.0)) {
    throw InvalidArgument("gghz: amplitude a must be in [0, 1], got " + std::to_string(a));
  }
  std::vector<Complex> amps(dim_for(n));
  amps.front() = a;
  amps.back() += std::sqrt(std::max(0.0, 1.0 - a * a));
  return PureState(n, std::move(amps));
}

PureState make_w(int n) { return make_dicke(n, 1); }

PureState make_dicke(int n, int k) {
  require_qubits(n, "dicke");
  if (k < 0 || k > n) {
    throw InvalidArgument("dicke: k must be in [0, n], got " + std::to_string(k));
  }
  std::vector<Complex> amps(dim_for(n));
  std::size_t count = 0;
  for (std::size_t x = 0; x < amps.size(); ++x) {
    if (std::popcount(x) == k) ++count;
  }
  const double a = 1.0 / std::sqrt(static_cast<double>(count));
  for (std::size_t x = 0; x < amps.size(); ++x) {
    if (std::popcount(x) == k) amps[x] = a;
  }
  return PureState(n, std::move(amps));
}

PureState make_basis(int n, std::size_t x) {
  require_qubits(n, "basis");
  if (x >= dim_for(n)) {
    throw InvalidArgument("basis: x must be in [0, 2^n), got " + std::to_string(x));
  }
  std::vector<Complex> amps(dim_for(n));
  amps[x] = 1.0;
  return PureState(n, std::move(amps));
}

PureState make_uniform(int n) {
  require_qubits(n, "uniform");
  const std::size_t d = dim_for(n);
  return PureState(n, std::vector<Complex>(d, 1.0 / std::sqrt(static_cast<double>(d))));
}

// ---- contractions ------------------------------------------------------

namespace {

void check_factors(const PureState& psi, std::span<const Spinor> factors, const char* what) {
  if (static_cast<int>(factors.size()) != psi.n_qubits()) {
    throw InvalidArgument(std::string(what) + ": state has " + std::to_string(psi.n_qubits()) +
                          " qubits but product has " + std::to_string(factors.size()) + " factors");
  }
}

}  // namespace

Complex overlap(const PureState& psi, std::span<const Spinor> factors) {
  check_factors(psi, factors, "overlap");
  const int n = psi.n_qubits();
  std::vector<Complex> v(psi.amplitudes().begin(), psi.amplitudes().end());
  // contract from the least significant qubit inward
  for (int q = n - 1; q >= 0; --q) {
    const Complex f0 = std::conj(factors[static_cast<std::size_t>(q)][0]);
    const Complex f1 = std::conj(factors[static_cast<std::size_t>(q)][1]);
    const std::size_t half = v.size() / 2;
    for (std::size_t j = 0; j < half; ++j) v[j] = f0 * v[2 * j] + f1 * v[2 * j + 1];
    v.resize(half);
  }
  return v[0];
}

Complex overlap(const PureState& psi, const ProductState& phi) {
  const auto s = phi.spinors();
  return overlap(psi, s);
}

Spinor environment_vector(const PureState& psi, std::span<const Spinor> factors, int k) {
  check_factors(psi, factors, "environment_vector");
  const int n = psi.n_qubits();
  if (k < 0 || k >= n) {
    throw InvalidArgument("environment_vector: qubit index " + std::to_string(k) + " out of range");
  }
  std::vector<Complex> v(psi.amplitudes().begin(), psi.amplitudes().end());
  for (int q = n - 1; q > k; --q) {
    const Complex f0 = std::conj(factors[static_cast<std::size_t>(q)][0]);
    const Complex f1 = std::conj(factors[static_cast<std::size_t>(q)][1]);
    const std::size_t half = v.size() / 2;
    for (std::size_t j = 0; j < half; ++j) v[j] = f0 * v[2 * j] + f1 * v[2 * j + 1];
    v.resize(half);
  }
  // v now indexed by qubits 0..k; peel off the leading qubits
  for (int q = 0; q < k; ++q) {
    const Complex f0 = std::conj(factors[static_cast<std::size_t>(q)][0]);
    const Complex f1 = std::conj(factors[static_cast<std::size_t>(q)][1]);
    const std::size_t half = v.size() / 2;
    for (std::size_t j = 0; j < half; ++j) v[j] = f0 * v[j] + f1 * v[j + half];
    v.resize(half);
  }
  return {v[0], v[1]};
}

Spinor environment_vector(const PureState& psi, const ProductState& phi, int k) {
  const auto s = phi.spinors();
  return environment_vector(psi, s, k);
}

ProductState real_angles_to_product(const RealAngles& angles) {
  std::vector<SingleQubitState> f;
  f.reserve(static_cast<std::size_t>(angles.size()));
  for (double t : angles.thetas()) f.push_back(SingleQubitState::real_angle(t));
  return ProductState(std::move(f));
}

double schmidt_pmax_2qubit(const PureState& psi) {
  if (psi.n_qubits() != 2) {
    throw InvalidArgument("schmidt_pmax_2qubit: expected 2 qubits, got " +
                          std::to_string(psi.n_qubits()));
  }
  Eigen::Matrix2cd m;
  m << psi[0], psi[1], psi[2], psi[3];
  const Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
  const double s = svd.singularValues()(0);
  return s * s;
}

}  // namespace groverian
