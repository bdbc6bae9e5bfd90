#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace groverian {

using Complex = std::complex<double>;

// Raw single-qubit amplitude pair (c0, c1). Unlike SingleQubitState it carries
// no normalization guarantee, which lets contraction code work on scaled factors.
using Spinor = std::array<Complex, 2>;

/// Bad parameter or malformed input.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// State whose squared norm is further than the allowed tolerance from one.
class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kConstructionNormTolerance = 1e-10;
inline constexpr double kFactorNormTolerance = 1e-12;

/// n-qubit pure state as a dense vector of 2^n amplitudes.
///
/// Basis index x encodes qubit 0 as the most significant bit, so
/// |x0 x1 ... x_{n-1}> sits at index x0*2^{n-1} + ... + x_{n-1}. The
/// all-zeros and all-ones strings are indices 0 and 2^n - 1.
class PureState {
 public:
  /// Validates length 2^n and unit norm. With `normalize` set the vector is
  /// rescaled instead of rejected (a zero vector is still rejected).
  PureState(int n_qubits, std::vector<Complex> amplitudes, bool normalize = false,
            double tolerance = kConstructionNormTolerance);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t index) const { return amplitudes_[index]; }

  double squared_norm() const;
  /// Largest |Im a_x|.
  double max_imaginary() const;
  bool is_real(double tolerance = 1e-12) const { return max_imaginary() < tolerance; }

  /// Index of the largest |a_x|^2, lowest index on ties.
  std::size_t dominant_basis_index() const;

  /// Same state with qubit i of the result taken from qubit perm[i] of this one.
  PureState permuted(std::span<const int> perm) const;

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Normalized single-qubit state c0|0> + c1|1>.
class SingleQubitState {
 public:
  SingleQubitState(Complex c0, Complex c1);
  static SingleQubitState normalized(Complex c0, Complex c1);
  /// cos(theta)|0> + sin(theta)|1>.
  static SingleQubitState real_angle(double theta);
  static SingleQubitState basis(int bit);

  const Spinor& spinor() const { return amplitudes_; }
  Complex c0() const { return amplitudes_[0]; }
  Complex c1() const { return amplitudes_[1]; }

 private:
  Spinor amplitudes_;
};

class ProductState {
 public:
  explicit ProductState(std::vector<SingleQubitState> factors);

  /// Computational basis product state for the n-bit string `index`.
  static ProductState basis(int n_qubits, std::size_t index);

  int n_qubits() const { return static_cast<int>(factors_.size()); }
  const std::vector<SingleQubitState>& factors() const { return factors_; }
  const SingleQubitState& factor(int k) const { return factors_[static_cast<std::size_t>(k)]; }
  std::vector<Spinor> spinors() const;

  /// Dense 2^n amplitude expansion.
  PureState expand() const;

 private:
  std::vector<SingleQubitState> factors_;
};

/// Per-qubit real-plane angles, each in [-pi/2, pi/2].
class RealAngles {
 public:
  explicit RealAngles(std::vector<double> thetas);

  int size() const { return static_cast<int>(thetas_.size()); }
  std::span<const double> thetas() const { return thetas_; }
  double operator[](std::size_t i) const { return thetas_[i]; }

 private:
  std::vector<double> thetas_;
};

// ---- named families ----------------------------------------------------

PureState make_ghz(int n);
/// a|0...0> + sqrt(1 - a^2)|1...1>; `a` is the amplitude, not its square.
PureState make_gghz(int n, double a);
PureState make_w(int n);
/// Equal superposition of all weight-k basis states.
PureState make_dicke(int n, int k);
PureState make_basis(int n, std::size_t x);
/// |+>^n.
PureState make_uniform(int n);

// ---- contractions ------------------------------------------------------

/// <phi_1 (x) ... (x) phi_n | psi>. Factors need not be normalized; the
/// result is multilinear in their conjugates.
Complex overlap(const PureState& psi, std::span<const Spinor> factors);
Complex overlap(const PureState& psi, const ProductState& phi);

/// Contraction of psi against every factor except qubit k. For any
/// single-qubit e, replacing factor k by e gives overlap <e|v>.
Spinor environment_vector(const PureState& psi, std::span<const Spinor> factors, int k);
Spinor environment_vector(const PureState& psi, const ProductState& phi, int k);

ProductState real_angles_to_product(const RealAngles& angles);

/// Largest squared Schmidt coefficient of a two-qubit state, from the
/// singular values of its 2x2 amplitude matrix.
double schmidt_pmax_2qubit(const PureState& psi);

}  // namespace groverian
