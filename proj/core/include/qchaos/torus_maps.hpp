#pragma once

#include <cstdint>
#include <memory>
#include <utility>

#include "qchaos/types.hpp"

namespace qchaos {

inline constexpr double kGolden = 0.6180339887498948482;  // (sqrt5 - 1)/2

// Torus map parameters; hbar = 1/(2 pi N).
struct MapParams {
  int N = 2;
  double K = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

struct PhasePoint {
  double q = 0.0;
  double p = 0.0;
};

enum class MapKind { Standard, Baker, Coupled };

struct QuantumMap {
  Mat U;
  MapParams params;
  MapKind kind = MapKind::Standard;
};

// --- classical dynamics ---------------------------------------------------

PhasePoint classical_standard_step(PhasePoint x, double K);
PhasePoint classical_baker_step(PhasePoint x);
// Tangent maps in (q, p) coordinates.
Eigen::Matrix2d standard_jacobian(PhasePoint x, double K);
Eigen::Matrix2d baker_jacobian(PhasePoint x);

// Mean tangent-vector growth rate over random initial points.
double classical_lyapunov(double K, int n_steps, int n_traj, std::uint64_t seed);
double baker_lyapunov(int n_steps, int n_traj, std::uint64_t seed);
// ln(K/2) + 1/(K^2 - 4), valid for K well above 4.
double chirikov_lyapunov(double K);

// --- quantization -----------------------------------------------------------

// Returns F_N, with (F_N^dag)_{nm} = exp[2 pi i (n+alpha)(m+beta)/N]/sqrt(N).
Mat dft_matrix(int N, double alpha, double beta);

// U_S = F^dag D_F F D_K, (D_K)_nn = exp[i N K/(2pi) cos(2pi(n+alpha)/N)],
// (D_F)_mm = exp[-i pi (m+beta)^2 / N].
QuantumMap build_standard_map(const MapParams& p);
// U_B = F_N^dag (1_2 (x) F_{N/2}) with alpha = beta = 1/2; N must be even.
QuantumMap build_baker_map(int N);

// FFT application of U_S in O(N log N).
class StandardMapStepper {
 public:
  explicit StandardMapStepper(const MapParams& p);
  ~StandardMapStepper();
  StandardMapStepper(StandardMapStepper&&) noexcept;
  StandardMapStepper& operator=(StandardMapStepper&&) noexcept;

  const MapParams& params() const { return params_; }
  void set_K(double K);
  void apply(Vec& psi);

 private:
  struct Impl;
  MapParams params_;
  std::unique_ptr<Impl> impl_;
};

PureState apply_standard_map(const PureState& psi, const MapParams& p);

// Periodized Gaussian centred at (q0, p0) on the lattice q_n = (n+alpha)/N.
PureState coherent_state(int N, double q0, double p0, double alpha = 0.0);

// (P psi)(n) = psi(N-1-n).
Mat parity_operator(int N);

struct ParitySectors {
  Mat even;
  Mat odd;
  Mat basis_even;  // N x dim_even, orthonormal columns
  Mat basis_odd;
};

// Blocks of U in the +/-1 eigenspaces of the reflection; throws
// SymmetryViolation when ||[U, P]||_max exceeds tol.
ParitySectors parity_split(const Mat& U, double tol = 1e-6);

}  // namespace qchaos
