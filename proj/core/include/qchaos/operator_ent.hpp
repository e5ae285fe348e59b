#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qchaos/torus_maps.hpp"
#include "qchaos/types.hpp"

namespace qchaos {

// <ij|U^R|kl> = <ik|U|jl> and <ij|U^Gamma|kl> = <il|U|kj> on C^N (x) C^N.
Mat realign(const Mat& U, int N);
Mat op_partial_transpose(const Mat& U, int N);

struct OperatorSchmidt {
  int N = 0;
  std::vector<double> lambda;  // Schmidt values of U, sum N^2
  std::vector<double> mu;      // Schmidt values of U S
  double E_U = 0.0;
  double E_US = 0.0;
};

// Throws NumericalValidationError for non-unitary input.
OperatorSchmidt operator_entanglements(const Mat& U, int N);
// Linear operator entanglement 1 - Tr[(U^R U^R^dag)^2]/N^4 without the
// eigen-decomposition.
double linear_operator_entanglement(const Mat& U, int N);

struct EPRecord {
  double e_p = 0.0;
  double g_t = 0.0;
  double E_U = 0.0;
  double E_US = 0.0;
  double e_p_haar = 0.0;
  double g_t_haar = 0.5;
  double E_haar = 0.0;
};

double swap_entanglement(int N);  // E(S) = 1 - 1/N^2
double haar_entangling_power(int N);  // (N^2 - 1)/(N^2 + 1)

EPRecord entangling_power(const Mat& U, int N);
// Direct average of the normalized linear entropy over Haar product inputs.
double entangling_power_mc(const Mat& U, int N, int pairs, std::uint64_t seed);

// Dual unitarity: U^R unitary within tol.
bool is_dual_unitary(const Mat& U, int N, double tol = 1e-8);

struct LuReport {
  int trials = 0;
  double max_dE = 0.0;
  double max_dep = 0.0;
  double max_dgt = 0.0;
  bool pass = false;
};

LuReport lu_invariance_check(const Mat& U, int N, int trials, std::uint64_t seed, double tol = 1e-8);

// <e_p[U (u_A (x) u_B) V]> over Haar locals; the same form holds for g_t
// with reference 1/2.
double composition_average(double x_U, double x_V, double reference);
// reference [1 - (1 - x/reference)^n] for n = 1..n_max
std::vector<double> thermalization_curve(double x_U, double reference, int n_max);

// Mean e_p of prod_j (u_Aj (x) u_Bj) U with fresh Haar locals each step.
struct ThermalizationMc {
  std::vector<double> mean;
  std::vector<double> se;
};
ThermalizationMc thermalization_mc(const Mat& U, int N, int n_max, int histories, std::uint64_t seed);

// --- coupled standard maps --------------------------------------------------

struct CoupledMapParams {
  int N = 64;
  double K1 = 10.0;
  double K2 = 10.0;
  double alpha = 0.5;
  double beta = kGolden;
  double b = 0.01;
};

inline constexpr int kMaxCoupledDenseDim = 4096;

double lambda_parameter(int N, double b);
double lambda_small_b(int N, double b);  // N^4 b^2 / (32 pi^4)

// Diagonal of U_b: exp[i (N b / 2 pi) cos(2 pi (q_A + q_B))], index a * N + c.
Vec coupling_phases(const CoupledMapParams& p);
// Full Floquet operator on N^2; throws when N^2 exceeds the dense guard.
QuantumMap build_coupled_map(const CoupledMapParams& p);

// e_p of the diagonal coupling via its N x N reduced realignment.
double coupling_entangling_power(const CoupledMapParams& p);
// 1 - sum_k J_k^4(bN/2pi)
double coupling_entangling_power_bessel(int N, double b);

enum class InitialKind { CoherentProduct, RandomProduct };

struct EntanglementSeries {
  std::vector<int> t;
  std::vector<double> S_vN;
  std::vector<double> S2;
  std::vector<double> markov_S2;
  double e_p = 0.0;
  double t_star = 0.0;
};

// Evolves a product state with FFT local steps and the diagonal coupling.
// Coherent starts use (q_A, p_A, q_B, p_B) from `point`.
EntanglementSeries entanglement_evolution(const CoupledMapParams& p, InitialKind kind, int T, std::uint64_t seed,
                                          const std::array<double, 4>& point = {0.3, 0.2, 0.6, 0.7});

double markov_s2(double e_p, int N, double t);
double markov_time(double e_p, int N);

struct PerturbativeReference {
  double S_L_avg = 0.0;      // pi^{3/2} sqrt(Lambda) / 2
  double S_vN_avg = 0.0;     // pi^{3/2} sqrt(Lambda)
  double S_L_quench = 0.0;   // 4 pi t sqrt(Lambda)
  double saturation = 0.0;   // COE 5 sqrt(pi/8) sqrt(Lambda), CUE 5 pi^{3/2}/8 sqrt(Lambda)
};

PerturbativeReference perturbative_references(double Lambda, double t, bool cue);

}  // namespace qchaos
