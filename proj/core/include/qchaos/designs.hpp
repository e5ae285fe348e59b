#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qchaos/torus_maps.hpp"
#include "qchaos/types.hpp"

namespace qchaos {

struct StateEnsemble {
  std::vector<Vec> members;
  std::vector<double> weights;  // defaults to 1/M
  int N = 0;

  int M() const { return static_cast<int>(members.size()); }
};

StateEnsemble make_state_ensemble(std::vector<Vec> members);

// C(N + t - 1, t)
double symmetric_dimension(int N, int t);

// sum_ab p_a p_b |<psi_a|psi_b>|^{2t}
double frame_potential(const StateEnsemble& e, int t);
// mean of |<psi_a|psi_b>|^{2t} over ordered pairs a != b
double frame_potential_offdiag(const StateEnsemble& e, int t);
// d_2 F_2^off - 1
double delta2(const StateEnsemble& e);

struct DesignDiagnostics {
  int t = 2;
  int M = 0;
  double d_t = 0.0;
  double F_t = 0.0;
  double F2_off = 0.0;
  double delta2 = 0.0;
};

DesignDiagnostics design_diagnostics(const StateEnsemble& e, int t);

inline constexpr int kMaxEnsembleSize = 4096;
inline constexpr long long kMaxTrajectorySteps = 10'000'000;

// |phi(n)> = U(K_n)|phi(n-1)> with K_n uniform in [K - dK/2, K + dK/2];
// the first burn_in states are dropped, then every stride-th state is kept
// until M states are collected.
StateEnsemble trajectory_ensemble(const MapParams& base, double dK, int M, int burn_in, int stride,
                                  const Vec& fiducial, std::uint64_t seed);

struct Delta2Sweep {
  double mean = 0.0;
  double sd = 0.0;
  std::vector<double> per_history;
};

// delta2 over independent kick-strength histories (substreams of seed).
Delta2Sweep delta2_histories(const MapParams& base, double dK, int M, int burn_in, int stride, const Vec& fiducial,
                             int histories, std::uint64_t seed);

// Haar averages of U X U^dag and (U (x) U) X (U (x) U)^dag.
Mat haar_twirl_1(const Mat& X);
Mat haar_twirl_2(const Mat& X);
Mat swap_operator(int N);

// Weingarten function on S_2: identity (cycles = 2) or transposition.
double weingarten_s2(bool transposition, int N);
// <u_{i1 j1} u_{i2 j2} conj(u_{i1' j1'}) conj(u_{i2' j2'})> over Haar U(N);
// i = (i1, i2, i1', i2'), j = (j1, j2, j1', j2').
double weingarten_fourth_moment(const std::array<int, 4>& i, const std::array<int, 4>& j, int N);

// Sample mean of U (x) conj(U); converges to |phi+><phi+|.
Mat m1_estimate(const std::vector<Mat>& unitaries);
Mat maximally_entangled_projector(int N);

// Mean of |Tr(U_a^dag U_b)|^{2t}; all ordered pairs, or a != b only.
double unitary_frame_potential(const std::vector<Mat>& unitaries, int t, bool include_diagonal = true);

}  // namespace qchaos
