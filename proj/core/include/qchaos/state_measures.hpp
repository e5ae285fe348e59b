#pragma once

#include <functional>
#include <vector>

#include "qchaos/torus_maps.hpp"
#include "qchaos/types.hpp"

namespace qchaos {

struct Participation {
  double ipr = 0.0;
  double pr = 0.0;
};

Participation participation(const Vec& psi);
// -sum t ln t in nats, t_j = |psi_j|^2.
double shannon_entropy(const Vec& psi);

// Haar references: <IPR> and <H> for complex and real random vectors.
double ipr_haar_complex(int N);
double ipr_haar_real(int N);
double shannon_haar_complex(int N);
double shannon_haar_real(int N);

// W(i, j) = |<q_i p_j|psi>|^2 / N on the lattice ((i+alpha)/N, (j+beta)/N),
// renormalized to unit total mass. `raw_mass` keeps the pre-normalization sum.
struct HusimiGrid {
  int N = 0;
  double alpha = 0.0;
  double beta = 0.0;
  RMat W;
  double raw_mass = 0.0;
};

HusimiGrid husimi(const Vec& psi, double alpha = 0.0, double beta = 0.0);

enum class EntropyUnit { Nats, Bits };

double wehrl_entropy(const HusimiGrid& grid, EntropyUnit unit = EntropyUnit::Nats);
// 2 ln N - (1 - gamma), the Haar-state value in nats.
double wehrl_random_state(int N);

// Husimi-weighted circular mean position on the torus.
PhasePoint husimi_centroid(const HusimiGrid& grid);

using StepFn = std::function<void(Vec&)>;
using StateMeasure = std::function<double(const Vec&)>;

// measure(U^t psi0) for t = 0..T.
std::vector<double> entropy_trajectory(const StepFn& step, Vec psi0, int T, const StateMeasure& measure);

double ehrenfest_time(double N, double lambda);

}  // namespace qchaos
