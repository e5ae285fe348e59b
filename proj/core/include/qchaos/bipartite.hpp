#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qchaos/types.hpp"

namespace qchaos {

// Schmidt eigenvalues (descending) of a pure state on C^{N1} (x) C^{N2},
// amplitude index i * N2 + alpha.
struct SchmidtData {
  int N1 = 0;
  int N2 = 0;
  std::vector<double> lambda;
  double S_vN = 0.0;
  double S_L = 0.0;
};

SchmidtData schmidt(const Vec& psi, int N1, int N2);
// Reduced state Tr_B |psi><psi| = A A^dag.
Mat reduced_state(const Vec& psi, int N1, int N2);

double von_neumann(const std::vector<double>& lambda);
double renyi_entropy(const std::vector<double>& lambda, double q);
double tsallis_entropy(const std::vector<double>& lambda, double q);

struct EntropyRecord {
  double S_vN = 0.0;
  double S_L = 0.0;
  std::vector<double> q;
  std::vector<double> renyi;
  std::vector<double> tsallis;
};

EntropyRecord entropies(const SchmidtData& s, const std::vector<double>& q_list = {0.5, 1.0, 2.0, 3.0});

double page_average(int N1, int N2);
double lubkin_purity(int N1, int N2);
double lubkin_linear_entropy(int N1, int N2);

// Marchenko-Pastur density of x = N1 lambda with Q = N2/N1 >= 1.
double mp_density(double Q, double x);
std::array<double, 2> mp_support(double Q);
double mp_cdf(double Q, double x);

// <i alpha|rho^Gamma|j beta> = <i beta|rho|j alpha>
Mat partial_transpose(const Mat& rho, int N1, int N2);

double pt_third_moment_avg(int N1, int N2, int N3);

struct PTSpectrum {
  int N1 = 0;
  int N2 = 0;
  int N3 = 0;
  std::vector<double> mu;  // ascending
  double trace_norm = 0.0;
  double negativity = 0.0;
  double log_negativity = 0.0;
  double model_radius = 0.0;  // 2 sqrt(N1 N2 / N3), zero when N3 unknown
};

PTSpectrum pt_spectrum(const Mat& rho, int N1, int N2, int N3 = 0);

struct Negativity {
  double N = 0.0;
  double E_LN = 0.0;
};

Negativity negativity(const PTSpectrum& pt);

// Moment-matched semicircle for x = N1 N2 mu: centre 1, radius R.
struct SemicircleModel {
  double center = 1.0;
  double radius = 0.0;
  double threshold_N3 = 0.0;  // 4 N1 N2
  bool npt = false;
  double eln_deep = 0.0;      // log((8/3pi) sqrt(N1 N2 / N3)) when NPT, else 0

  double density(double x) const;
  double cdf(double x) const;
};

SemicircleModel pt_semicircle_model(int N1, int N2, int N3);

// Reduced state on the first two factors of C^{N1} (x) C^{N2} (x) C^{N3}.
Mat reduced_state_ab(const Vec& psi, int N1, int N2, int N3);

struct ConcurrenceData {
  std::array<double, 4> lambda{};  // eigenvalues of rho rho~, descending
  double c = 0.0;                  // pre-concurrence
  double C = 0.0;
};

ConcurrenceData concurrence(const Mat& rho);

struct PreconcurrenceStats {
  int L = 0;
  std::vector<double> c;
  double p_positive = 0.0;
  double se = 0.0;
};

// Pre-concurrence of qubits (1, 2) in Haar states of L qubits.
PreconcurrenceStats preconcurrence_statistics(int L, int samples, std::uint64_t seed);

// x_min = sqrt(N3) (lambda_min(rho_AB^Gamma) - 1/4) for two-qubit marginals
// of Haar states on C^4 (x) C^{N3}.
std::vector<double> xmin_scaled_statistic(int N3, int samples, std::uint64_t seed);

}  // namespace qchaos
