#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qchaos/types.hpp"

namespace qchaos {

class NotCompletelyPositive : public NumericalValidationError {
 public:
  using NumericalValidationError::NumericalValidationError;
};

// Kraus operators K_i : C^{N_in} -> C^{N_out}.
struct KrausSet {
  int N_in = 0;
  int N_out = 0;
  std::vector<Mat> K;

  int M() const { return static_cast<int>(K.size()); }
};

KrausSet make_kraus(std::vector<Mat> ops);
// max |sum K^dag K - 1|
double trace_preservation_residual(const KrausSet& k);

// Psi = sum K (x) conj(K), acting on row-major vec(rho).
Mat kraus_to_superop(const KrausSet& k);
// D_{mn, mu nu} = Psi_{m mu, n nu}; inverse reshuffle for choi_to_superop.
Mat superop_to_choi(const Mat& psi, int N_out, int N_in);
Mat choi_to_superop(const Mat& choi, int N_out, int N_in);
// Kraus operators from the eigenvectors of D; throws NotCompletelyPositive
// when D has an eigenvalue below -tol.
KrausSet choi_to_kraus(const Mat& choi, int N_out, int N_in, double tol = 1e-8);

Mat apply_channel(const KrausSet& k, const Mat& rho);

// Partial traces of a Choi matrix on C^{N_out} (x) C^{N_in}.
Mat choi_trace_out(const Mat& choi, int N_out, int N_in);  // Tr_A D (N_in x N_in)
Mat choi_trace_in(const Mat& choi, int N_out, int N_in);   // Tr_B D (N_out x N_out)

// Kraus set, superoperator, Choi matrix and (for square maps) the spectrum
// sorted by decreasing modulus with gap 1 - |lambda_2|.
struct ChannelBundle {
  KrausSet kraus;
  Mat superop;
  Mat choi;
  Vec spectrum;
  double gap = 0.0;
};

ChannelBundle make_bundle(KrausSet k, bool with_spectrum = true);
// Eigenvalues of a superoperator sorted by decreasing modulus.
Vec superop_spectrum(const Mat& psi);

// Fixed point of a trace-preserving square channel, from the eigenvector of
// the eigenvalue closest to 1.
Mat fixed_point(const ChannelBundle& c);

struct ConvergenceFit {
  std::vector<double> t;
  std::vector<double> distance;  // trace distance to the fixed point
  double rate = 0.0;             // fitted alpha in distance ~ exp(-alpha t)
  double predicted = 0.0;        // -ln |lambda_2|
};

// Iterates rho0 and fits the decay while the distance stays above `floor`.
ConvergenceFit convergence_rate(const ChannelBundle& c, const Mat& rho0, int T, double floor = 1e-11);

// Throws NumericalValidationError when CP or TP fails.
void validate_cptp(const ChannelBundle& c);

// K_j = <j|_env V |0>_env for Haar V on C^M (x) C^N.
KrausSet random_kraus(int N, int M, std::uint64_t seed);
ChannelBundle random_channel(int N, int M, std::uint64_t seed, bool with_spectrum = true);

// D = (1 (x) Y^{-1/2}) G G^dag (1 (x) Y^{-1/2}), Y = Tr_A G G^dag.
Mat random_choi_ginibre(int N, std::uint64_t seed);

// Generalized Gell-Mann basis, Tr L_i L_j = delta_ij, L_0 = 1/sqrt(N).
std::vector<Mat> gell_mann_basis(int N);

struct BlochAffine {
  RMat C;
  RVec kappa;
};

BlochAffine bloch_affine(const KrausSet& k);

ChannelBundle mixed_unitary_channel(const std::vector<double>& weights, const std::vector<Mat>& unitaries,
                                    bool with_spectrum = true);

// Kesten law for x = squared singular values of (V_1 + ... + V_M)/sqrt(M).
double kesten_density(int M, double x);
double kesten_cdf(int M, double x);
std::vector<double> kesten_sample(int M, int N, int realizations, std::uint64_t seed);

struct RingRadii {
  double R_minus = 0.0;  // 0 for a disk
  double R_plus = 0.0;
  double p_c = 0.0;
  bool disk = false;
};

// Radii of the diluted-unitary ring, with p the noise weight.
RingRadii ring_radii(double p, int M);
// Phi(rho) = (1-p) U rho U^dag + p sum K_j rho K_j^dag, U Haar and the K_j a
// random channel with M Kraus operators.
ChannelBundle diluted_unitary(double p, int M, int N, std::uint64_t seed);

// Kraus operators L_a : C^N -> C^M of rho -> Tr_A[V (rho (x) |0><0|) V^dag].
KrausSet complementary_channel(int N, int M, std::uint64_t seed);
RingRadii complementary_ring_radii(int N, int M);
// Spectrum used to model the rectangular complementary superoperator:
// eigenvalues of S W with S its singular values (N^2 x N^2 block) and W Haar.
Vec complementary_spectrum_model(const KrausSet& comp, std::uint64_t seed);

// Channel with Kraus {P_j U} for a Haar-rotated orthogonal projector split
// into M blocks of (nearly) equal rank.
ChannelBundle measured_map_spectrum(const Mat& U, int M_meas, std::uint64_t seed);

struct RingSummary {
  std::string classification;  // "ring" or "disk"
  double inside_fraction = 0.0;
  double q_low = 0.0;
  double q_high = 0.0;
};

// Bulk = all eigenvalues except the leading one; inside fraction counts
// moduli within [R_minus - margin, R_plus + margin].
RingSummary summarize_ring(const Vec& spectrum, const RingRadii& radii, double margin, bool drop_leading = true);

}  // namespace qchaos
