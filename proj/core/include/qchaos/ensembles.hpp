#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qchaos/rng.hpp"
#include "qchaos/types.hpp"

namespace qchaos {

// Generators drawing from an existing stream.
Mat ginibre(Rng& rng, int rows, int cols);
Mat cue(Rng& rng, int n);
Mat coe(Rng& rng, int n);
// Haar-random isometry, rows >= cols (first columns of a CUE matrix).
Mat haar_isometry(Rng& rng, int rows, int cols);
// Gaussian ensembles with density proportional to exp(-(beta/2) Tr H^2):
// GUE has diagonal variance 1/2 and off-diagonal variance 1/4 per real
// component, GOE has diagonal variance 1 and off-diagonal variance 1/2.
// Both have semicircle support [-sqrt(2N), sqrt(2N)].
Mat gue(Rng& rng, int n);
RMat goe(Rng& rng, int n);
Vec haar_state(Rng& rng, int n);
RVec real_haar_state(Rng& rng, int n);
Mat induced_state(Rng& rng, int n, int k_env);

// Seeded entry points; each returns a fresh sample tagged with its seed.
ComplexMatrix sample_ginibre(int rows, int cols, std::uint64_t seed);
UnitaryOperator sample_cue(int n, std::uint64_t seed);
UnitaryOperator sample_coe(int n, std::uint64_t seed);
ComplexMatrix sample_gue(int n, std::uint64_t seed);
ComplexMatrix sample_goe(int n, std::uint64_t seed);
PureState sample_haar_state(int n, std::uint64_t seed);
RVec sample_real_haar_state(int n, std::uint64_t seed);
DensityMatrix sample_induced_state(int n, int k_env, std::uint64_t seed);

// Serializable ensemble request; member k is drawn from substream(seed, k).
struct EnsembleSpec {
  std::string ensemble;  // ginibre | cue | coe | gue | goe | haar_state | induced
  int dim = 0;
  int count = 1;
  std::uint64_t seed = 0;
  int k_env = 0;  // induced only; defaults to dim
};

std::vector<Mat> sample_ensemble(const EnsembleSpec& spec);

// Throws NumericalValidationError on the first violated invariant.
void validate_unitary(const Mat& u, double tol = 1e-10);
void validate_density_matrix(const Mat& rho);

}  // namespace qchaos
