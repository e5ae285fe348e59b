#pragma once

#include <vector>

#include "app.hpp"
#include "qchaos/spectral_stats.hpp"
#include "qchaos/torus_maps.hpp"

namespace qchaos::cli {

// --map, --N, --K, --alpha, --beta
void add_map_options(Command& c, const std::string& map_default, int N, double K, const std::string& alpha,
                     const std::string& beta, std::vector<std::string> maps = {"standard", "baker", "cue", "coe"});

// Floquet or random unitary for one sample; K overrides the --K value.
Mat map_unitary(const Params& p, double K, std::uint64_t seed);

MapParams map_params(const Params& p);

// Spectra of `samples` unitaries. Standard maps draw K uniformly from
// [K - dK/2, K + dK/2] (a single sample uses K itself). With `parity` set
// the reflection sectors are returned separately.
std::vector<EigenphaseSpectrum> sample_spectra(const Context& ctx, int samples, double dK, bool parity);

// Unit-circle scatter of eigenphases.
svg::Series phase_points(const std::string& name, const std::vector<double>& phi);

}  // namespace qchaos::cli
