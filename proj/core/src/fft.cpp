#include "fft.hpp"

#include <mutex>
#include <stdexcept>

namespace qchaos::detail {

namespace {
std::mutex planner_mutex;
}

Fft::Fft(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Fft: length must be >= 1");
  std::lock_guard<std::mutex> lock(planner_mutex);
  buf_ = fftw_alloc_complex(n);
  fwd_ = fftw_plan_dft_1d(n, buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
  bwd_ = fftw_plan_dft_1d(n, buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft::~Fft() {
  std::lock_guard<std::mutex> lock(planner_mutex);
  fftw_destroy_plan(fwd_);
  fftw_destroy_plan(bwd_);
  fftw_free(buf_);
}

}  // namespace qchaos::detail
