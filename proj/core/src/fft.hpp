#pragma once

#include <complex>

#include <fftw3.h>

namespace qchaos::detail {

// In-place unnormalized 1D DFT of fixed length on an internal aligned buffer.
// forward: sum_n x_n exp(-2 pi i k n / N); backward uses +i.
class Fft {
 public:
  explicit Fft(int n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  int size() const { return n_; }
  std::complex<double>* data() { return reinterpret_cast<std::complex<double>*>(buf_); }
  void forward() { fftw_execute(fwd_); }
  void backward() { fftw_execute(bwd_); }

 private:
  int n_;
  fftw_complex* buf_;
  fftw_plan fwd_;
  fftw_plan bwd_;
};

}  // namespace qchaos::detail
