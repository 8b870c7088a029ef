#pragma once
// Thin FFTW wrapper. Plans are cached per size behind a mutex; execution uses
// the new-array interface, which FFTW documents as thread-safe.

#include <complex>

namespace ww::fft {

// out[k] = sum_n in[n] exp(-2 pi i k n / N)
void forward(const std::complex<double>* in, std::complex<double>* out, int n);
// out[n] = sum_k in[k] exp(+2 pi i k n / N)
void backward(const std::complex<double>* in, std::complex<double>* out, int n);

}  // namespace ww::fft
