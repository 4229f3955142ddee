#pragma once

#include <complex>
#include <vector>

namespace nfftlab {

using Complex = std::complex<double>;

// Unnormalized discrete Fourier transform X_j = sum_k x_k e^{-+2 pi i j k / n}; the sign is
// negative for forward and positive for inverse. Radix-2 for powers of two, Bluestein otherwise.
void fft_inplace(std::vector<Complex>& data, bool inverse);

std::vector<Complex> fft_forward(std::vector<Complex> data);
// Inverse transform including the 1/n factor, so fft_inverse(fft_forward(x)) == x.
std::vector<Complex> fft_inverse(std::vector<Complex> data);

}  // namespace nfftlab
