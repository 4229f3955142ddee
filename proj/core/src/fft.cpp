#include "nfftlab/fft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace nfftlab {
namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// e^{sign 2 pi i k / n} from exact angle reduction.
Complex unit_root(std::size_t k, std::size_t n, double sign) {
  const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k % n) /
                       static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

void radix2(std::vector<Complex>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<Complex> tw(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) tw[k] = unit_root(k, n, sign);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex u = a[start + k];
        const Complex v = a[start + k + half] * tw[k * stride];
        a[start + k] = u + v;
        a[start + k + half] = u - v;
      }
    }
  }
}

// Chirp-z: X_j = conj(c_j) sum_k (x_k conj(c_k)) c_{j-k} with c_k = e^{i pi k^2 / n}.
void bluestein(std::vector<Complex>& a, bool inverse) {
  const std::size_t n = a.size();
  std::size_t len = 1;
  while (len < 2 * n - 1) len <<= 1;
  const double sign = inverse ? -1.0 : 1.0;
  std::vector<Complex> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t k2 = static_cast<std::uint64_t>(k) * k % (2 * n);
    chirp[k] = unit_root(k2, 2 * n, sign);
  }
  std::vector<Complex> x(len), y(len);
  for (std::size_t k = 0; k < n; ++k) x[k] = a[k] * std::conj(chirp[k]);
  y[0] = chirp[0];
  for (std::size_t k = 1; k < n; ++k) y[k] = y[len - k] = chirp[k];
  radix2(x, false);
  radix2(y, false);
  for (std::size_t i = 0; i < len; ++i) x[i] *= y[i];
  radix2(x, true);
  const double scale = 1.0 / static_cast<double>(len);
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * scale * std::conj(chirp[j]);
}

}  // namespace

void fft_inplace(std::vector<Complex>& data, bool inverse) {
  if (data.size() <= 1) return;
  if (is_power_of_two(data.size())) {
    radix2(data, inverse);
  } else {
    bluestein(data, inverse);
  }
}

std::vector<Complex> fft_forward(std::vector<Complex> data) {
  fft_inplace(data, false);
  return data;
}

std::vector<Complex> fft_inverse(std::vector<Complex> data) {
  fft_inplace(data, true);
  const double scale = data.empty() ? 1.0 : 1.0 / static_cast<double>(data.size());
  for (auto& z : data) z *= scale;
  return data;
}

}  // namespace nfftlab
