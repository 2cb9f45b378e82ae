#include "landen_kdv/spectral.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lkdv {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

PeriodicGrid::PeriodicGrid(double length, int points) : length_(length), points_(points) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("PeriodicGrid: length must be positive and finite");
  }
  if (points < 64 || !is_power_of_two(points)) {
    throw std::invalid_argument("PeriodicGrid: N must be a power of two >= 64, got " +
                                std::to_string(points));
  }
}

Field PeriodicGrid::nodes() const {
  Field x(points_);
  for (int j = 0; j < points_; ++j) x[j] = node(j);
  return x;
}

Eigen::ArrayXd PeriodicGrid::wavenumbers() const {
  Eigen::ArrayXd k(points_);
  const double base = 2.0 * std::numbers::pi / length_;
  for (int j = 0; j < points_; ++j) {
    const int index = j <= points_ / 2 ? j : j - points_;
    k[j] = base * index;
  }
  return k;
}

void fft_in_place(Spectrum& data, bool inverse) {
  const int n = static_cast<int>(data.size());
  if (!is_power_of_two(n)) throw std::invalid_argument("fft: size must be a power of two");

  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  // Twiddles from sin/cos directly; a running product drifts.
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<std::complex<double>> twiddle(n / 2);
  for (int j = 0; j < n / 2; ++j) {
    const double angle = sign * 2.0 * std::numbers::pi * j / n;
    twiddle[j] = {std::cos(angle), std::sin(angle)};
  }

  for (int len = 2; len <= n; len <<= 1) {
    const int half = len / 2;
    const int stride = n / len;
    for (int start = 0; start < n; start += len) {
      for (int k = 0; k < half; ++k) {
        const std::complex<double> w = twiddle[k * stride];
        const std::complex<double> even = data[start + k];
        const std::complex<double> odd = w * data[start + k + half];
        data[start + k] = even + odd;
        data[start + k + half] = even - odd;
      }
    }
  }
}

Spectrum forward_fft(const Field& samples) {
  Spectrum data = samples.cast<std::complex<double>>();
  fft_in_place(data, false);
  return data;
}

Field inverse_fft_real(const Spectrum& coefficients) {
  Spectrum data = coefficients;
  fft_in_place(data, true);
  return data.real() / static_cast<double>(data.size());
}

Spectrum differentiate_spectrum(const Spectrum& coefficients, const PeriodicGrid& grid,
                                int order) {
  const Eigen::ArrayXd k = grid.wavenumbers();
  Spectrum out(coefficients.size());
  for (Eigen::Index j = 0; j < coefficients.size(); ++j) {
    out[j] = std::pow(std::complex<double>(0.0, k[j]), order) * coefficients[j];
  }
  if (order % 2 == 1) out[grid.size() / 2] = 0.0;
  return out;
}

Field spectral_derivative(const Field& samples, const PeriodicGrid& grid, int order) {
  return inverse_fft_real(differentiate_spectrum(forward_fft(samples), grid, order));
}

int truncate_roundoff(Spectrum& coefficients, double max_abs_sample, double factor) {
  const double threshold = factor * std::numeric_limits<double>::epsilon() *
                           static_cast<double>(coefficients.size()) * max_abs_sample;
  int removed = 0;
  for (Eigen::Index j = 0; j < coefficients.size(); ++j) {
    if (std::abs(coefficients[j]) < threshold && coefficients[j] != 0.0) {
      coefficients[j] = 0.0;
      ++removed;
    }
  }
  return removed;
}

double top_third_energy_fraction(const Spectrum& coefficients) {
  const int n = static_cast<int>(coefficients.size());
  double total = 0.0;
  double top = 0.0;
  for (int j = 0; j < n; ++j) {
    const int index = j <= n / 2 ? j : n - j;
    const double e = std::norm(coefficients[j]);
    total += e;
    if (3 * index > n) top += e;
  }
  return total > 0.0 ? top / total : 0.0;
}

Eigen::ArrayXd two_thirds_mask(int points) {
  Eigen::ArrayXd mask(points);
  for (int j = 0; j < points; ++j) {
    const int index = j <= points / 2 ? j : points - j;
    mask[j] = 3 * index <= points ? 1.0 : 0.0;
  }
  return mask;
}

}  // namespace lkdv
