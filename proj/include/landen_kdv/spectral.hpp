// Periodic grids and Fourier-series differentiation.
#pragma once

#include <Eigen/Core>

#include <complex>

namespace lkdv {

using Field = Eigen::ArrayXd;
using Spectrum = Eigen::ArrayXcd;

/// Uniform nodes x_j = j L / N, j = 0..N-1; the endpoint x = L is not stored.
class PeriodicGrid {
 public:
  /// N must be a power of two >= 64 and L positive (std::invalid_argument).
  PeriodicGrid(double length, int points);

  double length() const { return length_; }
  int size() const { return points_; }
  double spacing() const { return length_ / points_; }
  double node(int j) const { return j * spacing(); }
  Field nodes() const;
  /// Angular wavenumbers in FFT order: 0, 1, ..., N/2, -N/2+1, ..., -1 (times 2 pi / L).
  Eigen::ArrayXd wavenumbers() const;

 private:
  double length_;
  int points_;
};

bool is_power_of_two(int n);

/// Unnormalized forward transform, X_k = sum_j x_j exp(-2 pi i jk / N).
/// In-place iterative radix-2; size must be a power of two.
void fft_in_place(Spectrum& data, bool inverse = false);

Spectrum forward_fft(const Field& samples);
/// Inverse transform (includes the 1/N) returning the real part.
Field inverse_fft_real(const Spectrum& coefficients);

/// d^order/dx^order of a smooth periodic field. The Nyquist mode is dropped
/// for odd orders so the result stays real.
Spectrum differentiate_spectrum(const Spectrum& coefficients, const PeriodicGrid& grid, int order);
Field spectral_derivative(const Field& samples, const PeriodicGrid& grid, int order);

/// Zeroes coefficients with |X_k| < factor * eps * N * max|u|, the level at
/// which sampled values carry no information. Returns the number removed.
int truncate_roundoff(Spectrum& coefficients, double max_abs_sample, double factor);

/// Fraction of spectral energy in |k| > N/3 (the band a 2/3 rule discards).
double top_third_energy_fraction(const Spectrum& coefficients);

/// Mask for the 2/3 dealiasing rule in FFT order: 1 for |k| <= N/3, else 0.
Eigen::ArrayXd two_thirds_mask(int points);

}  // namespace lkdv
