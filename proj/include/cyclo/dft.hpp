#ifndef CYCLO_DFT_HPP
#define CYCLO_DFT_HPP

#include <complex>
#include <span>
#include <vector>

namespace cyclo {

// Forward DFT: X[t] = sum_m x[m] exp(-2*pi*i*t*m/n). Any length n >= 1.
std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> x);

// Inverse DFT including the 1/n normalisation.
std::vector<std::complex<double>> dft_inverse(std::span<const std::complex<double>> x);

// O(n^2) reference transform, kept as the independent oracle for the
// FFT-backed paths.
std::vector<std::complex<double>> dft_naive(std::span<const std::complex<double>> x);

} // namespace cyclo

#endif
