#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ersim/grid.hpp"

namespace ersim::fft {

/// Forward transform of a complex array on the grid; output is normalised so
/// that out[k] is the Fourier coefficient c_k in v(x) = sum_k c_k e^{2pi i k.x}.
void forward(const Grid& g, const std::complex<double>* in, std::complex<double>* out);

/// Inverse (synthesis) transform, the exact inverse of forward().
void inverse(const Grid& g, const std::complex<double>* in, std::complex<double>* out);

/// Forward transform of real samples to Fourier coefficients.
std::vector<std::complex<double>> forward_real(const Grid& g, std::span<const double> values);

/// Synthesis of real samples from Hermitian coefficients (real part taken).
std::vector<double> inverse_to_real(const Grid& g, std::span<const std::complex<double>> coef);

} // namespace ersim::fft
