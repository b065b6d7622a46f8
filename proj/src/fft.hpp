#pragma once

#include <complex>
#include <span>

namespace xlab::detail {

// In-place unnormalized DFT: sum_j x_j exp(sign * 2*pi*i*j*k/n), sign = -1 or +1.
void fft(std::span<std::complex<double>> data, int sign);

}  // namespace xlab::detail
