#pragma once

#include <complex>
#include <span>

namespace modspace {

/// In-place unnormalised DFT of power-of-two length.
/// Forward: X_k = sum_j x_j e^{-2 pi i jk/n}; backward uses e^{+2 pi i jk/n}.
/// Plans are cached per length; execution is thread-safe.
void dft_forward(std::span<std::complex<double>> data);
void dft_backward(std::span<std::complex<double>> data);

}  // namespace modspace
