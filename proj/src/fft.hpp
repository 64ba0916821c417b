#pragma once

#include <complex>
#include <span>

namespace oddwave::detail {

// Unnormalized real transforms of length n backed by cached FFTW plans.
// Planning is serialized; execution uses the new-array interface and is
// safe to call concurrently.

/// out[k] = sum_j in[j] exp(-2 pi i j k / n), k = 0..n/2.
void forward_real(std::span<const double> in, std::span<std::complex<double>> out);

/// out[j] = sum_k in[k] exp(2 pi i j k / n) over the Hermitian extension.
void inverse_real(std::span<const std::complex<double>> in, std::span<double> out);

}  // namespace oddwave::detail
