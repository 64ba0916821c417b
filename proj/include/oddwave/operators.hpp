#pragma once

#include "oddwave/spectral_field.hpp"

namespace oddwave {

// Fourier realizations of the nonlocal operators on the torus. Every
// operator acts mode by mode except multiply(), which evaluates the product
// on a zero-padded grid large enough that no aliased mode lands in 0..N.

/// Periodic Hilbert transform: cos(kx) -> sin(kx), sin(kx) -> -cos(kx),
/// constants -> 0. Swaps even and odd parity.
SpectralField hilbert(const SpectralField& f);

/// Zygmund operator Lambda = H d/dx, the Fourier multiplier |k|.
SpectralField zygmund(const SpectralField& f);

/// d^order/dx^order for order in {1, 2, 3}.
SpectralField derivative(const SpectralField& f, int order);

/// Pointwise product truncated to max(N_f, N_g) modes. Exact: the product
/// is formed on a grid of at least N_f + N_g + N + 1 points.
SpectralField multiply(const SpectralField& f, const SpectralField& g);

/// [[H, f]][g] = H(f g) - f H(g).
SpectralField commutator_h(const SpectralField& f, const SpectralField& g);

/// x -> f(x - shift), applied as an exact phase rotation per mode.
SpectralField translate(const SpectralField& f, double shift);

/// max |f| sampled on a grid oversampled by the given factor.
double sup_norm(const SpectralField& f, int oversample = 4);

}  // namespace oddwave
