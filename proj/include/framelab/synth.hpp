// Deterministic, seed-driven test signals: smooth compactly supported
// signals for the time-localized frames and band-limited members of the
// Hardy-type subspace for the frequency-localized ones.

#pragma once

#include <cstdint>

#include "framelab/numerics.hpp"

namespace framelab {

/// C-infinity bump, 1 at t = 0, support (-1, 1).
double smooth_bump(double t);

/// Random trigonometric polynomial under a smooth bump supported in
/// [-halfwidth, halfwidth]; unit norm.
SampledSignal random_compact_signal(const Grid& grid, double halfwidth,
                                    std::uint64_t seed, int terms = 6);

/// Mixture of a few mildly modulated random Gaussians under a 6-sigma-cut
/// envelope, supported in [-halfwidth, halfwidth]; unit norm.  Spectrally
/// much tamer than random_compact_signal, which matters for the chirped
/// eps = 1 frames.
SampledSignal random_gaussian_mix_signal(const Grid& grid, double halfwidth,
                                         std::uint64_t seed, int terms = 4);

/// Spectrum = smooth bump on [w_lo, w_hi] times a random trigonometric
/// profile; the result lies in the Hardy-type subspace, unit norm.
SampledSignal random_bandlimited_signal(const Grid& grid, double w_lo, double w_hi,
                                        std::uint64_t seed, int terms = 6);

/// Unit-norm Gaussian pi^{-1/4} e^{-x^2/2}.
SampledSignal gaussian_signal(const Grid& grid);

}  // namespace framelab
