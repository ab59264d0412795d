#pragma once

#include "agpwave/scene.hpp"

namespace agpwave {

struct ReferenceWaveform {
  CMat matrix;      // Nt x N, rows mutually orthogonal when Nt <= N
  Waveform vector;  // columns stacked, sample-major
};

// Orthogonal chirp reference: entry (k, n), 1-based, is
// exp(i 2 pi k (n-1) / N) * exp(i pi (n-1)^2 / N) / sqrt(Nt N).
// Requires 1 <= num_tx <= num_samples.
ReferenceWaveform chirp_reference(int num_tx, int num_samples);

}  // namespace agpwave
