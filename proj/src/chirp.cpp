#include "agpwave/chirp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace agpwave {

ReferenceWaveform chirp_reference(int num_tx, int num_samples) {
  if (num_tx < 1 || num_samples < 1)
    throw std::invalid_argument("sizes must be positive");
  if (num_tx > num_samples) throw std::invalid_argument("orthogonality unavailable");

  const double nd = static_cast<double>(num_samples);
  const double amp = constant_modulus_amplitude(num_tx * num_samples);

  ReferenceWaveform out;
  out.matrix = CMat(num_tx, num_samples);
  out.vector.resize(static_cast<std::size_t>(num_tx) * num_samples);
  for (int k = 1; k <= num_tx; ++k) {
    for (int n = 1; n <= num_samples; ++n) {
      const double phase = 2.0 * std::numbers::pi * k * (n - 1) / nd +
                           std::numbers::pi * (n - 1) * (n - 1) / nd;
      const cd v = std::polar(amp, phase);
      out.matrix(k - 1, n - 1) = v;
      out.vector[static_cast<std::size_t>(n - 1) * num_tx + (k - 1)] = v;
    }
  }
  return out;
}

}  // namespace agpwave
