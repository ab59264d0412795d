#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "agpwave/linalg.hpp"

namespace agpwave {

// Length Nt*N complex vector, sample-major: entries [n*Nt, (n+1)*Nt) hold the
// n-th sample across the Nt transmit antennas.
using Waveform = std::vector<cd>;

struct ClutterSource {
  double angle_rad = 0.0;
  double power_ratio = 1.0;  // E|alpha_m|^2 relative to the unit noise floor
};

// Colocated narrowband MIMO scene. Noise power is fixed to 1 internally;
// target/clutter powers are linear ratios to it. Angles in (-pi/2, pi/2).
struct Scene {
  int num_tx = 1;
  int num_rx = 1;
  int num_samples = 1;
  double target_angle_rad = 0.0;
  double target_power_ratio = 1.0;  // sigma
  std::vector<ClutterSource> clutter;

  int tx_dim() const { return num_tx * num_samples; }
  int rx_dim() const { return num_rx * num_samples; }
  void validate() const;  // throws std::invalid_argument naming the bad field
};

// Half-wavelength ULA steering vector, entry k = exp(i*pi*k*sin(angle)).
std::vector<cd> steering_vector(double angle_rad, int num_elements);

// Full (Nr*N) x (Nt*N) steering matrix: block-diagonal with N copies of the
// rank-1 outer product a_r(angle) a_t(angle)^T.
CMat steering_matrix(double angle_rad, const Scene& scene);

// M(angle) t using the block structure, without forming the matrix.
std::vector<cd> apply_steering(double angle_rad, const Scene& scene, std::span<const cd> t);

// Signal-dependent clutter covariance: sum_m I_m (M_m t)(M_m t)^H.
CMat clutter_covariance(std::span<const cd> t, const Scene& scene);

// Receive filter maximizing SINR for the given waveform.
std::vector<cd> optimal_filter(std::span<const cd> t, const Scene& scene);

// sigma |f^H M0 t|^2 / (f^H S f + f^H f); throws on a zero filter.
double sinr(std::span<const cd> t, std::span<const cd> f, const Scene& scene);

// M0^H (S + I)^{-1} M0, Hermitian positive semidefinite.
CMat psi_matrix(std::span<const cd> t, const Scene& scene);

struct MonteCarloResult {
  double empirical_sinr = 0.0;
  double std_error = 0.0;
};

// Simulated receive chain: target/clutter amplitudes drawn as circular
// complex Gaussians with the scene's second moments (a distributional
// assumption; only the moments are part of the model), noise at the unit
// floor. Deterministic per seed for any thread count. draws >= 100.
MonteCarloResult simulate_receive(std::span<const cd> t, std::span<const cd> f,
                                  const Scene& scene, std::uint64_t seed, int draws);

double constant_modulus_amplitude(int tx_dim);        // 1/sqrt(Nt*N)
double max_modulus_deviation(std::span<const cd> t);  // max_k ||t_k| - amp|

}  // namespace agpwave
