#include "agpwave/scene.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "agpwave/rng.hpp"

namespace agpwave {

using linalg::vdot;
using linalg::tdot;

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

void Scene::validate() const {
  if (num_tx < 1) throw std::invalid_argument("numTx must be positive");
  if (num_rx < 1) throw std::invalid_argument("numRx must be positive");
  if (num_samples < 1) throw std::invalid_argument("numSamples must be positive");
  if (!(target_angle_rad > -kHalfPi && target_angle_rad < kHalfPi))
    throw std::invalid_argument("targetAngle must lie in (-90, 90) degrees");
  if (!(target_power_ratio > 0.0))
    throw std::invalid_argument("targetPower must be positive");
  for (const ClutterSource& c : clutter) {
    if (!(c.angle_rad > -kHalfPi && c.angle_rad < kHalfPi))
      throw std::invalid_argument("clutter angle must lie in (-90, 90) degrees");
    if (!(c.power_ratio > 0.0))
      throw std::invalid_argument("clutter power must be positive");
  }
}

double constant_modulus_amplitude(int tx_dim) {
  return 1.0 / std::sqrt(static_cast<double>(tx_dim));
}

double max_modulus_deviation(std::span<const cd> t) {
  const double amp = constant_modulus_amplitude(static_cast<int>(t.size()));
  double worst = 0.0;
  for (const cd& v : t) worst = std::max(worst, std::abs(std::abs(v) - amp));
  return worst;
}

std::vector<cd> steering_vector(double angle_rad, int num_elements) {
  if (num_elements < 1) throw std::invalid_argument("steering vector needs >= 1 element");
  std::vector<cd> a(num_elements);
  const double phase_step = std::numbers::pi * std::sin(angle_rad);
  for (int k = 0; k < num_elements; ++k) a[k] = std::polar(1.0, phase_step * k);
  return a;
}

CMat steering_matrix(double angle_rad, const Scene& scene) {
  scene.validate();
  const auto at = steering_vector(angle_rad, scene.num_tx);
  const auto ar = steering_vector(angle_rad, scene.num_rx);
  CMat m(scene.rx_dim(), scene.tx_dim());
  for (int n = 0; n < scene.num_samples; ++n)
    for (int i = 0; i < scene.num_rx; ++i)
      for (int j = 0; j < scene.num_tx; ++j)
        m(n * scene.num_rx + i, n * scene.num_tx + j) = ar[i] * at[j];
  return m;
}

std::vector<cd> apply_steering(double angle_rad, const Scene& scene, std::span<const cd> t) {
  if (t.size() != static_cast<std::size_t>(scene.tx_dim()))
    throw std::invalid_argument("dimension error");
  const auto at = steering_vector(angle_rad, scene.num_tx);
  const auto ar = steering_vector(angle_rad, scene.num_rx);
  std::vector<cd> y(scene.rx_dim());
  for (int n = 0; n < scene.num_samples; ++n) {
    // s = a_t^T t_n (no conjugate), block output a_r * s
    cd s = 0.0;
    for (int j = 0; j < scene.num_tx; ++j) s += at[j] * t[n * scene.num_tx + j];
    for (int i = 0; i < scene.num_rx; ++i) y[n * scene.num_rx + i] = ar[i] * s;
  }
  return y;
}

CMat clutter_covariance(std::span<const cd> t, const Scene& scene) {
  if (t.size() != static_cast<std::size_t>(scene.tx_dim()))
    throw std::invalid_argument("dimension error");
  CMat s(scene.rx_dim(), scene.rx_dim());
  for (const ClutterSource& c : scene.clutter) {
    const auto u = apply_steering(c.angle_rad, scene, t);
    linalg::add_scaled_outer(s, u, c.power_ratio);
  }
  return s;
}

namespace {

// Cholesky factor of S(t) + I.
CMat interference_factor(std::span<const cd> t, const Scene& scene) {
  CMat a = clutter_covariance(t, scene);
  for (int i = 0; i < scene.rx_dim(); ++i) a(i, i) += 1.0;
  return linalg::cholesky(a);
}

}  // namespace

std::vector<cd> optimal_filter(std::span<const cd> t, const Scene& scene) {
  const auto u0 = apply_steering(scene.target_angle_rad, scene, t);
  const CMat l = interference_factor(t, scene);
  std::vector<cd> f(u0);
  linalg::cholesky_solve(l, f);

  // residual check: (S + I) f should reproduce u0
  std::vector<cd> r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (const ClutterSource& c : scene.clutter) {
    const auto um = apply_steering(c.angle_rad, scene, t);
    const cd w = c.power_ratio * vdot(um, f);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += um[i] * w;
  }
  const double unorm = linalg::norm2(u0);
  if (linalg::norm2_diff(r, u0) > 1e-8 * std::max(1.0, unorm))
    throw std::runtime_error("filter solve residual exceeds tolerance");
  return f;
}

double sinr(std::span<const cd> t, std::span<const cd> f, const Scene& scene) {
  if (f.size() != static_cast<std::size_t>(scene.rx_dim()))
    throw std::invalid_argument("dimension error");
  const double fnorm2 = linalg::norm2(f);
  if (fnorm2 == 0.0) throw std::invalid_argument("degenerate filter");

  const auto u0 = apply_steering(scene.target_angle_rad, scene, t);
  const double num = scene.target_power_ratio * std::norm(vdot(f, u0));
  double den = fnorm2 * fnorm2;
  for (const ClutterSource& c : scene.clutter) {
    const auto um = apply_steering(c.angle_rad, scene, t);
    den += c.power_ratio * std::norm(vdot(f, um));
  }
  return num / den;
}

CMat psi_matrix(std::span<const cd> t, const Scene& scene) {
  const CMat m0 = steering_matrix(scene.target_angle_rad, scene);
  const CMat l = interference_factor(t, scene);
  const CMat x = linalg::cholesky_solve_matrix(l, m0);
  CMat psi = linalg::matmul_adjoint_left(m0, x);
  linalg::hermitize(psi);
  return psi;
}

MonteCarloResult simulate_receive(std::span<const cd> t, std::span<const cd> f,
                                  const Scene& scene, std::uint64_t seed, int draws) {
  if (draws < 100) throw std::invalid_argument("insufficient draws");
  if (f.size() != static_cast<std::size_t>(scene.rx_dim()))
    throw std::invalid_argument("dimension error");

  const auto u0 = apply_steering(scene.target_angle_rad, scene, t);
  const std::size_t m = scene.clutter.size();
  std::vector<std::vector<cd>> um(m);
  std::vector<double> amp(m);
  for (std::size_t i = 0; i < m; ++i) {
    um[i] = apply_steering(scene.clutter[i].angle_rad, scene, t);
    amp[i] = std::sqrt(scene.clutter[i].power_ratio);
  }
  const double amp0 = std::sqrt(scene.target_power_ratio);
  const std::size_t dim = f.size();
  const std::uint64_t stride = 1 + m + dim;

  std::vector<double> sig_pow(draws), int_pow(draws);
#pragma omp parallel for schedule(static)
  for (long long d = 0; d < draws; ++d) {
    const std::uint64_t base = static_cast<std::uint64_t>(d) * stride;
    std::vector<cd> r(dim, cd{0.0, 0.0});

    const cd a0 = amp0 * complex_normal(seed, base);
    for (std::size_t i = 0; i < dim; ++i) r[i] = a0 * u0[i];
    const cd sig = vdot(f, r);

    for (std::size_t i = 0; i < dim; ++i) r[i] = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const cd aj = amp[j] * complex_normal(seed, base + 1 + j);
      for (std::size_t i = 0; i < dim; ++i) r[i] += aj * um[j][i];
    }
    for (std::size_t i = 0; i < dim; ++i) r[i] += complex_normal(seed, base + 1 + m + i);
    const cd intn = vdot(f, r);

    sig_pow[d] = std::norm(sig);
    int_pow[d] = std::norm(intn);
  }

  double smean = 0.0, imean = 0.0;
  for (int d = 0; d < draws; ++d) {
    smean += sig_pow[d];
    imean += int_pow[d];
  }
  smean /= draws;
  imean /= draws;

  double svar = 0.0, ivar = 0.0;
  for (int d = 0; d < draws; ++d) {
    svar += (sig_pow[d] - smean) * (sig_pow[d] - smean);
    ivar += (int_pow[d] - imean) * (int_pow[d] - imean);
  }
  svar /= (draws - 1);
  ivar /= (draws - 1);

  MonteCarloResult out;
  out.empirical_sinr = smean / imean;
  // delta-method variance of the ratio of independent means
  const double n = static_cast<double>(draws);
  out.std_error = std::sqrt(svar / (n * imean * imean) +
                            smean * smean * ivar / (n * imean * imean * imean * imean));
  return out;
}

}  // namespace agpwave
