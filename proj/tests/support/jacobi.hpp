#pragma once

// Dense eigensolver oracle for Hermitian matrices: cyclic complex Jacobi
// sweeps. Independent of the library's power iteration; used to check
// eigenvalue claims (PSD/NSD, dominant eigenvalue) in tests.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "agpwave/linalg.hpp"

namespace testsupport {

inline std::vector<double> hermitian_eigenvalues(agpwave::CMat a) {
  using agpwave::cd;
  if (a.rows != a.cols) throw std::invalid_argument("square matrix required");
  const std::size_t n = a.rows;

  double fro = 0.0;
  for (const cd& v : a.data) fro += std::norm(v);
  fro = std::sqrt(fro);
  const double stop = 1e-13 * std::max(fro, 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(2.0 * off) <= stop) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cd apq = a(p, q);
        const double b = std::abs(apq);
        if (b <= 1e-300) continue;

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (app - aqq) / (2.0 * b);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cd epos = apq / b;           // e^{i phi}
        const cd eneg = std::conj(epos);   // e^{-i phi}

        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const cd aip = a(i, p);
          const cd aiq = a(i, q);
          a(i, p) = c * aip + s * eneg * aiq;
          a(i, q) = -s * epos * aip + c * aiq;
          a(p, i) = std::conj(a(i, p));
          a(q, i) = std::conj(a(i, q));
        }
        a(p, p) = app + t * b;
        a(q, q) = aqq - t * b;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  return eig;
}

}  // namespace testsupport
