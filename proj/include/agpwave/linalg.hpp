#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace agpwave {

using cd = std::complex<double>;

// Dense row-major complex matrix.
struct CMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cd> data;

  CMat() = default;
  CMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  cd& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  cd operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  cd* row_ptr(std::size_t i) { return data.data() + i * cols; }
  const cd* row_ptr(std::size_t i) const { return data.data() + i * cols; }

  static CMat identity(std::size_t n);
};

namespace linalg {

// Inputs below this many scalar multiply-adds take the serial path; OpenMP
// fork/join overhead dominates under it.
inline constexpr std::size_t kParallelCutoff = 16384;

void matvec(const CMat& a, std::span<const cd> x, std::span<cd> y);          // y = A x
void matvec_adjoint(const CMat& a, std::span<const cd> x, std::span<cd> y);  // y = A^H x
CMat matmul(const CMat& a, const CMat& b);                                   // A B
CMat matmul_adjoint_left(const CMat& a, const CMat& b);                      // A^H B
void add_scaled_outer(CMat& a, std::span<const cd> v, double w);             // A += w v v^H

cd vdot(std::span<const cd> x, std::span<const cd> y);  // x^H y
cd tdot(std::span<const cd> x, std::span<const cd> y);  // x^T y, no conjugate
double norm2(std::span<const cd> x);
double norm2_diff(std::span<const cd> x, std::span<const cd> y);

// Lower-triangular Cholesky factor of a Hermitian positive-definite matrix.
// Throws std::runtime_error if a pivot is not strictly positive.
CMat cholesky(const CMat& a);
void cholesky_solve(const CMat& lower, std::span<cd> b);       // A x = b, in place
CMat cholesky_solve_matrix(const CMat& lower, const CMat& b);  // A X = B

double max_hermitian_asymmetry(const CMat& a);  // max_ij |a_ij - conj(a_ji)|
void hermitize(CMat& a);                        // a <- (a + a^H) / 2

// Plain-loop reference kernels. They share the per-row inner routines with
// the OpenMP kernels above, so outputs match bit for bit; tests assert the
// equality and tools/bench_kernels compares throughput.
namespace serial {
void matvec(const CMat& a, std::span<const cd> x, std::span<cd> y);
void matvec_adjoint(const CMat& a, std::span<const cd> x, std::span<cd> y);
CMat matmul(const CMat& a, const CMat& b);
CMat matmul_adjoint_left(const CMat& a, const CMat& b);
void add_scaled_outer(CMat& a, std::span<const cd> v, double w);
}  // namespace serial

}  // namespace linalg
}  // namespace agpwave
