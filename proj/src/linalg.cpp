#include "agpwave/linalg.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace agpwave {

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

namespace linalg {
namespace {

// Shared inner routines: the OpenMP kernels distribute whole output elements
// across threads and evaluate each one with these, so serial:: and the
// parallel kernels produce bit-identical results.

inline cd row_dot(const cd* row, const cd* x, std::size_t n) {
  cd acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
  return acc;
}

inline cd col_dot_conj(const cd* base, std::size_t stride, const cd* x, std::size_t n) {
  cd acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(base[i * stride]) * x[i];
  return acc;
}

inline void matmul_row(const CMat& a, const CMat& b, std::size_t i, cd* out) {
  for (std::size_t j = 0; j < b.cols; ++j) out[j] = 0.0;
  for (std::size_t k = 0; k < a.cols; ++k) {
    const cd aik = a(i, k);
    const cd* brow = b.row_ptr(k);
    for (std::size_t j = 0; j < b.cols; ++j) out[j] += aik * brow[j];
  }
}

inline void matmul_adjoint_row(const CMat& a, const CMat& b, std::size_t i, cd* out) {
  for (std::size_t j = 0; j < b.cols; ++j) out[j] = 0.0;
  for (std::size_t k = 0; k < a.rows; ++k) {
    const cd aki = std::conj(a(k, i));
    const cd* brow = b.row_ptr(k);
    for (std::size_t j = 0; j < b.cols; ++j) out[j] += aki * brow[j];
  }
}

inline void outer_row(CMat& a, std::span<const cd> v, double w, std::size_t i) {
  const cd wvi = w * v[i];
  cd* arow = a.row_ptr(i);
  for (std::size_t j = 0; j < a.cols; ++j) arow[j] += wvi * std::conj(v[j]);
}

void check_matvec_dims(const CMat& a, std::size_t nx, std::size_t ny, bool adjoint) {
  const std::size_t want_x = adjoint ? a.rows : a.cols;
  const std::size_t want_y = adjoint ? a.cols : a.rows;
  if (nx != want_x || ny != want_y) throw std::invalid_argument("dimension error");
}

// Entering a parallel region costs microseconds even with an if(false)
// clause on some OpenMP runtimes, so the small-work path must branch around
// the pragma entirely.
inline bool go_parallel(std::size_t work) {
#ifdef _OPENMP
  return work >= kParallelCutoff && omp_get_max_threads() > 1 && !omp_in_parallel();
#else
  (void)work;
  return false;
#endif
}

}  // namespace

void matvec(const CMat& a, std::span<const cd> x, std::span<cd> y) {
  check_matvec_dims(a, x.size(), y.size(), false);
  if (!go_parallel(a.rows * a.cols)) {
    serial::matvec(a, x, y);
    return;
  }
  const long long n = static_cast<long long>(a.rows);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) y[i] = row_dot(a.row_ptr(i), x.data(), a.cols);
}

void matvec_adjoint(const CMat& a, std::span<const cd> x, std::span<cd> y) {
  check_matvec_dims(a, x.size(), y.size(), true);
  if (!go_parallel(a.rows * a.cols)) {
    serial::matvec_adjoint(a, x, y);
    return;
  }
  const long long n = static_cast<long long>(a.cols);
#pragma omp parallel for schedule(static)
  for (long long j = 0; j < n; ++j)
    y[j] = col_dot_conj(a.data.data() + j, a.cols, x.data(), a.rows);
}

CMat matmul(const CMat& a, const CMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("dimension error");
  if (!go_parallel(a.rows * a.cols * b.cols)) return serial::matmul(a, b);
  CMat c(a.rows, b.cols);
  const long long n = static_cast<long long>(a.rows);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) matmul_row(a, b, i, c.row_ptr(i));
  return c;
}

CMat matmul_adjoint_left(const CMat& a, const CMat& b) {
  if (a.rows != b.rows) throw std::invalid_argument("dimension error");
  if (!go_parallel(a.rows * a.cols * b.cols)) return serial::matmul_adjoint_left(a, b);
  CMat c(a.cols, b.cols);
  const long long n = static_cast<long long>(a.cols);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) matmul_adjoint_row(a, b, i, c.row_ptr(i));
  return c;
}

void add_scaled_outer(CMat& a, std::span<const cd> v, double w) {
  if (a.rows != v.size() || a.cols != v.size()) throw std::invalid_argument("dimension error");
  if (!go_parallel(a.rows * a.cols)) {
    serial::add_scaled_outer(a, v, w);
    return;
  }
  const long long n = static_cast<long long>(a.rows);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) outer_row(a, v, w, i);
}

namespace serial {

void matvec(const CMat& a, std::span<const cd> x, std::span<cd> y) {
  check_matvec_dims(a, x.size(), y.size(), false);
  for (std::size_t i = 0; i < a.rows; ++i) y[i] = row_dot(a.row_ptr(i), x.data(), a.cols);
}

void matvec_adjoint(const CMat& a, std::span<const cd> x, std::span<cd> y) {
  check_matvec_dims(a, x.size(), y.size(), true);
  for (std::size_t j = 0; j < a.cols; ++j)
    y[j] = col_dot_conj(a.data.data() + j, a.cols, x.data(), a.rows);
}

CMat matmul(const CMat& a, const CMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("dimension error");
  CMat c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) matmul_row(a, b, i, c.row_ptr(i));
  return c;
}

CMat matmul_adjoint_left(const CMat& a, const CMat& b) {
  if (a.rows != b.rows) throw std::invalid_argument("dimension error");
  CMat c(a.cols, b.cols);
  for (std::size_t i = 0; i < a.cols; ++i) matmul_adjoint_row(a, b, i, c.row_ptr(i));
  return c;
}

void add_scaled_outer(CMat& a, std::span<const cd> v, double w) {
  if (a.rows != v.size() || a.cols != v.size()) throw std::invalid_argument("dimension error");
  for (std::size_t i = 0; i < a.rows; ++i) outer_row(a, v, w, i);
}

}  // namespace serial

cd vdot(std::span<const cd> x, std::span<const cd> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension error");
  cd acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

cd tdot(std::span<const cd> x, std::span<const cd> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension error");
  cd acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

double norm2(std::span<const cd> x) {
  double acc = 0.0;
  for (const cd& v : x) acc += std::norm(v);
  return std::sqrt(acc);
}

double norm2_diff(std::span<const cd> x, std::span<const cd> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension error");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::norm(x[i] - y[i]);
  return std::sqrt(acc);
}

CMat cholesky(const CMat& a) {
  if (a.rows != a.cols) throw std::invalid_argument("dimension error");
  const std::size_t n = a.rows;
  CMat l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > 0.0)) throw std::runtime_error("matrix not positive definite");
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cd s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return l;
}

void cholesky_solve(const CMat& lower, std::span<cd> b) {
  const std::size_t n = lower.rows;
  if (b.size() != n) throw std::invalid_argument("dimension error");
  for (std::size_t i = 0; i < n; ++i) {
    cd s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= lower(i, k) * b[k];
    b[i] = s / lower(i, i).real();
  }
  for (std::size_t ii = n; ii-- > 0;) {
    cd s = b[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= std::conj(lower(k, ii)) * b[k];
    b[ii] = s / lower(ii, ii).real();
  }
}

namespace {
inline void solve_column(const CMat& lower, const CMat& b, CMat& x, std::size_t j) {
  std::vector<cd> col(b.rows);
  for (std::size_t i = 0; i < b.rows; ++i) col[i] = b(i, j);
  cholesky_solve(lower, col);
  for (std::size_t i = 0; i < b.rows; ++i) x(i, j) = col[i];
}
}  // namespace

CMat cholesky_solve_matrix(const CMat& lower, const CMat& b) {
  if (b.rows != lower.rows) throw std::invalid_argument("dimension error");
  CMat x(b.rows, b.cols);
  if (!go_parallel(b.rows * b.rows * b.cols)) {
    for (std::size_t j = 0; j < b.cols; ++j) solve_column(lower, b, x, j);
    return x;
  }
  const long long ncols = static_cast<long long>(b.cols);
#pragma omp parallel for schedule(static)
  for (long long j = 0; j < ncols; ++j) solve_column(lower, b, x, j);
  return x;
}

double max_hermitian_asymmetry(const CMat& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

void hermitize(CMat& a) {
  for (std::size_t i = 0; i < a.rows; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < a.cols; ++j) {
      const cd m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }
}

}  // namespace linalg
}  // namespace agpwave
