#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "agpwave/linalg.hpp"
#include "agpwave/rng.hpp"
#include "support/jacobi.hpp"

using namespace agpwave;
using namespace agpwave::linalg;

namespace {

CMat random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  CMat m(r, c);
  for (std::size_t i = 0; i < r * c; ++i) m.data[i] = complex_normal(seed, i);
  return m;
}

std::vector<cd> random_vector(std::size_t n, std::uint64_t seed) {
  std::vector<cd> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = complex_normal(seed, i);
  return v;
}

}  // namespace

TEST_CASE("matvec identity and known values") {
  const CMat eye = CMat::identity(3);
  const auto x = random_vector(3, 1);
  std::vector<cd> y(3);
  matvec(eye, x, y);
  for (int i = 0; i < 3; ++i) CHECK(y[i] == x[i]);

  CMat a(2, 2);
  a(0, 0) = {1, 0};
  a(0, 1) = {0, 1};
  a(1, 0) = {2, 0};
  a(1, 1) = {0, -1};
  std::vector<cd> v = {cd{1, 0}, cd{0, 1}};
  std::vector<cd> w(2);
  matvec(a, v, w);
  CHECK(w[0] == cd{0, 0});  // 1 + i*i
  CHECK(w[1] == cd{3, 0});  // 2 - i*i
}

TEST_CASE("openmp kernels match the serial reference bit for bit") {
  // sizes straddle the parallel cutoff
  for (std::size_t n : {std::size_t{16}, std::size_t{64}, std::size_t{200}}) {
    const CMat a = random_matrix(n, n, 10 + n);
    const CMat b = random_matrix(n, n, 20 + n);
    const auto x = random_vector(n, 30 + n);

    std::vector<cd> y1(n), y2(n);
    matvec(a, x, y1);
    serial::matvec(a, x, y2);
    CHECK(y1 == y2);

    matvec_adjoint(a, x, y1);
    serial::matvec_adjoint(a, x, y2);
    CHECK(y1 == y2);

    CHECK(matmul(a, b).data == serial::matmul(a, b).data);
    CHECK(matmul_adjoint_left(a, b).data == serial::matmul_adjoint_left(a, b).data);

    CMat s1(n, n), s2(n, n);
    add_scaled_outer(s1, x, 2.5);
    serial::add_scaled_outer(s2, x, 2.5);
    CHECK(s1.data == s2.data);
  }
}

TEST_CASE("adjoint kernels agree with explicit conjugate transpose") {
  const CMat a = random_matrix(7, 5, 3);
  const auto x = random_vector(7, 4);
  std::vector<cd> y(5);
  matvec_adjoint(a, x, y);

  CMat ah(5, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 5; ++j) ah(j, i) = std::conj(a(i, j));
  std::vector<cd> y2(5);
  matvec(ah, x, y2);
  for (std::size_t j = 0; j < 5; ++j) CHECK(std::abs(y[j] - y2[j]) < 1e-12);

  const CMat b = random_matrix(7, 4, 5);
  const CMat c1 = matmul_adjoint_left(a, b);
  const CMat c2 = matmul(ah, b);
  for (std::size_t i = 0; i < c1.data.size(); ++i)
    CHECK(std::abs(c1.data[i] - c2.data[i]) < 1e-12);
}

TEST_CASE("cholesky solves HPD systems") {
  const std::size_t n = 24;
  const CMat g = random_matrix(n, n, 7);
  CMat a = matmul_adjoint_left(g, g);
  for (std::size_t i = 0; i < n; ++i) a(i, i) += 1.0;
  hermitize(a);

  const auto b = random_vector(n, 8);
  std::vector<cd> x(b);
  const CMat l = cholesky(a);
  cholesky_solve(l, x);

  std::vector<cd> r(n);
  matvec(a, x, r);
  for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(r[i] - b[i]) < 1e-9);

  // block solve matches the vector solve column by column
  CMat rhs(n, 3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < n; ++i) rhs(i, j) = complex_normal(9 + j, i);
  const CMat xs = cholesky_solve_matrix(l, rhs);
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<cd> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = rhs(i, j);
    cholesky_solve(l, col);
    for (std::size_t i = 0; i < n; ++i) CHECK(xs(i, j) == col[i]);
  }
}

TEST_CASE("cholesky rejects indefinite input") {
  CMat a = CMat::identity(2);
  a(1, 1) = -1.0;
  CHECK_THROWS_AS((void)cholesky(a), std::runtime_error);
}

TEST_CASE("dots, norms, hermitize") {
  std::vector<cd> x = {cd{1, 1}, cd{0, 2}};
  std::vector<cd> y = {cd{2, 0}, cd{1, 0}};
  CHECK(vdot(x, y) == cd{2, -4});
  CHECK(tdot(x, y) == cd{2, 4});
  CHECK(norm2(x) == doctest::Approx(std::sqrt(6.0)));

  CMat a = random_matrix(5, 5, 11);
  hermitize(a);
  CHECK(max_hermitian_asymmetry(a) == 0.0);
}

TEST_CASE("jacobi oracle recovers a planted spectrum") {
  // A = Q diag(d) Q^H, Q unitary via Gram-Schmidt
  const std::size_t n = 8;
  const std::vector<double> planted = {9.5, 7.0, 5.5, 4.0, 2.5, 1.0, 0.5, 0.125};
  CMat q = random_matrix(n, n, 13);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      cd proj = 0.0;
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += std::norm(q(i, j));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= nrm;
  }
  CMat a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cd s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += q(i, k) * planted[k] * std::conj(q(j, k));
      a(i, j) = s;
    }
  hermitize(a);

  const auto eig = testsupport::hermitian_eigenvalues(a);
  REQUIRE(eig.size() == n);
  for (std::size_t k = 0; k < n; ++k)
    CHECK(eig[k] == doctest::Approx(planted[k]).epsilon(1e-10));
}
