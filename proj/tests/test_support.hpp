#pragma once

// Generators and independent reference computations shared by the suites.
// Nothing here calls the eigensolver or the Newton recursion under test.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "entcert/linalg.hpp"

namespace entcert::testing {

inline CMat random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMat m(rows, cols);
  for (auto& z : m.data()) z = {g(rng), g(rng)};
  return m;
}

/// H = (X + X^dagger) / 2, Hermitian by construction.
inline CMat random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const CMat x = random_matrix(n, n, rng);
  return (x + adjoint(x)) * 0.5;
}

/// Unitary from Gram-Schmidt on the columns of a random matrix.
inline CMat random_unitary(std::size_t n, std::mt19937_64& rng) {
  CMat q = random_matrix(n, n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      cplx dot{};
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += std::norm(q(i, j));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= nrm;
  }
  return q;
}

/// U diag(lambda) U^dagger with a known spectrum.
inline CMat hermitian_with_spectrum(const std::vector<double>& lambda, std::mt19937_64& rng) {
  const CMat u = random_unitary(lambda.size(), rng);
  return u * CMat::diagonal(lambda) * adjoint(u);
}

/// Tr(M^k) by repeated multiplication.
inline cplx power_trace(const CMat& m, int k) {
  CMat p = m;
  for (int i = 1; i < k; ++i) p = p * m;
  return trace(p);
}

/// Coefficients D_1..D_d of prod_i (x - lambda_i), by direct polynomial
/// multiplication.
inline std::vector<double> charpoly_from_roots(const std::vector<double>& roots) {
  std::vector<double> c{1.0};  // c[k] multiplies x^(deg-k)
  for (double r : roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k];
      next[k + 1] -= r * c[k];
    }
    c = std::move(next);
  }
  return {c.begin() + 1, c.end()};
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

/// Singular values of realign(rho(a)) for the 3x3 PPT family, worked out by
/// hand from the block structure of the realigned matrix: a 3x3 circulant on
/// indices {0,4,8} with rows (1, a, 2), three all-ones 2x2 blocks, and zeros.
inline std::vector<double> ppt_family_realigned_sv(double a) {
  const double s = 1.0 / (3.0 * (3.0 + a));
  const double c = std::sqrt(a * a - 3.0 * a + 3.0);
  return {(3.0 + a) * s, 2 * s, 2 * s, 2 * s, c * s, c * s, 0.0, 0.0, 0.0};
}

/// Spectrum of (I x Gamma)(rho(a)), by hand from its invariant subspaces:
/// {0,4,8} gives a-1 and a+2 (twice); the pairs (1,3), (2,6), (5,7) each give
/// the eigenvalues of [[a+2, -1], [-1, 3]].
inline std::vector<double> ppt_family_gamma_spectrum(double a) {
  const double s = 1.0 / (6.0 * (3.0 + a));
  const double disc = std::sqrt((a - 1.0) * (a - 1.0) + 4.0);
  const double up = 0.5 * (a + 5.0 + disc), dn = 0.5 * (a + 5.0 - disc);
  return {(a - 1) * s, (a + 2) * s, (a + 2) * s, up * s, up * s, up * s, dn * s, dn * s, dn * s};
}

}  // namespace entcert::testing
