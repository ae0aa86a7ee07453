#pragma once

#include <span>
#include <vector>

#include "entcert/bipartite.hpp"
#include "entcert/linalg.hpp"

namespace entcert {

/// Power sums T_1..T_kmax of a spectrum. Index with T(k), k >= 1.
class MomentVector {
 public:
  MomentVector() = default;
  explicit MomentVector(std::vector<double> values) : values_(std::move(values)) {}

  std::size_t kmax() const { return values_.size(); }
  double T(std::size_t k) const;
  const std::vector<double>& values() const { return values_; }

  /// Moments of the spectrum scaled by 1/c: T_k / c^k.
  MomentVector scaled(double c) const;

 private:
  std::vector<double> values_;
};

/// Coefficients D_1..D_d of det(lambda I - M) = lambda^d + D_1 lambda^(d-1) + ... + D_d.
class CharPolyCoeffs {
 public:
  CharPolyCoeffs() = default;
  explicit CharPolyCoeffs(std::vector<double> values) : values_(std::move(values)) {}

  std::size_t degree() const { return values_.size(); }
  double D(std::size_t i) const;
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

constexpr double kMomentImagTol = 1e-10;

MomentVector moments_from_spectrum(std::span<const double> eigenvalues, std::size_t kmax);

/// T_k = sum_i lambda_i^k over the eigenvalues of Hermitian M, 1 <= kmax <= dim.
MomentVector moments(const CMat& m, std::size_t kmax);

/// Moments of the partial transpose, p_k.
MomentVector pt_moments(const BipartiteState& s, std::size_t kmax);

/// r_k = sum_i sigma_i^k over the singular values of realign(s),
/// 1 <= kmax <= dimA * dimB.
MomentVector realignment_moments(const BipartiteState& s, std::size_t kmax);

/// Newton-identity recursion D_k = -(1/k) (T_k + sum_{j<k} D_j T_{k-j}).
CharPolyCoeffs charpoly_coeffs(const MomentVector& t, std::size_t d);

/// D_i from the banded determinant
///
///          | T1  T2  T3  ...  Ti   |
///          | 1   T1  T2  ...  Ti-1 |
///   (-1)^i | 0   2   T1  ...  Ti-2 |  / i!
///          | ...                   |
///          | 0   0   ... i-1  T1   |
///
/// Kept as an independent cross-check of the recursion; i <= 12.
double charpoly_coeff_det(const MomentVector& t, std::size_t i);

/// (l+1) x (l+1) Hankel matrix with entry (i, j) = p_{i+j+1}, i, j from 0.
CMat hankel_matrix(const MomentVector& p, std::size_t l);

}  // namespace entcert
