#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "entcert/errors.hpp"

namespace entcert {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Every numeric object in the library
/// (states, map outputs, realigned matrices, Hankel matrices) is a CMat.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols);
  CMat(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  CMat(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMat identity(std::size_t n);
  static CMat zeros(std::size_t rows, std::size_t cols) { return CMat(rows, cols); }
  static CMat diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const cplx> data() const { return data_; }
  std::span<cplx> data() { return data_; }

  /// Copy of the (rows x cols) sub-matrix starting at (r0, c0).
  CMat block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const CMat& b);

  bool all_finite() const;

  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  CMat& operator*=(cplx s);

  friend bool operator==(const CMat&, const CMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
CMat operator*(CMat a, cplx s);
CMat operator*(cplx s, CMat a);
CMat operator*(const CMat& a, const CMat& b);

CMat matmul(const CMat& a, const CMat& b);
CMat adjoint(const CMat& a);
CMat transpose(const CMat& a);
CMat kron(const CMat& a, const CMat& b);
std::vector<cplx> matvec(const CMat& a, std::span<const cplx> v);

cplx trace(const CMat& a);
double frobenius_norm(const CMat& a);
/// max |a_ij - b_ij|
double max_abs_diff(const CMat& a, const CMat& b);

/// Frobenius norm of A - A^dagger.
double hermiticity_defect(const CMat& a);
/// (A + A^dagger) / 2
CMat hermitian_part(const CMat& a);

constexpr double kDefaultHermitianTol = 1e-9;

struct JacobiOptions {
  double hermitian_tol = kDefaultHermitianTol;
  /// Convergence target for the off-diagonal Frobenius norm, relative to ||A||_F.
  double offdiag_tol = 1e-12;
  int max_sweeps = 100;
};

/// Eigenvalues of a Hermitian matrix, ascending, by cyclic complex Jacobi
/// rotations. Throws ValidationError if ||A - A^dagger||_F exceeds
/// tol * max(1, ||A||_F) and ConvergenceError if the off-diagonal mass is
/// not driven below offdiag_tol * ||A||_F within max_sweeps.
std::vector<double> hermitian_eigenvalues(const CMat& a, const JacobiOptions& opts = {});
std::vector<double> hermitian_eigenvalues(const CMat& a, double hermitian_tol);

/// Singular values, descending, by one-sided Jacobi on the taller of A and
/// A^dagger. Returns min(rows, cols) values.
std::vector<double> singular_values(const CMat& a);

/// LU with partial pivoting.
cplx determinant(const CMat& a);

}  // namespace entcert
