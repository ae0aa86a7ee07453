#include "entcert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace entcert {

namespace {

std::string shape_str(const CMat& a) {
  std::ostringstream os;
  os << a.rows() << "x" << a.cols();
  return os.str();
}

void require_same_shape(const CMat& a, const CMat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError(std::string(op) + ": shape mismatch " + shape_str(a) + " vs " + shape_str(b));
}

void require_square(const CMat& a, const char* op) {
  if (!a.is_square()) throw ShapeError(std::string(op) + ": matrix is not square (" + shape_str(a) + ")");
}

double offdiag_norm(const CMat& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing h(p,q). The phase of h(p,q) is first
// absorbed into column q, which reduces the 2x2 problem to a real symmetric
// one, then a standard real rotation is applied.
void rotate(CMat& h, std::size_t p, std::size_t q) {
  const cplx hpq = h(p, q);
  const double mag = std::abs(hpq);
  if (mag == 0.0) return;
  const cplx ph = hpq / mag;  // e^{i phi}
  const double app = h(p, p).real();
  const double aqq = h(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // J = [[c, s], [-conj(ph) s, conj(ph) c]] acting on columns (p, q).
  const cplx jqp = -std::conj(ph) * s;
  const cplx jqq = std::conj(ph) * c;
  const std::size_t n = h.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx hkp = h(k, p);
    const cplx hkq = h(k, q);
    h(k, p) = c * hkp + jqp * hkq;
    h(k, q) = s * hkp + jqq * hkq;
  }
  // Rows with J^dagger.
  for (std::size_t k = 0; k < n; ++k) {
    const cplx hpk = h(p, k);
    const cplx hqk = h(q, k);
    h(p, k) = c * hpk + std::conj(jqp) * hqk;
    h(q, k) = s * hpk + std::conj(jqq) * hqk;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = app - t * mag;
  h(q, q) = aqq + t * mag;
}

}  // namespace

CMat::CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw ShapeError("CMat: dimensions must be positive");
}

CMat::CMat(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw ShapeError("CMat: dimensions must be positive");
  if (data_.size() != rows * cols)
    throw ShapeError("CMat: expected " + std::to_string(rows * cols) + " entries, got " +
                     std::to_string(data_.size()));
  if (!all_finite()) throw ValidationError("CMat: non-finite entry");
}

CMat::CMat(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  if (rows_ == 0 || cols_ == 0) throw ShapeError("CMat: dimensions must be positive");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("CMat: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::diagonal(std::span<const double> values) {
  CMat m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMat CMat::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw ShapeError("CMat::block: out of range");
  CMat b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void CMat::set_block(std::size_t r0, std::size_t c0, const CMat& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw ShapeError("CMat::set_block: out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool CMat::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

CMat& CMat::operator+=(const CMat& o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMat& CMat::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMat operator+(CMat a, const CMat& b) { return a += b; }
CMat operator-(CMat a, const CMat& b) { return a -= b; }
CMat operator*(CMat a, cplx s) { return a *= s; }
CMat operator*(cplx s, CMat a) { return a *= s; }
CMat operator*(const CMat& a, const CMat& b) { return matmul(a, b); }

CMat matmul(const CMat& a, const CMat& b) {
  if (a.cols() != b.rows())
    throw ShapeError("matmul: inner dimensions differ (" + shape_str(a) + " * " + shape_str(b) + ")");
  CMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

CMat adjoint(const CMat& a) {
  CMat r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

CMat transpose(const CMat& a) {
  CMat r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

std::vector<cplx> matvec(const CMat& a, std::span<const cplx> v) {
  if (v.size() != a.cols()) throw ShapeError("matvec: vector length does not match columns");
  std::vector<cplx> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

cplx trace(const CMat& a) {
  require_square(a, "trace");
  cplx t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const CMat& a) {
  double s = 0.0;
  for (const auto& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs_diff(const CMat& a, const CMat& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double hermiticity_defect(const CMat& a) {
  require_square(a, "hermiticity_defect");
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
  return std::sqrt(s);
}

CMat hermitian_part(const CMat& a) {
  require_square(a, "hermitian_part");
  CMat h(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    h(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      const cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

std::vector<double> hermitian_eigenvalues(const CMat& a, double hermitian_tol) {
  JacobiOptions opts;
  opts.hermitian_tol = hermitian_tol;
  return hermitian_eigenvalues(a, opts);
}

std::vector<double> hermitian_eigenvalues(const CMat& a, const JacobiOptions& opts) {
  require_square(a, "hermitian_eigenvalues");
  if (!a.all_finite()) throw ValidationError("hermitian_eigenvalues: non-finite entry");
  const double norm = frobenius_norm(a);
  const double defect = hermiticity_defect(a);
  if (defect > opts.hermitian_tol * std::max(1.0, norm)) {
    std::ostringstream os;
    os << "hermitian_eigenvalues: matrix is not Hermitian (||A - A^dagger||_F = " << defect << ")";
    throw ValidationError(os.str());
  }

  CMat h = hermitian_part(a);
  const std::size_t n = h.rows();
  std::vector<double> ev(n, 0.0);
  if (norm == 0.0) return ev;

  const double loose = opts.offdiag_tol * norm;
  const double strict = 4.0 * std::numeric_limits<double>::epsilon() * norm;
  double off = offdiag_norm(h);
  double prev = std::numeric_limits<double>::infinity();
  int sweep = 0;
  // Sweep past the nominal target until rounding level or stagnation; the
  // extra sweeps are cheap once convergence is quadratic.
  while (off > strict && !(off <= loose && off >= prev)) {
    if (sweep == opts.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(h, p, q);
    ++sweep;
    prev = off;
    off = offdiag_norm(h);
  }
  if (off > loose) {
    std::ostringstream os;
    os << "hermitian_eigenvalues: no convergence after " << sweep << " sweeps (off-diagonal norm " << off << ")";
    throw ConvergenceError(os.str());
  }

  for (std::size_t i = 0; i < n; ++i) ev[i] = h(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

// One-sided (Hestenes) Jacobi: rotate column pairs of A until all columns
// are mutually orthogonal; the column norms are then the singular values.
// Unlike sqrt(eig(A^dagger A)), zero singular values come out at rounding
// level eps*||A|| rather than sqrt(eps)*||A||.
std::vector<double> singular_values(const CMat& a) {
  CMat w = a.rows() < a.cols() ? adjoint(a) : a;
  const std::size_t m = w.rows(), n = w.cols();
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxSweeps = 100;

  auto col_dot = [&](std::size_t p, std::size_t q) {
    cplx g{};
    for (std::size_t i = 0; i < m; ++i) g += std::conj(w(i, p)) * w(i, q);
    return g;
  };

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = col_dot(p, p).real();
        const double beta = col_dot(q, q).real();
        const cplx g = col_dot(p, q);
        const double mag = std::abs(g);
        if (mag == 0.0 || mag <= static_cast<double>(m) * kEps * std::sqrt(alpha * beta)) continue;
        converged = false;
        const cplx ph = g / mag;
        const double zeta = (beta - alpha) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const cplx xp = w(i, p);
          const cplx xq = w(i, q) * std::conj(ph);
          w(i, p) = c * xp - s * xq;
          w(i, q) = s * xp + c * xq;
        }
      }
  }
  if (!converged) throw ConvergenceError("singular_values: one-sided Jacobi did not converge");

  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) sv[j] = std::sqrt(col_dot(j, j).real());
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

cplx determinant(const CMat& a) {
  require_square(a, "determinant");
  CMat lu = a;
  const std::size_t n = lu.rows();
  cplx det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        piv = i;
      }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx f = lu(i, k) / lu(k, k);
      if (f == cplx{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return det;
}

}  // namespace entcert
