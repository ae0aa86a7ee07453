#include "entcert/spectra.hpp"

#include <cmath>
#include <sstream>

namespace entcert {

double MomentVector::T(std::size_t k) const {
  if (k == 0 || k > values_.size())
    throw ArgumentError("moment T_" + std::to_string(k) + " requested, have T_1..T_" + std::to_string(values_.size()));
  return values_[k - 1];
}

MomentVector MomentVector::scaled(double c) const {
  std::vector<double> out(values_.size());
  double ck = 1.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    ck *= c;
    out[k] = values_[k] / ck;
  }
  return MomentVector(std::move(out));
}

double CharPolyCoeffs::D(std::size_t i) const {
  if (i == 0 || i > values_.size())
    throw ArgumentError("coefficient D_" + std::to_string(i) + " requested, degree " + std::to_string(values_.size()));
  return values_[i - 1];
}

MomentVector moments_from_spectrum(std::span<const double> eigenvalues, std::size_t kmax) {
  std::vector<double> t(kmax, 0.0);
  for (double lambda : eigenvalues) {
    double pw = 1.0;
    for (std::size_t k = 0; k < kmax; ++k) {
      pw *= lambda;
      t[k] += pw;
    }
  }
  return MomentVector(std::move(t));
}

MomentVector moments(const CMat& m, std::size_t kmax) {
  if (!m.is_square()) throw ShapeError("moments: matrix is not square");
  if (kmax == 0 || kmax > m.rows())
    throw ArgumentError("moments: kmax must lie in [1, " + std::to_string(m.rows()) + "], got " +
                        std::to_string(kmax));
  const double tr_imag = std::abs(trace(m).imag());
  if (tr_imag > kMomentImagTol) {
    std::ostringstream os;
    os << "moments: trace has imaginary part " << tr_imag;
    throw ValidationError(os.str());
  }
  const auto ev = hermitian_eigenvalues(m);
  return moments_from_spectrum(ev, kmax);
}

MomentVector pt_moments(const BipartiteState& s, std::size_t kmax) { return moments(partial_transpose(s), kmax); }

MomentVector realignment_moments(const BipartiteState& s, std::size_t kmax) {
  if (kmax == 0 || kmax > s.dim())
    throw ArgumentError("realignment_moments: kmax must lie in [1, " + std::to_string(s.dim()) + "]");
  const auto sv = singular_values(realign(s));
  return moments_from_spectrum(sv, kmax);
}

CharPolyCoeffs charpoly_coeffs(const MomentVector& t, std::size_t d) {
  if (d == 0) throw ArgumentError("charpoly_coeffs: degree must be positive");
  if (t.kmax() < d)
    throw ArgumentError("charpoly_coeffs: need T_1..T_" + std::to_string(d) + ", have " + std::to_string(t.kmax()));
  std::vector<double> D(d);
  for (std::size_t k = 1; k <= d; ++k) {
    double acc = t.T(k);
    for (std::size_t j = 1; j < k; ++j) acc += D[j - 1] * t.T(k - j);
    D[k - 1] = -acc / static_cast<double>(k);
  }
  return CharPolyCoeffs(std::move(D));
}

double charpoly_coeff_det(const MomentVector& t, std::size_t i) {
  constexpr std::size_t kMaxIndex = 12;
  if (i == 0 || i > kMaxIndex)
    throw ArgumentError("charpoly_coeff_det: index must lie in [1, 12], got " + std::to_string(i));
  if (i > t.kmax()) throw ArgumentError("charpoly_coeff_det: need T_1..T_" + std::to_string(i));
  CMat band(i, i);
  for (std::size_t r = 0; r < i; ++r)
    for (std::size_t c = 0; c < i; ++c) {
      if (c + 1 == r)
        band(r, c) = static_cast<double>(r);
      else if (c >= r)
        band(r, c) = t.T(c - r + 1);
    }
  double factorial = 1.0;
  for (std::size_t k = 2; k <= i; ++k) factorial *= static_cast<double>(k);
  const double sign = (i % 2 == 0) ? 1.0 : -1.0;
  return sign * determinant(band).real() / factorial;
}

CMat hankel_matrix(const MomentVector& p, std::size_t l) {
  if (l == 0) throw ArgumentError("hankel_matrix: l must be >= 1");
  if (2 * l + 1 > p.kmax())
    throw ArgumentError("hankel_matrix: l = " + std::to_string(l) + " needs p_1..p_" + std::to_string(2 * l + 1) +
                        ", have " + std::to_string(p.kmax()));
  CMat h(l + 1, l + 1);
  for (std::size_t i = 0; i <= l; ++i)
    for (std::size_t j = 0; j <= l; ++j) h(i, j) = p.T(i + j + 1);
  return h;
}

}  // namespace entcert
