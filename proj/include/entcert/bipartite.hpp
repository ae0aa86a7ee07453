#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "entcert/linalg.hpp"

namespace entcert {

/// Density matrix on C^dimA (x) C^dimB. The matrix is viewed as a dimA x dimA
/// grid of dimB x dimB blocks; block (i, j) is <i|_A rho |j>_A.
class BipartiteState {
 public:
  static constexpr double kHermitianTol = 1e-9;
  static constexpr double kTraceTol = 1e-9;
  static constexpr double kPsdTol = 1e-9;

  /// Validates Hermiticity, unit trace and positivity, then stores the
  /// symmetrized matrix. Throws ValidationError naming the failed check.
  BipartiteState(std::size_t dimA, std::size_t dimB, const CMat& mat);

  std::size_t dimA() const { return dimA_; }
  std::size_t dimB() const { return dimB_; }
  std::size_t dim() const { return dimA_ * dimB_; }
  const CMat& matrix() const { return mat_; }

  CMat block(std::size_t i, std::size_t j) const { return mat_.block(i * dimB_, j * dimB_, dimB_, dimB_); }

 private:
  std::size_t dimA_;
  std::size_t dimB_;
  CMat mat_;
};

/// Transpose of every dimB x dimB block. Involutive.
CMat partial_transpose(const BipartiteState& s);
CMat partial_transpose(const CMat& m, std::size_t dimA, std::size_t dimB);

/// Reshuffle to a dimA^2 x dimB^2 matrix: row dimA*i + j holds the
/// row-major vectorization of block (i, j).
CMat realign(const BipartiteState& s);
CMat realign(const CMat& m, std::size_t dimA, std::size_t dimB);

/// Row-major vectorization (c11, c12, ..., c1n, c21, ...).
std::vector<cplx> vec(const CMat& c);

/// 3 (x) 3 PPT entangled family, valid for a >= 1/2.
BipartiteState paper_ppt_family(double a);

/// p |psi-><psi-| + (1 - p) I/4 with |psi-> = (|01> - |10>)/sqrt(2).
BipartiteState werner_state(double p);

/// (|00> + |11>)/sqrt(2).
BipartiteState bell_state();

BipartiteState maximally_mixed(std::size_t dimA, std::size_t dimB);

/// Convex mixture of `terms` Haar-random pure product states with weights
/// uniform on the simplex.
///
/// The stream is std::mt19937_64 seeded with `seed`. Each draw x maps to
/// u = (x >> 11) * 2^-53 in [0, 1). For every term, in order:
///   - weight  w = -log(1 - u)
///   - |a>: dimA complex amplitudes, then |b>: dimB amplitudes, each
///     amplitude (r cos 2 pi u2, r sin 2 pi u2) with r = sqrt(-2 log(1 - u1))
///     from two consecutive draws u1, u2; both vectors are then normalized.
/// Weights are normalized to sum 1 at the end.
BipartiteState random_separable(std::size_t dimA, std::size_t dimB, std::size_t terms, std::uint64_t seed);

double purity(const BipartiteState& s);

/// JSON document {"dimA": int, "dimB": int, "matrix": [[[re, im], ...], ...]}.
std::string state_to_json(const BipartiteState& s);
BipartiteState state_from_json(const std::string& text);

void save_state(const BipartiteState& s, const std::filesystem::path& path);
BipartiteState load_state(const std::filesystem::path& path);

}  // namespace entcert
