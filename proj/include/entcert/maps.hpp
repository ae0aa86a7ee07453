#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "entcert/bipartite.hpp"
#include "entcert/linalg.hpp"

namespace entcert {

enum class MapKind { Transpose, HouGamma, Reduction, Superoperator };

/// A linear, Hermiticity-preserving map on dimB x dimB matrices, assumed
/// positive. Builtins act in closed form; user maps carry a superoperator L
/// with vec(map(X)) = L vec(X), vec row-major as in realign().
///
/// Positivity of a superoperator is not checked. Criteria evaluated with a
/// map that is not positive carry no meaning.
class PositiveMap {
 public:
  static PositiveMap transpose(std::size_t dimB);
  /// X -> (1/2) [[x11+x22, -x12, -x13], [-x21, x22+x33, -x23], [-x31, -x32, x33+x11]]
  static PositiveMap hou_gamma();
  /// X -> Tr(X) I - X
  static PositiveMap reduction(std::size_t dimB);
  /// Throws ValidationError if L has the wrong size or the map fails the
  /// Hermiticity-preservation check on matrix units.
  static PositiveMap from_superoperator(std::size_t dimB, CMat superop, std::string label = "superoperator");

  /// Builtin names: "transpose", "gamma", "reduction".
  static PositiveMap builtin(const std::string& name, std::size_t dimB);
  static bool is_builtin_name(const std::string& name);

  MapKind kind() const { return kind_; }
  std::size_t dimB() const { return dimB_; }
  const std::string& label() const { return label_; }
  bool user_supplied() const { return kind_ == MapKind::Superoperator; }
  const std::optional<CMat>& superoperator() const { return superop_; }

  CMat apply(const CMat& x) const;

 private:
  PositiveMap(MapKind kind, std::size_t dimB, std::string label, std::optional<CMat> superop = std::nullopt);

  MapKind kind_;
  std::size_t dimB_;
  std::string label_;
  std::optional<CMat> superop_;
};

inline CMat apply_map(const PositiveMap& m, const CMat& x) { return m.apply(x); }

/// (I (x) map)(rho): the map applied to every dimB x dimB block, then
/// symmetrized. Throws ShapeError on a dimB mismatch and ValidationError if
/// the output is non-Hermitian beyond 1e-9.
CMat extend_and_apply(const PositiveMap& m, const BipartiteState& s);

/// Superoperator matrix of any map, assembled from its action on matrix units.
CMat superoperator_of(const PositiveMap& m);

/// {"dimB": int, "superop": [[[re, im], ...], ...]}
PositiveMap superop_from_json(const std::string& text, std::string label = "superoperator");
PositiveMap superop_from_file(const std::filesystem::path& path);
std::string superop_to_json(std::size_t dimB, const CMat& superop);

}  // namespace entcert
