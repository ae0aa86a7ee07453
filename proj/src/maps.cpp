#include "entcert/maps.hpp"

#include <sstream>

#include "json_io.hpp"

namespace entcert {

namespace {

constexpr double kHermitianPreservingTol = 1e-9;

CMat apply_superop(const CMat& L, const CMat& x) {
  const auto out = matvec(L, x.data());
  return CMat(x.rows(), x.cols(), out);
}

// Lambda(E_ij^dagger) must equal Lambda(E_ij)^dagger for every matrix unit.
void check_hermiticity_preserving(const CMat& L, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      CMat eij(d, d);
      eij(i, j) = 1.0;
      const CMat lhs = apply_superop(L, adjoint(eij));
      const CMat rhs = adjoint(apply_superop(L, eij));
      const double diff = max_abs_diff(lhs, rhs);
      if (diff > kHermitianPreservingTol) {
        std::ostringstream os;
        os << "superoperator is not Hermiticity-preserving: map(E_" << i << j << "^dagger) differs from map(E_" << i
           << j << ")^dagger by " << diff;
        throw ValidationError(os.str());
      }
    }
}

}  // namespace

PositiveMap::PositiveMap(MapKind kind, std::size_t dimB, std::string label, std::optional<CMat> superop)
    : kind_(kind), dimB_(dimB), label_(std::move(label)), superop_(std::move(superop)) {
  if (dimB_ == 0) throw ValidationError("map: dimB must be positive");
}

PositiveMap PositiveMap::transpose(std::size_t dimB) { return {MapKind::Transpose, dimB, "transpose"}; }

PositiveMap PositiveMap::hou_gamma() { return {MapKind::HouGamma, 3, "gamma"}; }

PositiveMap PositiveMap::reduction(std::size_t dimB) { return {MapKind::Reduction, dimB, "reduction"}; }

PositiveMap PositiveMap::from_superoperator(std::size_t dimB, CMat superop, std::string label) {
  const std::size_t n = dimB * dimB;
  if (superop.rows() != n || superop.cols() != n) {
    std::ostringstream os;
    os << "superoperator for dimB = " << dimB << " must be " << n << "x" << n << ", got " << superop.rows() << "x"
       << superop.cols();
    throw ValidationError(os.str());
  }
  check_hermiticity_preserving(superop, dimB);
  return {MapKind::Superoperator, dimB, std::move(label), std::move(superop)};
}

bool PositiveMap::is_builtin_name(const std::string& name) {
  return name == "transpose" || name == "gamma" || name == "reduction";
}

PositiveMap PositiveMap::builtin(const std::string& name, std::size_t dimB) {
  if (name == "transpose") return transpose(dimB);
  if (name == "reduction") return reduction(dimB);
  if (name == "gamma") {
    if (dimB != 3) throw ValidationError("map gamma acts on 3x3 matrices, but dimB = " + std::to_string(dimB));
    return hou_gamma();
  }
  throw ValidationError("unknown builtin map \"" + name + "\"");
}

CMat PositiveMap::apply(const CMat& x) const {
  if (x.rows() != dimB_ || x.cols() != dimB_) {
    std::ostringstream os;
    os << "map " << label_ << " acts on " << dimB_ << "x" << dimB_ << " matrices, got " << x.rows() << "x"
       << x.cols();
    throw ShapeError(os.str());
  }
  switch (kind_) {
    case MapKind::Transpose:
      return entcert::transpose(x);
    case MapKind::HouGamma: {
      CMat y = x * -0.5;
      y(0, 0) = 0.5 * (x(0, 0) + x(1, 1));
      y(1, 1) = 0.5 * (x(1, 1) + x(2, 2));
      y(2, 2) = 0.5 * (x(2, 2) + x(0, 0));
      return y;
    }
    case MapKind::Reduction:
      return CMat::identity(dimB_) * trace(x) - x;
    case MapKind::Superoperator:
      return apply_superop(*superop_, x);
  }
  throw ValidationError("map: unknown kind");
}

CMat extend_and_apply(const PositiveMap& m, const BipartiteState& s) {
  if (m.dimB() != s.dimB()) {
    std::ostringstream os;
    os << "map " << m.label() << " acts on dimension " << m.dimB() << " but the state has dimB = " << s.dimB();
    throw ShapeError(os.str());
  }
  const std::size_t dB = s.dimB();
  CMat out(s.dim(), s.dim());
  for (std::size_t i = 0; i < s.dimA(); ++i)
    for (std::size_t j = 0; j < s.dimA(); ++j) out.set_block(i * dB, j * dB, m.apply(s.block(i, j)));
  const double defect = hermiticity_defect(out);
  if (defect > kHermitianPreservingTol * std::max(1.0, frobenius_norm(out))) {
    std::ostringstream os;
    os << "(I x " << m.label() << ")(rho) is not Hermitian (defect " << defect << ")";
    throw ValidationError(os.str());
  }
  return hermitian_part(out);
}

CMat superoperator_of(const PositiveMap& m) {
  if (m.superoperator()) return *m.superoperator();
  const std::size_t d = m.dimB();
  CMat L(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      CMat eij(d, d);
      eij(i, j) = 1.0;
      const CMat img = m.apply(eij);
      // Column (i*d + j) is vec(map(E_ij)).
      for (std::size_t r = 0; r < d * d; ++r) L(r, i * d + j) = img.data()[r];
    }
  return L;
}

PositiveMap superop_from_json(const std::string& text, std::string label) {
  const auto j = json_io::parse_document(text, "map file");
  const std::size_t dimB = json_io::require_dim(j, "dimB", "map file");
  if (!j.contains("superop")) throw ParseError("map file: missing field \"superop\"");
  CMat L = json_io::matrix_from_json(j["superop"], "map file: superop");
  return PositiveMap::from_superoperator(dimB, std::move(L), std::move(label));
}

PositiveMap superop_from_file(const std::filesystem::path& path) {
  try {
    return superop_from_json(json_io::read_file(path), path.string());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::string superop_to_json(std::size_t dimB, const CMat& superop) {
  std::ostringstream os;
  os << "{\n  \"dimB\": " << dimB << ",\n  \"superop\": " << json_io::matrix_to_json(superop, 2) << "\n}\n";
  return os.str();
}

}  // namespace entcert
