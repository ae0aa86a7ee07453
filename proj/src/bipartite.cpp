#include "entcert/bipartite.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "json_io.hpp"

namespace entcert {

namespace {

CMat validated(std::size_t dimA, std::size_t dimB, const CMat& mat) {
  if (dimA == 0 || dimB == 0) throw ValidationError("state: dimensions must be positive");
  const std::size_t n = dimA * dimB;
  if (mat.rows() != n || mat.cols() != n) {
    std::ostringstream os;
    os << "state: matrix is " << mat.rows() << "x" << mat.cols() << " but dimA*dimB = " << n;
    throw ValidationError(os.str());
  }
  if (!mat.all_finite()) throw ValidationError("state: matrix has non-finite entries");

  double worst = 0.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double d = std::abs(mat(i, j) - std::conj(mat(j, i)));
      if (d > worst) {
        worst = d;
        wi = i;
        wj = j;
      }
    }
  if (worst > BipartiteState::kHermitianTol) {
    std::ostringstream os;
    os << "state: not Hermitian, entries (" << wi << "," << wj << ") and (" << wj << "," << wi
       << ") are not complex conjugates (difference " << worst << ")";
    throw ValidationError(os.str());
  }
  CMat h = hermitian_part(mat);

  const double tr = trace(h).real();
  if (std::abs(tr - 1.0) > BipartiteState::kTraceTol) {
    std::ostringstream os;
    os.precision(17);
    os << "state: trace is " << tr << ", expected 1";
    throw ValidationError(os.str());
  }
  const double lo = hermitian_eigenvalues(h).front();
  if (lo < -BipartiteState::kPsdTol) {
    std::ostringstream os;
    os << "state: not positive semi-definite, minimal eigenvalue " << lo;
    throw ValidationError(os.str());
  }
  return h;
}

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  cplx gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

  CMat pure_state(std::size_t d) {
    std::vector<cplx> v(d);
    double nrm = 0.0;
    for (auto& z : v) {
      z = gaussian();
      nrm += std::norm(z);
    }
    nrm = std::sqrt(nrm);
    CMat p(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) p(i, j) = v[i] * std::conj(v[j]) / (nrm * nrm);
    return p;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace

BipartiteState::BipartiteState(std::size_t dimA, std::size_t dimB, const CMat& mat)
    : dimA_(dimA), dimB_(dimB), mat_(validated(dimA, dimB, mat)) {}

CMat partial_transpose(const CMat& m, std::size_t dimA, std::size_t dimB) {
  if (m.rows() != dimA * dimB || m.cols() != dimA * dimB) throw ShapeError("partial_transpose: size mismatch");
  CMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < dimA; ++i)
    for (std::size_t j = 0; j < dimA; ++j)
      for (std::size_t k = 0; k < dimB; ++k)
        for (std::size_t l = 0; l < dimB; ++l) out(i * dimB + k, j * dimB + l) = m(i * dimB + l, j * dimB + k);
  return out;
}

CMat partial_transpose(const BipartiteState& s) { return partial_transpose(s.matrix(), s.dimA(), s.dimB()); }

CMat realign(const CMat& m, std::size_t dimA, std::size_t dimB) {
  if (m.rows() != dimA * dimB || m.cols() != dimA * dimB) throw ShapeError("realign: size mismatch");
  CMat out(dimA * dimA, dimB * dimB);
  for (std::size_t i = 0; i < dimA; ++i)
    for (std::size_t j = 0; j < dimA; ++j)
      for (std::size_t k = 0; k < dimB; ++k)
        for (std::size_t l = 0; l < dimB; ++l) out(i * dimA + j, k * dimB + l) = m(i * dimB + k, j * dimB + l);
  return out;
}

CMat realign(const BipartiteState& s) { return realign(s.matrix(), s.dimA(), s.dimB()); }

std::vector<cplx> vec(const CMat& c) { return {c.data().begin(), c.data().end()}; }

BipartiteState paper_ppt_family(double a) {
  if (!(a >= 0.5)) {
    std::ostringstream os;
    os << "paper-ppt family requires a >= 1/2, got " << a;
    throw DomainError(os.str());
  }
  // clang-format off
  const double m[9][9] = {
      {1, 0, 0, 0, 1, 0, 0, 0, 1},
      {0, a, 0, 1, 0, 0, 0, 0, 0},
      {0, 0, 2, 0, 0, 0, 1, 0, 0},
      {0, 1, 0, 2, 0, 0, 0, 0, 0},
      {1, 0, 0, 0, 1, 0, 0, 0, 1},
      {0, 0, 0, 0, 0, a, 0, 1, 0},
      {0, 0, 1, 0, 0, 0, a, 0, 0},
      {0, 0, 0, 0, 0, 1, 0, 2, 0},
      {1, 0, 0, 0, 1, 0, 0, 0, 1},
  };
  // clang-format on
  const double scale = 1.0 / (3.0 * (3.0 + a));
  CMat rho(9, 9);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) rho(i, j) = m[i][j] * scale;
  return BipartiteState(3, 3, rho);
}

BipartiteState werner_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "werner state requires 0 <= p <= 1, got " << p;
    throw DomainError(os.str());
  }
  CMat rho = CMat::identity(4) * ((1.0 - p) / 4.0);
  // |psi-><psi-| on the |01>, |10> subspace.
  rho(1, 1) += p / 2.0;
  rho(2, 2) += p / 2.0;
  rho(1, 2) -= p / 2.0;
  rho(2, 1) -= p / 2.0;
  return BipartiteState(2, 2, rho);
}

BipartiteState bell_state() {
  CMat rho(4, 4);
  rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = 0.5;
  return BipartiteState(2, 2, rho);
}

BipartiteState maximally_mixed(std::size_t dimA, std::size_t dimB) {
  const std::size_t n = dimA * dimB;
  return BipartiteState(dimA, dimB, CMat::identity(n) * (1.0 / static_cast<double>(n)));
}

BipartiteState random_separable(std::size_t dimA, std::size_t dimB, std::size_t terms, std::uint64_t seed) {
  if (terms == 0) throw DomainError("random_separable: terms must be >= 1");
  if (dimA == 0 || dimB == 0) throw DomainError("random_separable: dimensions must be positive");
  Stream rng(seed);
  std::vector<double> weights;
  std::vector<CMat> products;
  for (std::size_t t = 0; t < terms; ++t) {
    weights.push_back(-std::log1p(-rng.uniform()));
    CMat a = rng.pure_state(dimA);
    CMat b = rng.pure_state(dimB);
    products.push_back(kron(a, b));
  }
  double total = 0.0;
  for (double w : weights) total += w;
  CMat rho(dimA * dimB, dimA * dimB);
  for (std::size_t t = 0; t < terms; ++t) rho += products[t] * (weights[t] / total);
  // Renormalize away the rounding in the weight sum.
  rho *= 1.0 / trace(rho).real();
  return BipartiteState(dimA, dimB, rho);
}

double purity(const BipartiteState& s) { return std::pow(frobenius_norm(s.matrix()), 2); }

std::string state_to_json(const BipartiteState& s) {
  std::ostringstream os;
  os << "{\n  \"dimA\": " << s.dimA() << ",\n  \"dimB\": " << s.dimB()
     << ",\n  \"matrix\": " << json_io::matrix_to_json(s.matrix(), 2) << "\n}\n";
  return os.str();
}

BipartiteState state_from_json(const std::string& text) {
  const auto j = json_io::parse_document(text, "state file");
  const std::size_t dimA = json_io::require_dim(j, "dimA", "state file");
  const std::size_t dimB = json_io::require_dim(j, "dimB", "state file");
  if (!j.contains("matrix")) throw ParseError("state file: missing field \"matrix\"");
  CMat m = json_io::matrix_from_json(j["matrix"], "state file: matrix");
  return BipartiteState(dimA, dimB, m);
}

void save_state(const BipartiteState& s, const std::filesystem::path& path) {
  json_io::write_file(path, state_to_json(s));
}

BipartiteState load_state(const std::filesystem::path& path) {
  try {
    return state_from_json(json_io::read_file(path));
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace entcert
