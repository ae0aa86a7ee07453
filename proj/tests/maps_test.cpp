#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "entcert/maps.hpp"
#include "test_support.hpp"

namespace entcert {
namespace {

namespace fs = std::filesystem;

const cplx I(0.0, 1.0);

std::vector<PositiveMap> builtins(std::size_t dimB) {
  std::vector<PositiveMap> m{PositiveMap::transpose(dimB), PositiveMap::reduction(dimB)};
  if (dimB == 3) m.push_back(PositiveMap::hou_gamma());
  return m;
}

TEST(ApplyMap, GammaIsUnital) {
  EXPECT_LT(max_abs_diff(PositiveMap::hou_gamma().apply(CMat::identity(3)), CMat::identity(3)), 1e-15);
}

TEST(ApplyMap, GammaClosedForm) {
  std::mt19937_64 rng(1);
  const CMat x = testing::random_matrix(3, 3, rng);
  const CMat y = PositiveMap::hou_gamma().apply(x);
  const CMat want{{0.5 * (x(0, 0) + x(1, 1)), -0.5 * x(0, 1), -0.5 * x(0, 2)},
                  {-0.5 * x(1, 0), 0.5 * (x(1, 1) + x(2, 2)), -0.5 * x(1, 2)},
                  {-0.5 * x(2, 0), -0.5 * x(2, 1), 0.5 * (x(2, 2) + x(0, 0))}};
  EXPECT_LT(max_abs_diff(y, want), 1e-15);
}

TEST(ApplyMap, TransposeAndReduction) {
  const CMat e{{0, 1}, {0, 0}};
  const CMat et{{0, 0}, {1, 0}};
  EXPECT_EQ(PositiveMap::transpose(2).apply(e), et);
  EXPECT_LT(max_abs_diff(PositiveMap::reduction(3).apply(CMat::identity(3)), CMat::identity(3) * 2.0), 1e-15);
  EXPECT_THROW(PositiveMap::transpose(2).apply(CMat(3, 3)), ShapeError);
}

TEST(ApplyMap, GammaOnPptFamilyTopLeftBlock) {
  for (double a : {0.5, 1.0, 3.0}) {
    const auto s = paper_ppt_family(a);
    const CMat y = PositiveMap::hou_gamma().apply(s.block(0, 0));
    EXPECT_NEAR(y(0, 0).real(), (1 + a) / (2 * 3 * (3 + a)), 1e-16);
  }
}

TEST(ApplyMap, Linearity) {
  std::mt19937_64 rng(2);
  for (const auto& m : builtins(3)) {
    const CMat x = testing::random_matrix(3, 3, rng), y = testing::random_matrix(3, 3, rng);
    const cplx alpha(0.3, -1.2), beta(-2.0, 0.5);
    const CMat lhs = m.apply(x * alpha + y * beta);
    const CMat rhs = m.apply(x) * alpha + m.apply(y) * beta;
    EXPECT_LT(max_abs_diff(lhs, rhs), 1e-12) << m.label();
  }
}

TEST(ExtendAndApply, GammaImageMatchesClosedForm) {
  for (double a : {0.5, 0.8, 2.0}) {
    // clang-format off
    const double expected[9][9] = {
        {1 + a, 0, 0, 0, -1, 0, 0, 0, -1},
        {0, a + 2, 0, -1, 0, 0, 0, 0, 0},
        {0, 0, 3, 0, 0, 0, -1, 0, 0},
        {0, -1, 0, 3, 0, 0, 0, 0, 0},
        {-1, 0, 0, 0, 1 + a, 0, 0, 0, -1},
        {0, 0, 0, 0, 0, a + 2, 0, -1, 0},
        {0, 0, -1, 0, 0, 0, a + 2, 0, 0},
        {0, 0, 0, 0, 0, -1, 0, 3, 0},
        {-1, 0, 0, 0, -1, 0, 0, 0, 1 + a},
    };
    // clang-format on
    const CMat out = extend_and_apply(PositiveMap::hou_gamma(), paper_ppt_family(a));
    const double s = 1.0 / (6.0 * (3.0 + a));
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) EXPECT_NEAR(std::abs(out(i, j) - expected[i][j] * s), 0.0, 1e-16);
  }
}

TEST(ExtendAndApply, EigenpairOfGammaImage) {
  const std::vector<cplx> v{1, 0, 0, 0, 1, 0, 0, 0, 1};
  for (double a : {0.5, 0.9, 2.0}) {
    const CMat out = extend_and_apply(PositiveMap::hou_gamma(), paper_ppt_family(a));
    const auto mv = matvec(out, v);
    const double lambda = (a - 1) / (18 + 6 * a);
    double res = 0.0;
    for (std::size_t i = 0; i < 9; ++i) res += std::norm(mv[i] - lambda * v[i]);
    EXPECT_LT(std::sqrt(res), 1e-10) << a;
  }
}

TEST(ExtendAndApply, TransposeEqualsPartialTranspose) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = random_separable(3, 3, 3, seed);
    EXPECT_EQ(extend_and_apply(PositiveMap::transpose(3), s), partial_transpose(s));
  }
  EXPECT_EQ(extend_and_apply(PositiveMap::transpose(2), bell_state()), partial_transpose(bell_state()));
}

TEST(ExtendAndApply, DimensionMismatch) {
  EXPECT_THROW(extend_and_apply(PositiveMap::hou_gamma(), bell_state()), ShapeError);
  EXPECT_THROW(PositiveMap::builtin("gamma", 2), ValidationError);
  EXPECT_THROW(PositiveMap::builtin("choi", 3), ValidationError);
}

TEST(ExtendAndApply, SeparableInputsStayPositive) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t dA = 2 + seed % 2, dB = 2 + (seed / 2) % 2;
    const auto s = random_separable(dA, dB, 1 + seed % 6, 1000 + seed);
    for (const auto& m : builtins(dB))
      EXPECT_GE(hermitian_eigenvalues(extend_and_apply(m, s)).front(), -1e-9) << m.label() << " seed " << seed;
  }
}

TEST(Superoperator, TransposePermutationMatchesBuiltin) {
  // Hand-built: vec(X^T)[i*d+j] = X(j,i) = vec(X)[j*d+i].
  const std::size_t d = 3;
  CMat L(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) L(i * d + j, j * d + i) = 1.0;
  const auto user = PositiveMap::from_superoperator(d, L);
  EXPECT_EQ(superoperator_of(PositiveMap::transpose(d)), L);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 5; ++t) {
    const CMat x = testing::random_matrix(d, d, rng);
    EXPECT_LT(max_abs_diff(user.apply(x), PositiveMap::transpose(d).apply(x)), 1e-12);
  }
}

TEST(Superoperator, GammaFromMatrixUnitsMatchesBuiltin) {
  const auto gamma = PositiveMap::hou_gamma();
  const auto user = PositiveMap::from_superoperator(3, superoperator_of(gamma));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 5; ++t) {
    const CMat x = testing::random_matrix(3, 3, rng);
    EXPECT_LT(max_abs_diff(user.apply(x), gamma.apply(x)), 1e-12);
  }
  const auto s = paper_ppt_family(0.8);
  EXPECT_LT(max_abs_diff(extend_and_apply(user, s), extend_and_apply(gamma, s)), 1e-12);
}

TEST(Superoperator, RejectsNonHermiticityPreserving) {
  EXPECT_THROW(PositiveMap::from_superoperator(2, CMat::identity(4) * I), ValidationError);
  EXPECT_THROW(PositiveMap::from_superoperator(2, CMat::identity(3)), ValidationError);
}

TEST(Superoperator, FileRoundTrip) {
  const auto path = fs::temp_directory_path() / "entcert_map_gamma.json";
  std::ofstream(path) << superop_to_json(3, superoperator_of(PositiveMap::hou_gamma()));
  const auto m = superop_from_file(path);
  EXPECT_EQ(m.kind(), MapKind::Superoperator);
  EXPECT_TRUE(m.user_supplied());
  EXPECT_EQ(m.dimB(), 3u);
  EXPECT_LT(max_abs_diff(m.apply(CMat::identity(3)), CMat::identity(3)), 1e-15);

  std::ofstream(path) << R"({"dimB": 2, "superop": [[[1, 0]]]})";
  EXPECT_THROW(superop_from_file(path), ValidationError);
  std::ofstream(path) << R"({"dimB": 2})";
  EXPECT_THROW(superop_from_file(path), ValidationError);
  fs::remove(path);
}

}  // namespace
}  // namespace entcert
