#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "entcert/scan.hpp"
#include "test_support.hpp"

namespace entcert {
namespace {

double power_sum(const std::vector<double>& x, int k) {
  double s = 0.0;
  for (double v : x) s += std::pow(v, k);
  return s;
}

// Closed-form witnesses from the hand-derived singular values.
double l5_closed(double a) {
  const auto sv = testing::ppt_family_realigned_sv(a);
  const double r2 = power_sum(sv, 2);
  return r2 * r2 - power_sum(sv, 3);
}

double l6_closed(double a) {
  const auto sv = testing::ppt_family_realigned_sv(a);
  double prod = 1.0;
  for (double x : sv)
    if (x > 0) prod *= x * x;
  return 30.0 * std::pow(prod, 1.0 / 6.0) + power_sum(sv, 2) - 1.0;
}

double root(const std::function<double(double)>& f, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((f(lo) > 0) == (f(mid) > 0) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

const ScanResult& result_for(const ScanOutput& out, const std::string& id) {
  for (const auto& r : out.results)
    if (r.criterion == id) return r;
  throw std::runtime_error("no result for " + id);
}

TEST(ScanGrid, Points) {
  const auto g = scan_grid(0.5, 1.5, 0.01);
  ASSERT_EQ(g.size(), 101u);
  EXPECT_DOUBLE_EQ(g.front(), 0.5);
  EXPECT_DOUBLE_EQ(g.back(), 1.5);
  EXPECT_NEAR(g[37], 0.87, 1e-15);
  const auto h = scan_grid(0.5, 0.75, 0.1);
  EXPECT_EQ(h, (std::vector<double>{0.5, 0.6, 0.7, 0.75}));
  EXPECT_EQ(scan_grid(1.0, 1.0, 0.1), std::vector<double>{1.0});
  EXPECT_THROW(scan_grid(0.5, 1.0, 0.0), DomainError);
  EXPECT_THROW(scan_grid(1.0, 0.5, 0.1), DomainError);
}

TEST(ScanFamily, DomainErrors) {
  ScanOptions o;
  o.criteria = {Criterion::L5};
  o.lo = 0.4;
  EXPECT_THROW(scan_family(o), DomainError);
  o.lo = 0.5;
  o.family = "werner";
  EXPECT_THROW(scan_family(o), DomainError);
}

TEST(ScanFamily, ThresholdsMatchClosedForms) {
  ScanOptions o;
  o.criteria = {Criterion::L5, Criterion::L6, Criterion::CCNR, Criterion::Theorem1, Criterion::L4};
  o.maps = {PositiveMap::hou_gamma()};
  const auto out = scan_family(o);

  EXPECT_NEAR(root(l5_closed, 0.5, 0.6), 0.554203647903574, 1e-12);
  EXPECT_NEAR(root(l6_closed, 0.7, 0.9), 0.7951382804034329, 1e-12);

  // The decision flips where the witness crosses tol, not zero.
  const double l5 = root([&](double a) { return l5_closed(a) - o.tol; }, 0.5, 0.6);
  const double l6 = root([&](double a) { return l6_closed(a) - o.tol; }, 0.7, 0.9);
  EXPECT_NEAR(*result_for(out, "L5").threshold, l5, 1e-10);
  EXPECT_NEAR(*result_for(out, "L6").threshold, l6, 1e-10);
  EXPECT_NEAR(*result_for(out, "CCNR").threshold, 1.0, 1e-6);
  EXPECT_NEAR(*result_for(out, "theorem1[gamma]").threshold, 1.0, 1e-4);
  EXPECT_NEAR(*result_for(out, "L4[gamma]").threshold, 1.0, 1e-4);
  for (const auto& r : out.results) {
    EXPECT_EQ(r.flips.size(), 1u) << r.criterion;
    EXPECT_EQ(r.flips[0].below, Decision::Entangled);
    EXPECT_EQ(r.iterations, 40);
    EXPECT_LT(r.flips[0].residual, 1e-12);
  }
}

TEST(ScanFamily, DecisionsFlipAcrossThreshold) {
  ScanOptions o;
  o.criteria = {Criterion::L5, Criterion::L6};
  const auto out = scan_family(o);
  for (const auto& r : out.results) {
    const double t = *r.threshold;
    const auto c = parse_criterion(r.criterion);
    EXPECT_TRUE(evaluate(c, paper_ppt_family(t - 1e-3), nullptr).entangled()) << r.criterion;
    EXPECT_FALSE(evaluate(c, paper_ppt_family(t + 1e-3), nullptr).entangled()) << r.criterion;
  }
}

TEST(ScanFamily, MomentCriteriaHaveNoThreshold) {
  ScanOptions o;
  o.criteria = {Criterion::L1, Criterion::L2, Criterion::L3};
  o.hi = 5.0;
  o.step = 0.05;
  const auto out = scan_family(o);
  for (const auto& r : out.results) {
    EXPECT_FALSE(r.threshold.has_value()) << r.criterion;
    EXPECT_EQ(r.grid_entangled, 0u);
    EXPECT_TRUE(r.flips.empty());
  }
}

TEST(ScanCsv, StableAndParsable) {
  ScanOptions o;
  o.criteria = {Criterion::L5, Criterion::CCNR};
  o.hi = 1.1;
  o.step = 0.1;
  const std::string a = scan_to_csv(scan_family(o));
  const std::string b = scan_to_csv(scan_family(o));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("a,criterion,witness,decision\n", 0), 0u);
  EXPECT_NE(a.find("# summary\n"), std::string::npos);
  EXPECT_NE(a.find("# L5,0.554203"), std::string::npos);
  EXPECT_NE(a.find("# flip,CCNR,"), std::string::npos);
  // 7 grid points x 2 criteria data rows.
  std::size_t rows = 0, pos = 0;
  while ((pos = a.find('\n', pos)) != std::string::npos) {
    ++pos;
    if (pos < a.size() && a[pos] != '#') ++rows;
  }
  EXPECT_EQ(rows, 14u);
}

}  // namespace
}  // namespace entcert
