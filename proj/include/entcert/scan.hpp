#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entcert/criteria.hpp"

namespace entcert {

struct ScanOptions {
  std::string family = "paper-ppt";
  double lo = 0.5;
  double hi = 1.5;
  double step = 0.01;
  std::vector<Criterion> criteria;
  /// Used by map-dependent criteria; transpose when empty.
  std::vector<PositiveMap> maps;
  double tol = kDefaultTol;
  int bisection_steps = 40;
};

struct ScanPoint {
  double a = 0.0;
  std::string criterion;
  double witness = 0.0;
  Decision decision = Decision::Inconclusive;
};

/// A decision change between two neighbouring grid points, refined by bisection.
struct DecisionFlip {
  double location = 0.0;
  /// Half-width of the final bracket.
  double residual = 0.0;
  Decision below = Decision::Inconclusive;
  int iterations = 0;
};

struct ScanResult {
  std::string criterion;
  /// Largest a at which the decision changes from Entangled (below) to
  /// Inconclusive (above); empty if there is no such change on the interval.
  std::optional<double> threshold;
  int iterations = 0;
  std::vector<DecisionFlip> flips;
  std::size_t grid_points = 0;
  std::size_t grid_entangled = 0;
};

struct ScanOutput {
  std::vector<double> grid;
  std::vector<ScanPoint> points;
  std::vector<ScanResult> results;
};

/// Grid points lo + i*step for i = 0..round((hi-lo)/step), clipped to hi.
std::vector<double> scan_grid(double lo, double hi, double step);

/// Evaluates each criterion on the family over the grid and bisects every
/// decision change. Throws DomainError for an unknown family or a range
/// outside a >= 1/2.
ScanOutput scan_family(const ScanOptions& opts);

/// Grid rows "a,criterion,witness,decision", followed by '#'-prefixed
/// summary lines. Numbers carry 17 significant digits.
std::string scan_to_csv(const ScanOutput& out);

}  // namespace entcert
