#include "entcert/scan.hpp"

#include <cmath>
#include <sstream>

#include "json_io.hpp"

namespace entcert {

namespace {

struct Series {
  Criterion criterion;
  const PositiveMap* map;
  std::string id;
};

Verdict eval_at(const Series& series, double a, double tol) {
  return evaluate(series.criterion, paper_ppt_family(a), series.map, tol);
}

DecisionFlip bisect(const Series& series, double left, double right, Decision left_decision, double tol, int steps) {
  DecisionFlip flip;
  flip.below = left_decision;
  for (int i = 0; i < steps; ++i) {
    const double mid = 0.5 * (left + right);
    if (eval_at(series, mid, tol).decision == left_decision)
      left = mid;
    else
      right = mid;
    ++flip.iterations;
  }
  flip.location = 0.5 * (left + right);
  flip.residual = 0.5 * (right - left);
  return flip;
}

}  // namespace

std::vector<double> scan_grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw DomainError("scan: step must be positive");
  if (!(hi >= lo)) throw DomainError("scan: range must satisfy lo <= hi");
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  std::vector<double> g;
  g.reserve(n + 2);
  for (std::size_t i = 0; i <= n; ++i) g.push_back(std::min(lo + static_cast<double>(i) * step, hi));
  if (hi - g.back() > 1e-12 * std::max(1.0, std::abs(hi))) g.push_back(hi);
  return g;
}

ScanOutput scan_family(const ScanOptions& opts) {
  if (opts.family != "paper-ppt") throw DomainError("scan: unknown family \"" + opts.family + "\"");
  if (!(opts.lo >= 0.5)) throw DomainError("scan: paper-ppt family is defined for a >= 1/2");
  if (opts.criteria.empty()) throw ValidationError("scan: no criteria requested");

  std::vector<PositiveMap> maps = opts.maps;
  if (maps.empty()) maps.push_back(PositiveMap::transpose(3));

  std::vector<Series> series;
  for (Criterion c : opts.criteria) {
    if (is_map_dependent(c))
      for (const auto& m : maps) series.push_back({c, &m, verdict_id(c, &m)});
    else
      series.push_back({c, nullptr, criterion_name(c)});
  }

  ScanOutput out;
  out.grid = scan_grid(opts.lo, opts.hi, opts.step);
  // decisions[s][i] for series s at grid point i.
  std::vector<std::vector<Decision>> decisions(series.size(), std::vector<Decision>(out.grid.size()));
  for (std::size_t i = 0; i < out.grid.size(); ++i) {
    const double a = out.grid[i];
    const auto state = paper_ppt_family(a);
    for (std::size_t s = 0; s < series.size(); ++s) {
      const Verdict v = evaluate(series[s].criterion, state, series[s].map, opts.tol);
      decisions[s][i] = v.decision;
      out.points.push_back({a, series[s].id, v.witness, v.decision});
    }
  }

  for (std::size_t s = 0; s < series.size(); ++s) {
    ScanResult r;
    r.criterion = series[s].id;
    r.grid_points = out.grid.size();
    for (auto d : decisions[s])
      if (d == Decision::Entangled) ++r.grid_entangled;
    for (std::size_t i = 0; i + 1 < out.grid.size(); ++i) {
      if (decisions[s][i] == decisions[s][i + 1]) continue;
      auto flip = bisect(series[s], out.grid[i], out.grid[i + 1], decisions[s][i], opts.tol, opts.bisection_steps);
      r.iterations += flip.iterations;
      if (flip.below == Decision::Entangled) r.threshold = flip.location;
      r.flips.push_back(flip);
    }
    out.results.push_back(std::move(r));
  }
  return out;
}

std::string scan_to_csv(const ScanOutput& out) {
  using json_io::format_double;
  std::ostringstream os;
  os << "a,criterion,witness,decision\n";
  for (const auto& p : out.points)
    os << format_double(p.a) << "," << p.criterion << "," << format_double(p.witness) << ","
       << decision_name(p.decision) << "\n";
  os << "# summary\n";
  os << "# criterion,threshold,iterations,flips,grid_entangled,grid_points\n";
  for (const auto& r : out.results) {
    os << "# " << r.criterion << "," << (r.threshold ? format_double(*r.threshold) : std::string("none")) << ","
       << r.iterations << "," << r.flips.size() << "," << r.grid_entangled << "," << r.grid_points << "\n";
  }
  for (const auto& r : out.results)
    for (const auto& f : r.flips)
      os << "# flip," << r.criterion << "," << format_double(f.location) << "," << format_double(f.residual) << ","
         << decision_name(f.below) << "_below\n";
  return os.str();
}

}  // namespace entcert
