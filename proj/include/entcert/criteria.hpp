#pragma once

#include <string>
#include <vector>

#include "entcert/bipartite.hpp"
#include "entcert/maps.hpp"
#include "entcert/spectra.hpp"

namespace entcert {

enum class Decision { Entangled, Inconclusive };

enum class Criterion {
  L1,        // p3-PPT
  L2,        // D3-in
  L3,        // p3-OPPT
  L4,        // Hankel moment matrices
  L5,        // realignment moments r2^2 - r3
  L6,        // R moments
  CCNR,      // trace norm of the realigned matrix
  Theorem1,  // characteristic-polynomial sign pattern
  PPT,       // full partial-transpose eigendecomposition
};

constexpr double kDefaultTol = 1e-9;

/// Outcome of one criterion. Every criterion here compares its witness with
/// a threshold of zero: Entangled iff witness > tol.
struct Verdict {
  std::string criterion;
  Decision decision = Decision::Inconclusive;
  double witness = 0.0;
  double margin = 0.0;
  double tol = kDefaultTol;
  std::string detail;

  bool entangled() const { return decision == Decision::Entangled; }
};

struct CriterionReport {
  std::string state;
  std::vector<std::string> maps;
  std::vector<Verdict> verdicts;

  const Verdict* find(const std::string& criterion) const;
  std::vector<std::string> entangled_ids() const;
};

std::string criterion_name(Criterion c);
/// Case-insensitive; accepts L1..L6, ccnr, theorem1, ppt.
Criterion parse_criterion(const std::string& name);
/// Comma list or "all".
std::vector<Criterion> parse_criteria(const std::string& list);
std::vector<Criterion> all_criteria();
bool is_map_dependent(Criterion c);
/// "L4[gamma]" for map-dependent criteria, the plain name otherwise.
std::string verdict_id(Criterion c, const PositiveMap* m);

const char* decision_name(Decision d);

/// RMS eigenvalue sqrt(T_2 / d), computed from moments alone. Rescaling a
/// spectrum by a positive constant leaves every sign the criteria test
/// unchanged, and normalizing to unit RMS keeps high-order quantities
/// (D_9, p_9) away from the absolute decision tolerance.
double spectral_scale(const MomentVector& t, std::size_t d);

Verdict l1_p3ppt(const BipartiteState& s, double tol = kDefaultTol);
Verdict l2_d3in(const BipartiteState& s, double tol = kDefaultTol);
Verdict l3_p3oppt(const BipartiteState& s, double tol = kDefaultTol);
/// Hankel test on the moments of (I (x) map)(rho); the transpose map gives
/// the partial-transpose form.
Verdict l4_hankel(const BipartiteState& s, const PositiveMap& m, double tol = kDefaultTol);
Verdict l4_hankel(const BipartiteState& s, double tol = kDefaultTol);
Verdict l5_realign_moments(const BipartiteState& s, double tol = kDefaultTol);
Verdict l6_rmoments(const BipartiteState& s, double tol = kDefaultTol);
Verdict ccnr_trace_norm(const BipartiteState& s, double tol = kDefaultTol);
Verdict theorem1_sign_pattern(const BipartiteState& s, const PositiveMap& m, double tol = kDefaultTol);
Verdict ppt_eigen_oracle(const BipartiteState& s, double tol = kDefaultTol);

/// Runs one criterion; `m` is required for map-dependent criteria.
Verdict evaluate(Criterion c, const BipartiteState& s, const PositiveMap* m, double tol = kDefaultTol);

/// Every requested criterion, map-dependent ones once per map (transpose if
/// `maps` is empty). A criterion that throws yields an Inconclusive verdict
/// with a NaN witness and the error text in `detail`.
CriterionReport evaluate_all(const BipartiteState& s, const std::vector<PositiveMap>& maps,
                             const std::vector<Criterion>& which, double tol = kDefaultTol,
                             std::string descriptor = "state");

std::string report_to_json(const CriterionReport& r);

}  // namespace entcert
