#include "entcert/criteria.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace entcert {

namespace {

// Relative cutoff for counting non-zero singular values in L6.
constexpr double kRankCutoff = 1e-10;
constexpr double kRadicandClamp = 1e-12;

Verdict make_verdict(std::string id, double witness, double tol, std::string detail) {
  Verdict v;
  v.criterion = std::move(id);
  v.witness = witness;
  v.margin = std::abs(witness);
  v.tol = tol;
  v.decision = witness > tol ? Decision::Entangled : Decision::Inconclusive;
  v.detail = std::move(detail);
  return v;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

const Verdict* CriterionReport::find(const std::string& criterion) const {
  for (const auto& v : verdicts)
    if (v.criterion == criterion) return &v;
  return nullptr;
}

std::vector<std::string> CriterionReport::entangled_ids() const {
  std::vector<std::string> ids;
  for (const auto& v : verdicts)
    if (v.entangled()) ids.push_back(v.criterion);
  return ids;
}

std::string criterion_name(Criterion c) {
  switch (c) {
    case Criterion::L1: return "L1";
    case Criterion::L2: return "L2";
    case Criterion::L3: return "L3";
    case Criterion::L4: return "L4";
    case Criterion::L5: return "L5";
    case Criterion::L6: return "L6";
    case Criterion::CCNR: return "CCNR";
    case Criterion::Theorem1: return "theorem1";
    case Criterion::PPT: return "PPT";
  }
  return "?";
}

Criterion parse_criterion(const std::string& name) {
  const std::string n = lower(trim(name));
  for (Criterion c : all_criteria())
    if (lower(criterion_name(c)) == n) return c;
  throw ValidationError("unknown criterion \"" + name + "\" (expected L1..L6, CCNR, theorem1, PPT or all)");
}

std::vector<Criterion> parse_criteria(const std::string& list) {
  if (lower(trim(list)) == "all") return all_criteria();
  std::vector<Criterion> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (trim(item).empty()) continue;
    const Criterion c = parse_criterion(item);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  if (out.empty()) throw ValidationError("empty criterion list");
  return out;
}

std::vector<Criterion> all_criteria() {
  return {Criterion::L1,   Criterion::L2,       Criterion::L3,  Criterion::L4, Criterion::L5,
          Criterion::L6,   Criterion::CCNR,     Criterion::Theorem1, Criterion::PPT};
}

bool is_map_dependent(Criterion c) { return c == Criterion::L4 || c == Criterion::Theorem1; }

std::string verdict_id(Criterion c, const PositiveMap* m) {
  if (is_map_dependent(c) && m) return criterion_name(c) + "[" + m->label() + "]";
  return criterion_name(c);
}

const char* decision_name(Decision d) { return d == Decision::Entangled ? "Entangled" : "Inconclusive"; }

double spectral_scale(const MomentVector& t, std::size_t d) {
  const double rms = std::sqrt(std::max(t.T(2), 0.0) / static_cast<double>(d));
  return rms > 0.0 ? rms : 1.0;
}

Verdict l1_p3ppt(const BipartiteState& s, double tol) {
  const auto p = pt_moments(s, 3);
  const double w = p.T(2) * p.T(2) - p.T(3) * p.T(1);
  std::ostringstream os;
  os << "p1=" << p.T(1) << " p2=" << p.T(2) << " p3=" << p.T(3);
  return make_verdict("L1", w, tol, os.str());
}

Verdict l2_d3in(const BipartiteState& s, double tol) {
  const auto p = pt_moments(s, 3);
  const double p1 = p.T(1), p2 = p.T(2), p3 = p.T(3);
  const double w = 1.5 * p1 * p2 - 0.5 * p1 * p1 * p1 - p3;
  std::ostringstream os;
  os << "p1=" << p1 << " p2=" << p2 << " p3=" << p3;
  return make_verdict("L2", w, tol, os.str());
}

// Evaluated exactly as the inequality is usually quoted,
//   mu x^3 + (1 - mu x)^3 - p3 <= 0,  mu = 1/p2,
//   x = (mu + sqrt(mu [p2 (mu + 1) - 1])) / (mu (mu + 1)).
// Note the radicand is identically 1 in this form, so x = p2, mu x = 1 and
// the witness collapses to p2^2 - p3 (equal to L1 for trace-one states). The
// optimal bound of the original p3-OPPT work is a different expression.
Verdict l3_p3oppt(const BipartiteState& s, double tol) {
  const auto p = pt_moments(s, 3);
  const double p2 = p.T(2), p3 = p.T(3);
  if (!(p2 > 0.0)) throw ArgumentError("L3: p2 must be positive");
  const double mu = 1.0 / p2;
  double radicand = mu * (p2 * (mu + 1.0) - 1.0);
  if (radicand < 0.0) {
    if (radicand < -kRadicandClamp) {
      std::ostringstream os;
      os << "numerical-domain error: radicand " << radicand << " < 0";
      Verdict v = make_verdict("L3", 0.0, tol, os.str());
      v.decision = Decision::Inconclusive;
      v.witness = std::numeric_limits<double>::quiet_NaN();
      v.margin = std::numeric_limits<double>::quiet_NaN();
      return v;
    }
    radicand = 0.0;
  }
  const double x = (mu + std::sqrt(radicand)) / (mu * (mu + 1.0));
  const double y = 1.0 - mu * x;
  const double w = mu * x * x * x + y * y * y - p3;
  std::ostringstream os;
  os << "p2=" << p2 << " p3=" << p3 << " mu=" << mu << " x=" << x;
  return make_verdict("L3", w, tol, os.str());
}

Verdict l4_hankel(const BipartiteState& s, const PositiveMap& m, double tol) {
  const std::size_t n = s.dim();
  if (n < 3) throw ArgumentError("L4: needs dimA*dimB >= 3");
  const std::size_t lmax = (n - 1) / 2;
  const CMat out = m.kind() == MapKind::Transpose ? partial_transpose(s) : extend_and_apply(m, s);
  const auto raw = moments(out, 2 * lmax + 1);
  const double scale = spectral_scale(raw, n);
  const auto p = raw.scaled(scale);

  double worst = -std::numeric_limits<double>::infinity();
  std::size_t worst_l = 0;
  std::ostringstream os;
  os << "scale=" << scale << " min_eig:";
  std::vector<std::size_t> violating;
  for (std::size_t l = 1; l <= lmax; ++l) {
    const double lo = hermitian_eigenvalues(hankel_matrix(p, l)).front();
    os << " l" << l << "=" << lo;
    if (-lo > worst) {
      worst = -lo;
      worst_l = l;
    }
    if (-lo > tol) violating.push_back(l);
  }
  if (!violating.empty()) {
    os << "; violated for l =";
    for (auto l : violating) os << " " << l;
  }
  os << "; worst l=" << worst_l;
  return make_verdict(verdict_id(Criterion::L4, &m), worst, tol, os.str());
}

Verdict l4_hankel(const BipartiteState& s, double tol) { return l4_hankel(s, PositiveMap::transpose(s.dimB()), tol); }

Verdict l5_realign_moments(const BipartiteState& s, double tol) {
  const auto r = realignment_moments(s, 3);
  const double w = r.T(2) * r.T(2) - r.T(3);
  std::ostringstream os;
  os << "r2=" << r.T(2) << " r3=" << r.T(3);
  return make_verdict("L5", w, tol, os.str());
}

Verdict l6_rmoments(const BipartiteState& s, double tol) {
  const auto sv = singular_values(realign(s));
  const double smax = sv.front();
  std::size_t k = 0;
  double log_dk = 0.0;
  double t1 = 0.0;
  for (double sigma : sv) {
    t1 += sigma * sigma;
    if (sigma > kRankCutoff * smax) {
      ++k;
      log_dk += 2.0 * std::log(sigma);
    }
  }
  if (k == 0) throw NumericalError("L6: realigned matrix has no non-zero singular values");
  const double kd = static_cast<double>(k);
  const double dk = std::exp(log_dk);
  const double w = kd * (kd - 1.0) * std::exp(log_dk / kd) + t1 - 1.0;
  std::ostringstream os;
  os << "k=" << k << " D_k=" << dk << " T1=" << t1;
  return make_verdict("L6", w, tol, os.str());
}

Verdict ccnr_trace_norm(const BipartiteState& s, double tol) {
  const auto sv = singular_values(realign(s));
  double norm1 = 0.0;
  for (double sigma : sv) norm1 += sigma;
  std::ostringstream os;
  os.precision(17);
  os << "trace_norm=" << norm1;
  return make_verdict("CCNR", norm1 - 1.0, tol, os.str());
}

// A separable state maps to a PSD matrix, whose coefficients alternate:
// D_i <= 0 for odd i, D_i >= 0 for even i, with D_i = 0 past the rank. The
// witness is the largest signed violation of that pattern over the
// coefficients of the spectrum normalized to unit RMS eigenvalue.
Verdict theorem1_sign_pattern(const BipartiteState& s, const PositiveMap& m, double tol) {
  const CMat out = extend_and_apply(m, s);
  const std::size_t d = out.rows();
  const auto raw = moments(out, d);
  const double scale = spectral_scale(raw, d);
  const auto coeffs = charpoly_coeffs(raw.scaled(scale), d);

  double witness = -std::numeric_limits<double>::infinity();
  std::ostringstream viol;
  std::size_t nviol = 0;
  for (std::size_t i = 1; i <= d; ++i) {
    const double di = coeffs.D(i);
    const double v = (i % 2 == 1) ? di : -di;
    witness = std::max(witness, v);
    if (v > tol) {
      viol << " D" << i << "=" << di * std::pow(scale, static_cast<double>(i)) << " (normalized " << di << ")";
      ++nviol;
    }
  }
  std::ostringstream os;
  os << "d=" << d << " scale=" << scale;
  if (nviol)
    os << "; sign violations:" << viol.str();
  else
    os << "; sign pattern consistent";
  return make_verdict(verdict_id(Criterion::Theorem1, &m), witness, tol, os.str());
}

Verdict ppt_eigen_oracle(const BipartiteState& s, double tol) {
  const auto ev = hermitian_eigenvalues(partial_transpose(s));
  std::ostringstream os;
  os << "min_eig=" << ev.front();
  return make_verdict("PPT", -ev.front(), tol, os.str());
}

Verdict evaluate(Criterion c, const BipartiteState& s, const PositiveMap* m, double tol) {
  if (is_map_dependent(c) && !m) throw ArgumentError(criterion_name(c) + " requires a map");
  switch (c) {
    case Criterion::L1: return l1_p3ppt(s, tol);
    case Criterion::L2: return l2_d3in(s, tol);
    case Criterion::L3: return l3_p3oppt(s, tol);
    case Criterion::L4: return l4_hankel(s, *m, tol);
    case Criterion::L5: return l5_realign_moments(s, tol);
    case Criterion::L6: return l6_rmoments(s, tol);
    case Criterion::CCNR: return ccnr_trace_norm(s, tol);
    case Criterion::Theorem1: return theorem1_sign_pattern(s, *m, tol);
    case Criterion::PPT: return ppt_eigen_oracle(s, tol);
  }
  throw ArgumentError("unknown criterion");
}

CriterionReport evaluate_all(const BipartiteState& s, const std::vector<PositiveMap>& maps,
                             const std::vector<Criterion>& which, double tol, std::string descriptor) {
  std::vector<PositiveMap> used = maps;
  if (used.empty()) used.push_back(PositiveMap::transpose(s.dimB()));

  CriterionReport report;
  report.state = std::move(descriptor);
  for (const auto& m : used) report.maps.push_back(m.label());

  auto run = [&](Criterion c, const PositiveMap* m) {
    try {
      report.verdicts.push_back(evaluate(c, s, m, tol));
    } catch (const Error& e) {
      Verdict v;
      v.criterion = verdict_id(c, m);
      v.witness = std::numeric_limits<double>::quiet_NaN();
      v.margin = std::numeric_limits<double>::quiet_NaN();
      v.tol = tol;
      v.detail = std::string("error: ") + e.what();
      report.verdicts.push_back(std::move(v));
    }
  };
  for (Criterion c : which) {
    if (is_map_dependent(c))
      for (const auto& m : used) run(c, &m);
    else
      run(c, nullptr);
  }
  return report;
}

std::string report_to_json(const CriterionReport& r) {
  nlohmann::ordered_json j;
  j["state"] = r.state;
  j["maps"] = r.maps;
  j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts) {
    nlohmann::ordered_json jv;
    jv["criterion"] = v.criterion;
    jv["decision"] = decision_name(v.decision);
    jv["witness"] = v.witness;  // NaN serializes as null
    jv["margin"] = v.margin;
    jv["tol"] = v.tol;
    jv["detail"] = v.detail;
    j["verdicts"].push_back(std::move(jv));
  }
  return j.dump(2) + "\n";
}

}  // namespace entcert
