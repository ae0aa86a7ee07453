// entcert: evaluate entanglement criteria on state files, scan the 3x3 PPT
// family for detection thresholds, and generate example states.
//
// Exit codes: 0 success, 2 validation error, 3 numerical failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"

#include "entcert/bipartite.hpp"
#include "entcert/criteria.hpp"
#include "entcert/maps.hpp"
#include "entcert/scan.hpp"

namespace {

using namespace entcert;

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

std::vector<PositiveMap> resolve_maps(const std::vector<std::string>& specs, std::size_t dimB) {
  std::vector<PositiveMap> maps;
  for (const auto& spec : specs) {
    if (PositiveMap::is_builtin_name(spec)) {
      maps.push_back(PositiveMap::builtin(spec, dimB));
      continue;
    }
    auto m = superop_from_file(spec);
    if (m.dimB() != dimB)
      throw ValidationError(spec + ": map acts on dimension " + std::to_string(m.dimB()) + " but the state has dimB = " +
                            std::to_string(dimB));
    std::cerr << "note: map " << spec << " is user supplied; its positivity is assumed, not verified\n";
    maps.push_back(std::move(m));
  }
  return maps;
}

std::string fmt(double v, int prec = 6) {
  if (v == 0.0) v = 0.0;
  std::ostringstream os;
  os << std::setprecision(prec) << v;
  return os.str();
}

std::string report_table(const CriterionReport& r) {
  std::ostringstream os;
  os << "state: " << r.state << "\nmaps:";
  for (const auto& m : r.maps) os << " " << m;
  os << "\n\n";
  os << std::left << std::setw(22) << "criterion" << std::setw(14) << "decision" << std::setw(16) << "witness"
     << "detail\n";
  for (const auto& v : r.verdicts)
    os << std::left << std::setw(22) << v.criterion << std::setw(14) << decision_name(v.decision) << std::setw(16)
       << fmt(v.witness) << v.detail << "\n";
  os << "\nentangled by:";
  const auto ids = r.entangled_ids();
  if (ids.empty()) os << " none";
  for (const auto& id : ids) os << " " << id;
  os << "\n";
  return os.str();
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ValidationError("--range must look like lo:hi, got \"" + text + "\"");
  try {
    std::size_t used = 0;
    const std::string lo_s = text.substr(0, colon), hi_s = text.substr(colon + 1);
    const double lo = std::stod(lo_s, &used);
    if (used != lo_s.size()) throw std::invalid_argument(lo_s);
    const double hi = std::stod(hi_s, &used);
    if (used != hi_s.size()) throw std::invalid_argument(hi_s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ValidationError("--range must look like lo:hi, got \"" + text + "\"");
  }
}

struct EvaluateArgs {
  std::string state;
  std::vector<std::string> maps;
  std::string criteria = "all";
  std::string out;
  std::string format = "table";
  double tol = kDefaultTol;
};

int run_evaluate(const EvaluateArgs& args) {
  const auto state = load_state(args.state);
  const std::vector<std::string> specs = args.maps.empty() ? std::vector<std::string>{"transpose"} : args.maps;
  const auto maps = resolve_maps(specs, state.dimB());
  const auto report = evaluate_all(state, maps, parse_criteria(args.criteria), args.tol, args.state);
  const std::string json = report_to_json(report);
  if (!args.out.empty()) write_or_print(args.out, json);
  if (args.format == "json")
    std::cout << json;
  else
    std::cout << report_table(report);
  for (const auto& v : report.verdicts)
    if (v.detail.rfind("error:", 0) == 0) return kExitNumerical;
  return 0;
}

struct ScanArgs {
  std::string family = "paper-ppt";
  std::string range = "0.5:1.5";
  double step = 0.01;
  std::string criteria = "all";
  std::vector<std::string> maps;
  std::string out;
  std::string format = "table";
  double tol = kDefaultTol;
};

int run_scan(const ScanArgs& args) {
  ScanOptions opts;
  opts.family = args.family;
  std::tie(opts.lo, opts.hi) = parse_range(args.range);
  opts.step = args.step;
  opts.criteria = parse_criteria(args.criteria);
  opts.maps = resolve_maps(args.maps.empty() ? std::vector<std::string>{"gamma"} : args.maps, 3);
  opts.tol = args.tol;
  const auto result = scan_family(opts);
  const std::string csv = scan_to_csv(result);
  if (!args.out.empty()) write_or_print(args.out, csv);
  if (args.format == "csv") {
    std::cout << csv;
    return 0;
  }
  std::cout << "family " << opts.family << ", a in [" << opts.lo << ", " << opts.hi << "], step " << opts.step
            << ", " << result.grid.size() << " grid points\n\n";
  std::cout << std::left << std::setw(22) << "criterion" << std::setw(16) << "threshold" << std::setw(12)
            << "bisections" << "grid entangled\n";
  for (const auto& r : result.results)
    std::cout << std::left << std::setw(22) << r.criterion << std::setw(16)
              << (r.threshold ? fmt(*r.threshold, 8) : std::string("none")) << std::setw(12) << r.iterations
              << r.grid_entangled << "/" << r.grid_points << "\n";
  return 0;
}

struct GenerateArgs {
  std::string kind;
  double a = 1.0;
  double p = 0.0;
  std::size_t dimA = 2;
  std::size_t dimB = 2;
  std::size_t terms = 4;
  std::uint64_t seed = 0;
  std::string out;
};

int run_generate(const GenerateArgs& args) {
  std::optional<BipartiteState> s;
  if (args.kind == "paper-ppt")
    s = paper_ppt_family(args.a);
  else if (args.kind == "werner")
    s = werner_state(args.p);
  else if (args.kind == "bell")
    s = bell_state();
  else if (args.kind == "max-mixed")
    s = maximally_mixed(args.dimA, args.dimB);
  else if (args.kind == "random-separable")
    s = random_separable(args.dimA, args.dimB, args.terms, args.seed);
  else
    throw ValidationError("unknown state kind \"" + args.kind +
                          "\" (expected paper-ppt, werner, bell, max-mixed, random-separable)");
  write_or_print(args.out, state_to_json(*s));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement certification from moments of positive maps"};
  app.require_subcommand(1);

  EvaluateArgs ev;
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate criteria on a state file");
  evaluate->add_option("--state", ev.state, "State file (JSON)")->required();
  evaluate->add_option("--map", ev.maps, "Builtin map (transpose, gamma, reduction) or map file; repeatable");
  evaluate->add_option("--criteria", ev.criteria, "Comma list of L1..L6, CCNR, theorem1, PPT, or all");
  evaluate->add_option("--out", ev.out, "Write the JSON report here");
  evaluate->add_option("--format", ev.format, "stdout format")->check(CLI::IsMember({"table", "json"}));
  evaluate->add_option("--tol", ev.tol, "Decision tolerance");

  ScanArgs sc;
  auto* scan = app.add_subcommand("scan", "Scan a state family for detection thresholds");
  scan->add_option("--family", sc.family, "State family")->check(CLI::IsMember({"paper-ppt"}));
  scan->add_option("--range", sc.range, "Parameter range lo:hi");
  scan->add_option("--step", sc.step, "Grid step");
  scan->add_option("--criteria", sc.criteria, "Comma list of criteria, or all");
  scan->add_option("--map", sc.maps, "Map(s) for L4 and theorem1 (default gamma)");
  scan->add_option("--out", sc.out, "Write the CSV here");
  scan->add_option("--format", sc.format, "stdout format")->check(CLI::IsMember({"table", "csv"}));
  scan->add_option("--tol", sc.tol, "Decision tolerance");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write an example state file");
  generate->add_option("kind", gen.kind, "paper-ppt, werner, bell, max-mixed, random-separable")->required();
  generate->add_option("--a", gen.a, "paper-ppt parameter (>= 0.5)");
  generate->add_option("--p", gen.p, "werner mixing parameter in [0, 1]");
  generate->add_option("--dimA", gen.dimA, "Subsystem A dimension");
  generate->add_option("--dimB", gen.dimB, "Subsystem B dimension");
  generate->add_option("--terms", gen.terms, "Number of product terms (random-separable)");
  generate->add_option("--seed", gen.seed, "PRNG seed (random-separable)");
  generate->add_option("--out", gen.out, "Output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (*evaluate) return run_evaluate(ev);
    if (*scan) return run_scan(sc);
    if (*generate) return run_generate(gen);
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
