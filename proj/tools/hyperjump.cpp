// hyperjump: command-line front end for the witness toolkit.
//
// Exit codes: 0 success / VALID, 1 domain or verification failure, 2 usage.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "hyperjump/certificate.hpp"
#include "hyperjump/cone.hpp"
#include "hyperjump/designs.hpp"
#include "hyperjump/error.hpp"
#include "hyperjump/io.hpp"
#include "hyperjump/lagrangian.hpp"
#include "hyperjump/random.hpp"
#include "hyperjump/witness.hpp"

namespace {

using nlohmann::json;
namespace hj = hyperjump;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

// A report is a JSON document plus the rows of its plain-text table.
struct Report {
  json doc;
  std::vector<std::pair<std::string, std::string>> rows;

  void row(std::string key, std::string value) { rows.emplace_back(std::move(key), std::move(value)); }
};

struct OutputOptions {
  std::string out;
  bool json_only = false;
};

void add_output_options(CLI::App* app, OutputOptions& opts) {
  app->add_option("--out", opts.out, "Write the JSON report to this path");
  app->add_flag("--json", opts.json_only, "Print the JSON report instead of the table");
}

void print_table(const Report& report) {
  std::size_t width = 0;
  for (const auto& [key, value] : report.rows) width = std::max(width, key.size());
  for (const auto& [key, value] : report.rows) {
    std::cout << key << std::string(width - key.size() + 2, ' ') << value << '\n';
  }
}

void emit(const Report& report, const OutputOptions& opts) {
  if (opts.json_only) {
    std::cout << report.doc.dump(2) << '\n';
  } else {
    print_table(report);
  }
  if (!opts.out.empty()) hj::write_text(opts.out, report.doc.dump(2) + "\n");
}

// Analyze reports share this envelope; op-specific fields go under "result".
Report analyze_report(const std::string& op, json inputs, std::optional<double> worst_margin, long violations,
                      std::optional<std::uint64_t> seed, std::optional<long> grid_resolution) {
  Report r;
  r.doc = {{"op", op},
           {"inputs", std::move(inputs)},
           {"worst_margin", worst_margin ? json(*worst_margin) : json(nullptr)},
           {"violations", violations},
           {"seed", seed ? json(*seed) : json(nullptr)},
           {"grid_resolution", grid_resolution ? json(*grid_resolution) : json(nullptr)},
           {"result", json::object()}};
  r.row("op", op);
  if (worst_margin) r.row("worst_margin", fmt(*worst_margin));
  r.row("violations", std::to_string(violations));
  if (seed) r.row("seed", std::to_string(*seed));
  if (grid_resolution) r.row("grid_resolution", std::to_string(*grid_resolution));
  return r;
}

template <typename T>
void result(Report& r, const std::string& key, const T& value, std::string shown) {
  r.doc["result"][key] = value;
  r.row(key, std::move(shown));
}

// ---- sts / pair ------------------------------------------------------------

struct StsArgs {
  int t = 0;
  std::string method;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_sts(const StsArgs& a) {
  const hj::StsMethod method = a.method.empty() ? hj::default_method(a.t) : hj::parse_sts_method(a.method);
  const hj::SteinerTripleSystem sts = hj::build_sts(a.t, method, a.seed);
  if (!hj::is_steiner_triple_system(sts.triples)) {
    std::cerr << "error: construction is not a Steiner triple system\n";
    return kExitFailure;
  }
  std::vector<std::string> comments{" sts t=" + std::to_string(a.t) + " method=" + std::string(hj::to_string(method))};
  if (a.seed) comments.push_back(" seed=" + std::to_string(*a.seed));
  const std::string text = hj::format_3g(sts.triples, comments);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    hj::write_text(a.out, text);
    std::cerr << "wrote " << sts.triples.edge_count() << " triples to " << a.out << '\n';
  }
  return 0;
}

struct PairArgs {
  int t = 0;
  std::uint64_t seed = 0;
  int attempts = hj::kDefaultPairAttempts;
  int target = 0;
  int m = hj::kDefaultM;
  std::string out;
  OutputOptions output;
};

int cmd_pair(const PairArgs& a) {
  const int target = a.target > 0 ? a.target : std::min(hj::required_cogirth(a.m), hj::kCogirthSearchCap);
  const auto pair = hj::search_pair(a.t, target, a.attempts, hj::derive_seed(a.seed, "designs.search_pair"));
  if (!pair) throw hj::DomainError("no attempts were made");
  Report r;
  r.doc = {{"op", "pair"},
           {"t", a.t},
           {"seed", a.seed},
           {"target_cogirth", target},
           {"achieved_cogirth", pair->achieved_cogirth},
           {"edge_disjoint", pair->edge_disjoint},
           {"attempts_used", pair->attempts_used}};
  r.row("t", std::to_string(a.t));
  r.row("target_cogirth", std::to_string(target));
  r.row("achieved_cogirth", std::to_string(pair->achieved_cogirth));
  r.row("edge_disjoint", pair->edge_disjoint ? "yes" : "no");
  r.row("attempts_used", std::to_string(pair->attempts_used));
  emit(r, a.output);
  if (!a.out.empty()) {
    const std::string tag = " pair t=" + std::to_string(a.t) + " seed=" + std::to_string(a.seed);
    hj::write_text(a.out, hj::format_pair({{tag + " first"}, pair->first.triples},
                                          {{tag + " second"}, pair->second.triples}));
  }
  return pair->edge_disjoint ? 0 : kExitFailure;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  int t = 0;
  int m = hj::kDefaultM;
  std::uint64_t seed = 0;
  std::string out;
  std::string in;
  std::string check;
  std::string policy = "auto";
  long samples = hj::SubsetPolicy::kDefaultSamples;
  int restarts = 200;
  int attempts = hj::kDefaultPairAttempts;
  int spot_checks = 4;
};

int cmd_check(const std::string& path) {
  const hj::Reverification outcome = hj::reverify_certificate(hj::read_text(path));
  for (const std::string& p : outcome.problems) std::cout << "problem: " << p << '\n';
  std::cout << "lower_bound_exceeds  " << (outcome.lower_bound_exceeds ? "yes" : "no") << '\n';
  std::cout << "all_certified        " << (outcome.all_certified ? "yes" : "no") << '\n';
  std::cout << (outcome.ok ? "VALID" : "INVALID") << '\n';
  return outcome.ok ? 0 : kExitFailure;
}

int cmd_verify(const VerifyArgs& a) {
  if (!a.check.empty()) return cmd_check(a.check);

  hj::WitnessOptions options;
  options.max_attempts = a.attempts;
  options.policy.kind = hj::parse_policy_kind(a.policy);
  options.policy.samples = a.samples;

  hj::Witness w;
  if (!a.in.empty()) {
    w = hj::witness_from_system(hj::read_3g(a.in).graph, a.m, a.seed, options);
  } else {
    if (a.t == 0) throw CLI::RequiredError("--t or --in");
    w = hj::build_witness(a.t, a.m, a.seed, options);
  }
  const int t = w.certificate.t;
  hj::SubsetPolicy policy = options.policy;
  policy.seed = w.certificate.sampling_seed;

  const hj::LowerBoundReport lower = hj::certify_lower_bound(w.cone, t, a.restarts, a.seed);
  const hj::SmallSubgraphReport small =
      hj::certify_small_subgraphs(w.cone, w.system.graph, a.m, policy, a.spot_checks, a.seed);
  hj::complete_certificate(w.certificate, lower, small);
  const hj::WitnessCertificate& c = w.certificate;

  std::cout << "t                  " << t << '\n';
  std::cout << "m                  " << a.m << '\n';
  std::cout << "edges(S)           " << w.system.graph.edge_count() << '\n';
  std::cout << "edges(G)           " << w.cone.graph.edge_count() << '\n';
  std::cout << "cogirth            " << c.achieved_cogirth << " (required " << c.required_cogirth << ")\n";
  std::cout << "lower_bound        " << hj::to_string(c.lower_bound) << " ~ " << fmt(c.lower_bound.get_d()) << '\n';
  std::cout << "lower_bound_path   " << (lower.closed_form_path ? "closed_form" : "fallback") << '\n';
  if (lower.closed_form_path) {
    std::cout << "closed_form        " << (lower.closed_form_matches ? "matches" : "MISMATCH") << '\n';
  }
  std::cout << "exceeds 4/9        " << (lower.exceeds_target ? "yes" : "no") << '\n';
  std::cout << "|S| > t^2/4        " << (lower.exceeds_quarter_square ? "yes" : "no") << '\n';
  if (lower.search) {
    std::cout << "search numeric_max " << fmt(lower.search->numeric_max) << '\n';
    if (lower.improved) std::cout << "search lower_bound " << hj::to_string(lower.search->lower_bound) << '\n';
  }
  std::cout << "policy             " << hj::to_string(c.policy) << '\n';
  std::cout << "subsets_checked    " << c.subsets_checked << '\n';
  if (small.spot_checks > 0) {
    std::cout << "spot_check_max     " << fmt(small.spot_check_max) << (small.spot_checks_passed ? "" : " (ABOVE 4/9)")
              << '\n';
  }
  for (const hj::SubsetFailure& f : c.failures) {
    std::cout << "failure U={";
    for (std::size_t i = 0; i < f.subset.size(); ++i) std::cout << (i ? "," : "") << f.subset[i];
    std::cout << "} sparse=" << (f.sparse ? "yes" : "no") << " max_codegree=" << f.max_codegree << '\n';
  }
  std::cout << (c.valid ? "VALID" : "INVALID") << '\n';
  if (!a.out.empty()) hj::emit_certificate(c, a.out);
  return c.valid ? 0 : kExitFailure;
}

// ---- analyze ---------------------------------------------------------------

// Accepts "p/q", integers, or decimals.
double parse_number(const std::string& text) {
  if (text.find('/') != std::string::npos) return hj::parse_rational(text).get_d();
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw hj::FormatError("not a number: '" + text + "'");
  return value;
}

hj::ThreeGraph read_graph(const std::string& path) { return hj::read_3g(path).graph; }

struct AnalyzeArgs {
  std::string rho = "0.5";
  std::string q = "0";
  std::string b = "1";
  std::string in;
  std::uint64_t seed = 0;
  int samples = 10'000;
  int grid_steps = 10'000;
  long n_max = 10'000;
  int s_points = 1'000;
  int restarts = 200;
  double tol = 1e-10;
  std::string witness_out;
  OutputOptions output;
};

int analyze_tau(const AnalyzeArgs& a) {
  const double rho = parse_number(a.rho);
  const double value = hj::tau(rho);
  Report r = analyze_report("tau", {{"rho", a.rho}}, std::nullopt, 0, std::nullopt, std::nullopt);
  result(r, "tau", value, fmt(value));
  result(r, "branch", rho >= 5.0 / 9.0 ? "constant" : "root", rho >= 5.0 / 9.0 ? "constant" : "root");
  if (a.rho.find('/') != std::string::npos) {
    if (const auto exact = hj::tau_exact(hj::parse_rational(a.rho))) result(r, "tau_exact", hj::to_string(*exact), hj::to_string(*exact));
  }
  emit(r, a.output);
  return 0;
}

int analyze_phi(const AnalyzeArgs& a) {
  const double b = parse_number(a.b);
  const double q = parse_number(a.q);
  const double rho = parse_number(a.rho);
  const double value = hj::phi(b, q, rho);
  const double margin = value - 4.0 / 9.0;
  const bool in_hypothesis = q <= hj::tau(rho);
  const long violations = in_hypothesis && margin > 1e-10 ? 1 : 0;
  Report r = analyze_report("phi", {{"b", a.b}, {"q", a.q}, {"rho", a.rho}}, margin, violations, std::nullopt,
                            std::nullopt);
  result(r, "phi", value, fmt(value));
  result(r, "q_within_tau", in_hypothesis, in_hypothesis ? "yes" : "no");
  emit(r, a.output);
  return violations == 0 ? 0 : kExitFailure;
}

int analyze_apex_opt(const AnalyzeArgs& a) {
  const double q = parse_number(a.q);
  const double rho = parse_number(a.rho);
  const hj::ApexOptimum opt = hj::apex_optimum(q, rho);
  const double grid = hj::phi_grid_max(q, rho, a.grid_steps);
  const double margin = opt.value - 4.0 / 9.0;
  const long violations = q <= hj::tau(rho) && margin > 1e-10 ? 1 : 0;
  Report r = analyze_report("apex-opt", {{"q", a.q}, {"rho", a.rho}}, margin, violations, std::nullopt, a.grid_steps);
  result(r, "b_star", opt.b, fmt(opt.b));
  result(r, "value", opt.value, fmt(opt.value));
  result(r, "grid_max", grid, fmt(grid));
  result(r, "grid_gap", opt.value - grid, fmt(opt.value - grid));
  emit(r, a.output);
  return violations == 0 ? 0 : kExitFailure;
}

int analyze_threshold_sweep(const AnalyzeArgs& a) {
  const std::uint64_t seed = hj::derive_seed(a.seed, "cone.check_tau_threshold");
  const hj::ThresholdReport t = hj::check_tau_threshold(a.samples, seed, a.grid_steps);
  const long violations = t.violations + t.apex_mismatches;
  Report r = analyze_report("threshold-sweep", {{"samples", a.samples}}, t.worst_margin, violations, a.seed,
                            a.grid_steps);
  result(r, "phi_violations", t.violations, std::to_string(t.violations));
  result(r, "apex_mismatches", t.apex_mismatches, std::to_string(t.apex_mismatches));
  result(r, "worst_apex_gap", t.worst_apex_gap, fmt(t.worst_apex_gap));
  result(r, "worst_rho", t.worst_rho, fmt(t.worst_rho));
  result(r, "worst_q", t.worst_q, fmt(t.worst_q));
  emit(r, a.output);
  return violations == 0 ? 0 : kExitFailure;
}

int analyze_identity_sweep(const AnalyzeArgs& a) {
  const hj::IdentitySweep s = hj::identity_sweep(a.samples, hj::derive_seed(a.seed, "cone.identity_sweep"));
  const long violations = s.identity_failures + s.sign_failures;
  Report r = analyze_report("identity-sweep", {{"samples", a.samples}}, std::nullopt, violations, a.seed,
                            std::nullopt);
  result(r, "identity_failures", s.identity_failures, std::to_string(s.identity_failures));
  result(r, "sign_failures", s.sign_failures, std::to_string(s.sign_failures));
  result(r, "above_threshold", s.above_threshold, std::to_string(s.above_threshold));
  const hj::Sqrt3Number g = hj::g_at_threshold();
  const std::string g_text = hj::to_string(g.rational_part()) + " + (" + hj::to_string(g.sqrt3_part()) + ")*sqrt(3)";
  result(r, "g_at_threshold", g_text, g_text);
  emit(r, a.output);
  return violations == 0 ? 0 : kExitFailure;
}

int analyze_inequality_sweep(const AnalyzeArgs& a) {
  const hj::InequalitySweep s = hj::inequality_sweep(a.n_max, a.s_points);
  Report r = analyze_report("inequality-sweep", {{"n_max", a.n_max}, {"s_points", a.s_points}}, s.min_margin,
                            s.violations, std::nullopt, a.s_points);
  result(r, "evaluations", s.evaluations, std::to_string(s.evaluations));
  result(r, "worst_n", s.worst_n, std::to_string(s.worst_n));
  result(r, "worst_s", s.worst_s, fmt(s.worst_s));
  emit(r, a.output);
  return s.violations == 0 ? 0 : kExitFailure;
}

hj::SearchOptions search_options(const AnalyzeArgs& a, const char* stream) {
  hj::SearchOptions o;
  o.restarts = a.restarts;
  o.seed = hj::derive_seed(a.seed, stream);
  o.tolerance = a.tol;
  return o;
}

int analyze_one27(const AnalyzeArgs& a) {
  const hj::OneOver27Report o = hj::check_one_over_27(read_graph(a.in), search_options(a, "cone.check_one_over_27"));
  const double margin = o.max_q - 1.0 / 27.0;
  Report r = analyze_report("one27", {{"in", a.in}, {"restarts", a.restarts}}, margin, o.holds ? 0 : 1, a.seed,
                            std::nullopt);
  result(r, "max_q", o.max_q, fmt(o.max_q));
  result(r, "witness_q", hj::to_string(o.witness_q), hj::to_string(o.witness_q));
  result(r, "holds", o.holds, o.holds ? "yes" : "no");
  emit(r, a.output);
  return o.holds ? 0 : kExitFailure;
}

int analyze_qtau(const AnalyzeArgs& a) {
  const hj::FalsificationResult f = hj::falsify_q_tau(read_graph(a.in), search_options(a, "cone.falsify_q_tau"));
  const long violations = f.counterexample ? 1 : 0;
  Report r = analyze_report("qtau", {{"in", a.in}, {"restarts", a.restarts}}, f.best_gap, violations, a.seed,
                            std::nullopt);
  result(r, "hypotheses_violated", f.hypotheses_violated, f.hypotheses_violated ? "yes" : "no");
  result(r, "sparse", f.sparse, f.sparse ? "yes" : "no");
  result(r, "max_codegree", f.max_codegree, std::to_string(f.max_codegree));
  result(r, "best_gap", f.best_gap, fmt(f.best_gap));
  if (f.counterexample) {
    json weights = json::array();
    for (const auto& w : f.counterexample->exact()) weights.push_back(hj::to_string(w));
    r.doc["result"]["counterexample"] = weights;
    r.row("counterexample", "found");
  } else {
    r.row("counterexample", "none");
  }
  emit(r, a.output);
  // A counterexample on a graph outside the hypotheses is expected, not a failure.
  return violations == 0 || f.hypotheses_violated ? 0 : kExitFailure;
}

int analyze_lagrangian(const AnalyzeArgs& a) {
  const hj::ThreeGraph graph = read_graph(a.in);
  hj::LagrangianOptions o;
  o.restarts = a.restarts;
  o.seed = hj::derive_seed(a.seed, "lagrangian.maximize");
  o.tolerance = a.tol;
  const hj::LagrangianEstimate e = hj::maximize_lagrangian(graph, o);
  Report r = analyze_report("lagrangian", {{"in", a.in}, {"restarts", a.restarts}, {"tol", a.tol}}, std::nullopt, 0,
                            a.seed, std::nullopt);
  result(r, "numeric_max", e.numeric_max, fmt(e.numeric_max));
  result(r, "lower_bound", hj::to_string(e.lower_bound), hj::to_string(e.lower_bound));
  result(r, "converged", e.converged, e.converged ? "yes" : "no");
  result(r, "restarts_used", e.restarts_used, std::to_string(e.restarts_used));
  emit(r, a.output);
  if (!a.witness_out.empty()) hj::write_text(a.witness_out, hj::lagrangian_witness_json(graph, e, a.seed) + "\n");
  return 0;
}

int analyze_cone_bound(const AnalyzeArgs& a) {
  hj::LagrangianOptions o;
  o.restarts = a.restarts;
  o.seed = hj::derive_seed(a.seed, "cone.certify_cone_bound");
  const hj::ConeBoundCertificate c = hj::certify_cone_bound(read_graph(a.in), true, o);
  const bool certified = c.status == hj::ConeBoundStatus::certified;
  Report r = analyze_report("cone-bound", {{"in", a.in}, {"restarts", a.restarts}}, std::nullopt,
                            c.cross_check_passed ? 0 : 1, a.seed, std::nullopt);
  result(r, "status", certified ? "CERTIFIED" : "NOT_APPLICABLE", certified ? "CERTIFIED" : "NOT_APPLICABLE");
  result(r, "sparse", c.sparse, c.sparse ? "yes" : "no");
  result(r, "max_codegree", c.max_codegree, std::to_string(c.max_codegree));
  if (c.numeric_max) result(r, "numeric_max", *c.numeric_max, fmt(*c.numeric_max));
  emit(r, a.output);
  return c.cross_check_passed ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build and check finite Lagrangian-density witnesses around 4/9"};
  app.set_config("--config", "", "Read options from a key=value file; flags override");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  int exit_code = 0;
  auto guard = [&exit_code](auto&& body) {
    return [&exit_code, body]() { exit_code = body(); };
  };

  StsArgs sts_args;
  CLI::App* sts = app.add_subcommand("sts", "Build a Steiner triple system");
  sts->add_option("--t", sts_args.t, "Order (1 or 3 mod 6, 7..33)")->required();
  sts->add_option("--method", sts_args.method, "bose | skolem | cyclic | search")
      ->check(CLI::IsMember({"bose", "skolem", "cyclic", "search"}));
  sts->add_option("--seed", sts_args.seed, "Apply a seeded random relabelling");
  sts->add_option("--out", sts_args.out, "Output .3g path (stdout when omitted)");
  sts->callback(guard([&] { return cmd_sts(sts_args); }));

  PairArgs pair_args;
  CLI::App* pair = app.add_subcommand("pair", "Search for an edge-disjoint pair of Steiner triple systems");
  pair->add_option("--t", pair_args.t, "Order")->required();
  pair->add_option("--seed", pair_args.seed, "Root seed");
  pair->add_option("--attempts", pair_args.attempts, "Attempt budget")->check(CLI::NonNegativeNumber);
  pair->add_option("--target", pair_args.target, "Target cogirth (default from --m)");
  pair->add_option("--m", pair_args.m, "Subgraph order the target is derived from")->check(CLI::Range(3, 64));
  pair->add_option("--pair-out", pair_args.out, "Write both systems to this path");
  add_output_options(pair, pair_args.output);
  pair->callback(guard([&] { return cmd_pair(pair_args); }));

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Build and certify a witness, or re-check a certificate");
  verify->add_option("--t", verify_args.t, "Order of the internal system");
  verify->add_option("--m", verify_args.m, "Subgraph order")->check(CLI::Range(3, 64));
  verify->add_option("--seed", verify_args.seed, "Root seed");
  verify->add_option("--out", verify_args.out, "Certificate JSON path");
  verify->add_option("--in", verify_args.in, "Use this .3g system instead of building one");
  verify->add_option("--check", verify_args.check, "Re-verify an existing certificate");
  verify->add_option("--policy", verify_args.policy, "Subset policy")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  verify->add_option("--samples", verify_args.samples, "Sample count for sampled policy")->check(CLI::PositiveNumber);
  verify->add_option("--restarts", verify_args.restarts, "Maximizer restarts on G (0 disables)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--attempts", verify_args.attempts, "Pair search budget")->check(CLI::PositiveNumber);
  verify->add_option("--spot-checks", verify_args.spot_checks, "Numeric spot checks")->check(CLI::NonNegativeNumber);
  verify->callback(guard([&] { return cmd_verify(verify_args); }));

  AnalyzeArgs an;
  CLI::App* analyze = app.add_subcommand("analyze", "Run one cone or Lagrangian analysis");
  analyze->require_subcommand(1);
  auto op = [&](const char* name, const char* help, int (*fn)(const AnalyzeArgs&)) {
    CLI::App* sub = analyze->add_subcommand(name, help);
    add_output_options(sub, an.output);
    sub->callback(guard([&an, fn] { return fn(an); }));
    return sub;
  };
  CLI::App* tau_cmd = op("tau", "Threshold tau(rho)", analyze_tau);
  tau_cmd->add_option("--rho", an.rho, "rho in [0, 1], decimal or p/q")->required();
  CLI::App* phi_cmd = op("phi", "Apex polynomial Phi(b; q, rho)", analyze_phi);
  phi_cmd->add_option("--b", an.b)->required();
  phi_cmd->add_option("--q", an.q)->required();
  phi_cmd->add_option("--rho", an.rho)->required();
  CLI::App* apex_cmd = op("apex-opt", "Closed-form maximizer of Phi against a grid", analyze_apex_opt);
  apex_cmd->add_option("--q", an.q)->required();
  apex_cmd->add_option("--rho", an.rho)->required();
  apex_cmd->add_option("--grid-steps", an.grid_steps)->check(CLI::PositiveNumber);
  CLI::App* sweep_cmd = op("threshold-sweep", "Random (rho, q <= tau) samples against 4/9", analyze_threshold_sweep);
  sweep_cmd->add_option("--samples", an.samples)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", an.seed);
  sweep_cmd->add_option("--grid-steps", an.grid_steps)->check(CLI::PositiveNumber);
  CLI::App* id_cmd = op("identity-sweep", "Exact polynomial identity at random rationals", analyze_identity_sweep);
  id_cmd->add_option("--samples", an.samples)->check(CLI::PositiveNumber);
  id_cmd->add_option("--seed", an.seed);
  CLI::App* ineq_cmd = op("inequality-sweep", "N A + 2B >= rho sqrt(3N - 6) over a grid", analyze_inequality_sweep);
  ineq_cmd->add_option("--n-max", an.n_max)->check(CLI::Range(3L, 100'000'000L));
  ineq_cmd->add_option("--s-points", an.s_points)->check(CLI::PositiveNumber);
  for (auto [name, help, fn] : {std::tuple{"one27", "Largest q(z) on a sparse graph", analyze_one27},
                                std::tuple{"qtau", "Search for q(z) > tau(rho(z))", analyze_qtau},
                                std::tuple{"lagrangian", "Maximize the Lagrangian", analyze_lagrangian},
                                std::tuple{"cone-bound", "Structural 4/9 bound for cone(Q)", analyze_cone_bound}}) {
    CLI::App* sub = op(name, help, fn);
    sub->add_option("--in", an.in, "Input .3g")->required()->check(CLI::ExistingFile);
    sub->add_option("--restarts", an.restarts)->check(CLI::PositiveNumber);
    sub->add_option("--seed", an.seed);
    sub->add_option("--tol", an.tol)->check(CLI::PositiveNumber);
    if (std::string(name) == "lagrangian") sub->add_option("--witness-out", an.witness_out, "Witness JSON path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const hj::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return exit_code;
}
