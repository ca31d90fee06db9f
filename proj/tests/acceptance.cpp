// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hyperjump/certificate.hpp"
#include "hyperjump/cone.hpp"
#include "hyperjump/designs.hpp"
#include "hyperjump/error.hpp"
#include "hyperjump/lagrangian.hpp"
#include "hyperjump/sparsity.hpp"
#include "hyperjump/witness.hpp"
#include "support/enumerate.hpp"

namespace hj = hyperjump;
namespace ht = hyperjump::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Detail {
 public:
  template <typename T>
  Detail& operator<<(const T& v) {
    out_ << v;
    return *this;
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

bool is_sparse_brute(const hj::ThreeGraph& g) {
  return hj::check_sparse(g, hj::SparsityMode::brute).is_sparse;
}

bool hypotheses_hold(const hj::ThreeGraph& g) {
  return hj::codegree_profile(g).max_codegree() <= 2 && is_sparse_brute(g);
}

Outcome witness_bounds() {
  Outcome o;
  Detail d;
  for (int t : {13, 9, 15}) {
    const auto start = std::chrono::steady_clock::now();
    hj::Witness w = hj::build_witness(t, 4, 7);
    const hj::LowerBoundReport lower = hj::certify_lower_bound(w.cone, t, 200, 7);
    hj::SubsetPolicy policy;
    policy.kind = hj::PolicyKind::exhaustive;
    const hj::SmallSubgraphReport small =
        hj::certify_small_subgraphs(w.cone, w.system.graph, 4, policy, 4, 7);
    hj::complete_certificate(w.certificate, lower, small);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    hj::Rational expected = hj::Rational(4, 9) + hj::Rational(4, 27 * t) - hj::Rational(16, 27 * t * t);
    expected.canonicalize();
    const long subsets = hj::subset_count(t, 4);
    const bool ok = lower.value == expected && lower.value > hj::Rational(4, 9) && lower.closed_form_path &&
                    small.subsets_checked == subsets && small.all_certified && w.certificate.valid &&
                    secs < 10.0;
    o.ok = o.ok && ok;
    d << "t=" << t << " lb=" << hj::to_string(lower.value) << " subsets=" << small.subsets_checked << " "
      << (w.certificate.valid ? "VALID" : "INVALID") << " " << secs << "s; ";
  }
  o.detail = d.str();
  return o;
}

Outcome tau_boundaries() {
  const double t59 = hj::tau(5.0 / 9.0);
  const double root59 = hj::tau_root_branch(5.0 / 9.0);
  const double r0 = hj::rho0().to_double();
  const double t0 = hj::tau(r0);
  const bool exact = hj::tau_at_rho0() == hj::Sqrt3Number(hj::Rational(1, 27));
  Outcome o;
  o.ok = std::abs(t59 - 2.0 / 27.0) < 1e-12 && std::abs(root59 - 2.0 / 27.0) < 1e-12 &&
         std::abs(t0 - 1.0 / 27.0) < 1e-12 && exact;
  Detail d;
  d << "tau(5/9)=" << t59 << " root(5/9)=" << root59 << " tau(rho0)=" << t0 << " exact=" << exact;
  o.detail = d.str();
  return o;
}

Outcome threshold_sweep() {
  const hj::ThresholdReport r = hj::check_tau_threshold(10'000, 20260101, 10'000);
  Outcome o;
  o.ok = r.samples == 10'000 && r.violations == 0 && r.apex_mismatches == 0 && r.worst_apex_gap <= 1e-8;
  Detail d;
  d << "violations=" << r.violations << " worst_margin=" << r.worst_margin << " apex_gap=" << r.worst_apex_gap;
  o.detail = d.str();
  return o;
}

Outcome polynomial_identity() {
  const hj::IdentitySweep s = hj::identity_sweep(100, 20260102);
  const hj::Sqrt3Number g = hj::g_at_threshold();
  const hj::Sqrt3Number expected(hj::Rational(58, 27), hj::Rational(-33, 27));
  const double numeric = (58.0 - 33.0 * std::sqrt(3.0)) / 27.0;
  Outcome o;
  o.ok = s.samples == 100 && s.identity_failures == 0 && s.sign_failures == 0 && g == expected &&
         std::abs(g.to_double() - numeric) < 1e-12;
  Detail d;
  d << "identity_failures=" << s.identity_failures << " sign_failures=" << s.sign_failures
    << " g(s0)=" << g.to_double();
  o.detail = d.str();
  return o;
}

Outcome inequality_sweep() {
  const hj::InequalitySweep s = hj::inequality_sweep(10'000, 1'000);
  Outcome o;
  o.ok = s.violations == 0 && s.evaluations == 9'998L * 1'000L;
  Detail d;
  d << "evaluations=" << s.evaluations << " violations=" << s.violations << " min_margin=" << s.min_margin;
  o.detail = d.str();
  return o;
}

Outcome one_over_27() {
  Outcome o;
  int graphs = 0;
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    for (const hj::ThreeGraph& q : ht::isomorphism_classes(n, is_sparse_brute)) {
      hj::SearchOptions opt;
      opt.seed = static_cast<std::uint64_t>(1000 * n + graphs);
      const hj::OneOver27Report r = hj::check_one_over_27(q, opt);
      ++graphs;
      worst = std::max(worst, r.max_q);
      if (!r.holds || r.max_q > 1.0 / 27.0 + 1e-9) o.ok = false;
    }
  }
  const double single = hj::check_one_over_27(ht::single_triple()).max_q;
  const double sharing = hj::check_one_over_27(ht::two_triples_sharing_pair()).max_q;
  o.ok = o.ok && std::abs(single - 1.0 / 27.0) < 1e-6 && std::abs(sharing - 1.0 / 27.0) < 1e-6;
  Detail d;
  d << "sparse classes=" << graphs << " max_q=" << worst << " single=" << single << " sharing=" << sharing;
  o.detail = d.str();
  return o;
}

Outcome q_tau_falsification() {
  Outcome o;
  int graphs = 0;
  int found = 0;
  double worst_gap = -1.0;
  for (int n = 1; n <= 7; ++n) {
    for (const hj::ThreeGraph& q : ht::isomorphism_classes(n, hypotheses_hold)) {
      hj::SearchOptions opt;
      opt.restarts = 200;
      opt.seed = static_cast<std::uint64_t>(graphs);
      const hj::FalsificationResult r = hj::falsify_q_tau(q, opt);
      ++graphs;
      if (r.counterexample || r.hypotheses_violated) ++found;
      if (q.edge_count() > 0) worst_gap = std::max(worst_gap, r.best_gap);
    }
  }
  const hj::ThreeGraph k4 = ht::k4();
  const auto [q_uniform, rho_uniform] = hj::q_of(k4, hj::WeightVector::uniform(4));
  const bool uniform_beats = q_uniform == hj::Rational(1, 16) && rho_uniform == hj::Rational(1, 4) &&
                             q_uniform.get_d() > hj::tau(0.25);
  const hj::FalsificationResult k4r = hj::falsify_q_tau(k4);
  o.ok = found == 0 && graphs > 0 && uniform_beats && k4r.counterexample.has_value() && k4r.hypotheses_violated;
  Detail d;
  d << "hypothesis classes=" << graphs << " counterexamples=" << found << " best_gap=" << worst_gap
    << "; K4 uniform q=1/16 tau(1/4)=" << hj::tau(0.25) << " found=" << k4r.counterexample.has_value();
  o.detail = d.str();
  return o;
}

Outcome solver_vs_oracle() {
  Outcome o;
  int graphs = 0;
  double worst = 0.0;
  std::map<std::pair<int, std::uint64_t>, double> oracle_cache;
  for (int n = 1; n <= 5; ++n) {
    for (const hj::ThreeGraph& g : ht::all_labelled_graphs(n)) {
      hj::LagrangianOptions opt;
      opt.restarts = 20;
      opt.seed = static_cast<std::uint64_t>(graphs);
      const double numeric = hj::maximize_lagrangian(g, opt).numeric_max;
      // the lattice is permutation invariant, so one oracle run per class
      const auto key = std::make_pair(n, ht::canonical_key(g));
      auto it = oracle_cache.find(key);
      if (it == oracle_cache.end()) it = oracle_cache.emplace(key, hj::grid_oracle(g, 300)).first;
      const double grid = it->second;
      worst = std::max(worst, std::abs(numeric - grid));
      ++graphs;
    }
  }
  const double single = hj::maximize_lagrangian(ht::single_triple()).numeric_max;
  const double k4 = hj::maximize_lagrangian(ht::k4()).numeric_max;
  o.ok = worst <= 2e-3 && std::abs(single - 2.0 / 9.0) < 1e-6 && std::abs(k4 - 3.0 / 8.0) < 1e-6;
  Detail d;
  d << "labelled graphs=" << graphs << " oracle classes=" << oracle_cache.size() << " max|numeric-grid|=" << worst << " single=" << single << " K4=" << k4;
  o.detail = d.str();
  return o;
}

Outcome designs() {
  Outcome o;
  Detail d;
  int systems = 0;
  for (int t : hj::supported_orders()) {
    for (hj::StsMethod m : {hj::StsMethod::bose, hj::StsMethod::skolem, hj::StsMethod::cyclic}) {
      try {
        const hj::SteinerTripleSystem s = hj::build_sts(t, m);
        ++systems;
        if (!hj::is_steiner_triple_system(s.triples)) {
          o.ok = false;
          d << "t=" << t << " " << hj::to_string(m) << " fails coverage; ";
        }
      } catch (const hj::Error&) {
        // method does not apply to this order
      }
    }
  }
  d << "systems=" << systems << "; ";
  for (int t : {7, 9, 13, 15}) {
    const auto pair = hj::search_pair(t, 3, 10'000, 2026);
    if (!pair || !pair->edge_disjoint || pair->achieved_cogirth < 3) {
      o.ok = false;
      d << "t=" << t << " no disjoint pair; ";
      continue;
    }
    const hj::ThreeGraph u = hj::edge_union(pair->first.triples, pair->second.triples);
    const hj::CodegreeProfile cp(u);
    const bool ok = static_cast<int>(u.edge_count()) == t * (t - 1) / 3 && cp.min_codegree() == 2 &&
                    cp.max_codegree() == 2;
    o.ok = o.ok && ok;
    d << "t=" << t << " attempts=" << pair->attempts_used << (ok ? " ok" : " BAD") << "; ";
  }
  o.detail = d.str();
  return o;
}

Outcome sparsity_equivalence() {
  Outcome o;
  long checked = 0;
  long disagreements = 0;
  auto compare = [&](const hj::ThreeGraph& g) {
    const hj::SparsityVerdict exact = hj::check_sparse(g, hj::SparsityMode::exact);
    const hj::SparsityVerdict brute = hj::check_sparse(g, hj::SparsityMode::brute);
    ++checked;
    if (exact.is_sparse != brute.is_sparse || exact.excess != brute.excess) ++disagreements;
  };
  for (int n = 0; n <= 5; ++n) {
    for (const hj::ThreeGraph& g : ht::all_labelled_graphs(n)) compare(g);
  }
  hj::Rng rng(20260110);
  for (int i = 0; i < 10'000; ++i) {
    const int n = 1 + static_cast<int>(rng.below(8));
    // mostly sparse-ish densities so both verdicts occur
    const double p = rng.uniform() * rng.uniform();
    compare(ht::random_graph(n, p, rng));
  }
  o.ok = disagreements == 0;
  Detail d;
  d << "graphs=" << checked << " disagreements=" << disagreements;
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "witness lower bound t=13,9,15", 30.0, witness_bounds},
      {2, "tau boundary values", 1.0, tau_boundaries},
      {3, "tau threshold sweep", 60.0, threshold_sweep},
      {4, "exact polynomial identity", 1.0, polynomial_identity},
      {5, "inequality impossibility sweep", 30.0, inequality_sweep},
      {6, "q <= 1/27 on sparse graphs, n <= 6", 300.0, one_over_27},
      {7, "q - tau falsification, n <= 7", 600.0, q_tau_falsification},
      {8, "solver vs grid oracle, n <= 5", 120.0, solver_vs_oracle},
      {9, "designs and disjoint pairs", 120.0, designs},
      {10, "sparsity oracle equivalence", 120.0, sparsity_equivalence},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs < c.budget_seconds;
    const bool pass = o.ok && in_budget;
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s (%.2fs, budget %.0fs%s) %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.budget_seconds, in_budget ? "" : ", OVER BUDGET", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
