#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>

#include "hyperjump/configuration.hpp"
#include "hyperjump/designs.hpp"
#include "hyperjump/digest.hpp"
#include "hyperjump/error.hpp"
#include "hyperjump/graph.hpp"
#include "hyperjump/io.hpp"
#include "hyperjump/parallel.hpp"
#include "hyperjump/random.hpp"
#include "hyperjump/rational.hpp"
#include "hyperjump/sparsity.hpp"
#include "hyperjump/subsets.hpp"
#include "support/enumerate.hpp"

namespace hyperjump {
namespace {

using testing::graph_of;

// ---- rational / random / digest ---------------------------------------------

TEST(Rational, ParseAndFormatRoundTrip) {
  EXPECT_EQ(parse_rational("688/1521"), Rational(688, 1521));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_THROW(parse_rational("1/0"), FormatError);
  EXPECT_THROW(parse_rational("0.5"), FormatError);
  EXPECT_THROW(parse_rational(""), FormatError);
  EXPECT_THROW(parse_rational("1/2x"), FormatError);
}

TEST(Rational, NearestConvergentRecoversSmallFractions) {
  EXPECT_EQ(nearest_convergent(1.0 / 3.0, 1'000'000), Rational(1, 3));
  EXPECT_EQ(nearest_convergent(2.0 / 39.0, 1'000'000), Rational(2, 39));
  EXPECT_EQ(nearest_convergent(0.0, 10), Rational(0));
  EXPECT_EQ(nearest_convergent(3.14159265358979, 10), Rational(22, 7));
  const Rational r = nearest_convergent(0.123456789, 1000);
  EXPECT_LE(r.get_den(), 1000);
}

TEST(Rational, Binomial) {
  EXPECT_EQ(binomial(13, 4), 715);
  EXPECT_EQ(binomial(21, 3), 1330);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Random, StreamsAreDeterministicAndDistinct) {
  EXPECT_EQ(derive_seed(7, "designs.search_pair"), derive_seed(7, "designs.search_pair"));
  EXPECT_NE(derive_seed(7, "designs.search_pair"), derive_seed(7, "witness.sampling"));
  EXPECT_NE(derive_seed(7, std::uint64_t{0}), derive_seed(7, std::uint64_t{1}));
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.below(1000), b.below(1000));
}

TEST(Random, DirichletAndPermutationAreWellFormed) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = rng.dirichlet(6);
    double sum = 0.0;
    for (double v : x) {
      EXPECT_GE(v, 0.0);
      sum += v;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
    auto p = rng.permutation(9);
    std::sort(p.begin(), p.end());
    for (int i = 0; i < 9; ++i) EXPECT_EQ(p[static_cast<std::size_t>(i)], i);
  }
}

TEST(Digest, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Parallel, VisitsEveryIndexOnceAndRethrows) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(parallel_for(10, [](std::size_t i) {
                 if (i == 5) throw DomainError("boom");
               }),
               DomainError);
}

// ---- ThreeGraph ----------------------------------------------------------------

TEST(ThreeGraph, CanonicalizeSortsTriple) {
  const ThreeGraph g = ThreeGraph::canonicalize(std::vector<Triple>{{2, 0, 1}}, 3);
  ASSERT_EQ(g.edge_count(), 1U);
  EXPECT_EQ(g.edges()[0], (Triple{0, 1, 2}));
}

TEST(ThreeGraph, CanonicalizeRejectsMalformedInput) {
  EXPECT_THROW(ThreeGraph::canonicalize(std::vector<Triple>{{0, 1, 2}, {0, 2, 1}}, 3), DuplicateEdge);
  EXPECT_THROW(ThreeGraph::canonicalize(std::vector<Triple>{{0, 1, 1}}, 2), RepeatedVertexInTriple);
  EXPECT_THROW(ThreeGraph::canonicalize(std::vector<Triple>{{0, 1, 3}}, 3), IndexOutOfRange);
  EXPECT_THROW(ThreeGraph::canonicalize(std::vector<Triple>{{-1, 1, 2}}, 3), IndexOutOfRange);
}

TEST(ThreeGraph, CanonicalEdgeListIsStrictlyIncreasing) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const ThreeGraph g = testing::random_graph(8, 0.4, rng);
    for (std::size_t i = 0; i + 1 < g.edge_count(); ++i) EXPECT_LT(g.edges()[i], g.edges()[i + 1]);
    for (const Triple& e : g.edges()) {
      EXPECT_LT(e[0], e[1]);
      EXPECT_LT(e[1], e[2]);
    }
  }
}

TEST(ThreeGraph, CompleteAndEmpty) {
  EXPECT_EQ(ThreeGraph::complete(4).edge_count(), 4U);
  EXPECT_EQ(ThreeGraph::complete(7).edge_count(), 35U);
  EXPECT_EQ(ThreeGraph::empty(5).edge_count(), 0U);
  EXPECT_EQ(ThreeGraph::empty(5).vertex_count(), 5);
}

TEST(InducedSubgraph, KnownValues) {
  const ThreeGraph h = graph_of(4, {{0, 1, 2}});
  const std::vector<Vertex> s1{0, 1, 2};
  const ThreeGraph a = induced_subgraph(h, s1);
  EXPECT_EQ(a.vertex_count(), 3);
  EXPECT_EQ(a.edge_count(), 1U);
  const std::vector<Vertex> s2{0, 1, 3};
  EXPECT_EQ(induced_subgraph(h, s2).edge_count(), 0U);
  const std::vector<Vertex> all{0, 1, 2, 3};
  EXPECT_EQ(induced_subgraph(testing::k4(), all), testing::k4());
}

TEST(InducedSubgraph, ReindexesOrderPreservingAndRejectsBadSubsets) {
  const ThreeGraph h = graph_of(6, {{1, 3, 5}, {0, 1, 2}});
  const std::vector<Vertex> s{5, 1, 3};
  const ThreeGraph sub = induced_subgraph(h, s);
  ASSERT_EQ(sub.edge_count(), 1U);
  EXPECT_EQ(sub.edges()[0], (Triple{0, 1, 2}));
  const std::vector<Vertex> bad{0, 6};
  EXPECT_THROW(induced_subgraph(h, bad), IndexOutOfRange);
  const std::vector<Vertex> repeated{0, 0};
  EXPECT_THROW(induced_subgraph(h, repeated), IndexOutOfRange);
}

TEST(InducedSubgraph, IdempotentOnFullSetAndCommutesWithCanonicalize) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const ThreeGraph g = testing::random_graph(7, 0.3, rng);
    std::vector<Vertex> all(7);
    for (int i = 0; i < 7; ++i) all[static_cast<std::size_t>(i)] = i;
    EXPECT_EQ(induced_subgraph(g, all), g);

    std::vector<Vertex> s{0, 2, 3, 6};
    std::vector<Triple> raw;
    for (const Triple& e : g.edges()) {
      std::array<Vertex, 3> mapped{};
      bool inside = true;
      for (int k = 0; k < 3; ++k) {
        const auto it = std::find(s.begin(), s.end(), e[static_cast<std::size_t>(k)]);
        if (it == s.end()) {
          inside = false;
          break;
        }
        mapped[static_cast<std::size_t>(k)] = static_cast<Vertex>(it - s.begin());
      }
      if (inside) raw.push_back({mapped[2], mapped[0], mapped[1]});
    }
    EXPECT_EQ(induced_subgraph(g, s), ThreeGraph::canonicalize(raw, 4));
  }
}

TEST(EdgeUnion, MergesDuplicatesAndChecksDimensions) {
  const ThreeGraph a = graph_of(5, {{0, 1, 2}, {1, 2, 3}});
  const ThreeGraph b = graph_of(5, {{1, 2, 3}, {2, 3, 4}});
  EXPECT_EQ(edge_union(a, b).edge_count(), 3U);
  EXPECT_THROW(edge_union(a, ThreeGraph::empty(4)), DimensionMismatch);
}

// ---- codegrees -------------------------------------------------------------------

TEST(Codegree, KnownValues) {
  const CodegreeProfile one = codegree_profile(testing::single_triple());
  EXPECT_EQ(one.codegree(0, 1), 1);
  EXPECT_EQ(one.codegree(0, 2), 1);
  EXPECT_EQ(one.codegree(1, 2), 1);
  EXPECT_EQ(one.max_codegree(), 1);
  const CodegreeProfile two = codegree_profile(testing::two_triples_sharing_pair());
  EXPECT_EQ(two.codegree(0, 1), 2);
  EXPECT_EQ(two.codegree(1, 0), 2);
  EXPECT_EQ(two.max_codegree(), 2);
  EXPECT_EQ(codegree_profile(ThreeGraph::empty(5)).max_codegree(), 0);
}

TEST(Codegree, DisjointFanoPairHasEveryCodegreeTwo) {
  const auto pair = search_pair(7, 3, 10'000, 1);
  ASSERT_TRUE(pair.has_value());
  ASSERT_TRUE(pair->edge_disjoint);
  const CodegreeProfile p = codegree_profile(edge_union(pair->first.triples, pair->second.triples));
  for (Vertex u = 0; u < 7; ++u)
    for (Vertex v = u + 1; v < 7; ++v) EXPECT_EQ(p.codegree(u, v), 2);
  EXPECT_EQ(p.max_codegree(), 2);
  EXPECT_EQ(p.min_codegree(), 2);
}

TEST(Codegree, TotalIsThreeTimesEdgeCount) {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const ThreeGraph g = testing::random_graph(9, 0.25, rng);
    const CodegreeProfile p(g);
    EXPECT_EQ(p.total(), 3 * static_cast<std::int64_t>(g.edge_count()));
    int max = 0;
    for (Vertex u = 0; u < 9; ++u)
      for (Vertex v = u + 1; v < 9; ++v) max = std::max(max, p.codegree(u, v));
    EXPECT_EQ(p.max_codegree(), max);
  }
}

// ---- sparsity ----------------------------------------------------------------------

int edges_inside(const ThreeGraph& g, const std::vector<Vertex>& s) {
  return static_cast<int>(induced_subgraph(g, s).edge_count());
}

TEST(Sparsity, KnownValues) {
  for (SparsityMode mode : {SparsityMode::exact, SparsityMode::brute}) {
    EXPECT_TRUE(check_sparse(ThreeGraph::empty(5), mode).is_sparse);
    EXPECT_TRUE(check_sparse(testing::two_triples_sharing_pair(), mode).is_sparse);
    const SparsityVerdict v = check_sparse(graph_of(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}), mode);
    EXPECT_FALSE(v.is_sparse);
    ASSERT_TRUE(v.violating_set.has_value());
    EXPECT_EQ(*v.violating_set, (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ(v.excess, 1);
  }
}

TEST(Sparsity, TwoTriplesSharingPairHasSlackTwo) {
  // max over S of |Q[S]| - |S| is -2 for this graph
  const ThreeGraph g = testing::two_triples_sharing_pair();
  int best = -100;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < 4; ++v)
      if (mask >> v & 1U) s.push_back(v);
    if (s.size() >= 3) best = std::max(best, edges_inside(g, s) - static_cast<int>(s.size()));
  }
  EXPECT_EQ(best, -2);
  EXPECT_EQ(check_sparse(g).excess, 0);
}

TEST(Sparsity, BruteCapIsEnforced) {
  EXPECT_THROW(check_sparse(ThreeGraph::empty(13), SparsityMode::brute), CapExceeded);
  EXPECT_NO_THROW(check_sparse(ThreeGraph::empty(13), SparsityMode::exact));
  EXPECT_NO_THROW(check_sparse(ThreeGraph::empty(14), SparsityMode::brute, std::nullopt, 14));
}

TEST(Sparsity, ViolatingSetReallyViolates) {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const ThreeGraph g = testing::random_graph(8, 0.15, rng);
    for (SparsityMode mode : {SparsityMode::exact, SparsityMode::brute}) {
      const SparsityVerdict v = check_sparse(g, mode);
      if (v.is_sparse) {
        EXPECT_FALSE(v.violating_set.has_value());
        continue;
      }
      ASSERT_TRUE(v.violating_set.has_value());
      const auto& s = *v.violating_set;
      EXPECT_GE(edges_inside(g, s), static_cast<int>(s.size()) - 1);
      EXPECT_EQ(edges_inside(g, s) - static_cast<int>(s.size()) + 2, v.excess);
    }
  }
}

TEST(Sparsity, ExactAgreesWithBruteOnAllSmallGraphs) {
  for (int n = 0; n <= 5; ++n) {
    for (const ThreeGraph& g : testing::all_labelled_graphs(n)) {
      const SparsityVerdict e = check_sparse(g, SparsityMode::exact);
      const SparsityVerdict b = check_sparse(g, SparsityMode::brute);
      ASSERT_EQ(e.is_sparse, b.is_sparse);
      ASSERT_EQ(e.excess, b.excess);
    }
  }
}

TEST(Sparsity, ExactScalesBeyondBruteCap) {
  // union of two disjoint STS(13): every 4-set holds at most 2 triples
  const auto pair = search_pair(13, 3, 1000, 4);
  ASSERT_TRUE(pair && pair->edge_disjoint);
  const ThreeGraph s = edge_union(pair->first.triples, pair->second.triples);
  EXPECT_FALSE(check_sparse(s).is_sparse);  // 52 edges on 13 vertices
  EXPECT_TRUE(check_sparse(ThreeGraph::empty(40)).is_sparse);
}

// ---- configurations ------------------------------------------------------------------

TEST(Configuration, KnownValues) {
  const LabelledTripleSystem twins{{0, {0, 1, 2}}, {1, {0, 1, 2}}};
  const auto found = find_dense_configuration(twins, 3);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->members.size(), 2U);
  EXPECT_EQ(found->vertices, (std::vector<Vertex>{0, 1, 2}));

  const LabelledTripleSystem three{{0, {0, 1, 2}}, {0, {0, 1, 3}}, {1, {0, 2, 3}}};
  const auto c = find_dense_configuration(three, 4);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->members.size(), 3U);
  EXPECT_EQ(c->vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_FALSE(find_dense_configuration(three, 3).has_value());
  EXPECT_THROW(find_dense_configuration(three, 1), DomainError);
}

TEST(Configuration, DisjointPairHasNoGirthThreeConfiguration) {
  const auto pair = search_pair(9, 3, 1000, 2);
  ASSERT_TRUE(pair && pair->edge_disjoint);
  EXPECT_FALSE(find_dense_configuration(labelled_union(pair->first, pair->second), 3).has_value());
  EXPECT_TRUE(find_dense_configuration(labelled_union(pair->first, pair->first), 3).has_value());
}

// Brute oracle: any i labelled triples, 2 <= i < g, spanning <= i + 1 vertices.
bool brute_dense(const LabelledTripleSystem& sys, int g) {
  const std::size_t n = sys.size();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const int i = __builtin_popcount(mask);
    if (i < 2 || i >= g) continue;
    std::set<Vertex> span;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1U) span.insert(sys[k].triple.begin(), sys[k].triple.end());
    if (static_cast<int>(span.size()) <= i + 1) return true;
  }
  return false;
}

TEST(Configuration, AgreesWithBruteForceOnRandomSystems) {
  Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    LabelledTripleSystem sys;
    const int count = 2 + static_cast<int>(rng.below(8));
    for (int k = 0; k < count; ++k) {
      auto perm = rng.permutation(7);
      Triple t{perm[0], perm[1], perm[2]};
      std::sort(t.begin(), t.end());
      sys.push_back({static_cast<int>(rng.below(2)), t});
    }
    for (int g = 2; g <= 6; ++g) {
      const auto found = find_dense_configuration(sys, g);
      ASSERT_EQ(found.has_value(), brute_dense(sys, g)) << "trial " << trial << " g " << g;
      if (found) {
        std::set<Vertex> span;
        for (std::size_t idx : found->members) span.insert(sys[idx].triple.begin(), sys[idx].triple.end());
        const int i = static_cast<int>(found->members.size());
        EXPECT_GE(i, 2);
        EXPECT_LT(i, g);
        EXPECT_LE(static_cast<int>(span.size()), i + 1);
        EXPECT_EQ(found->vertices, std::vector<Vertex>(span.begin(), span.end()));
      }
    }
  }
}

// ---- .3g format -------------------------------------------------------------------------

TEST(Format3g, RoundTripIsBitExact) {
  const std::string text = "# sts t=7 method=skolem\n7 2\n0 1 2\n0 3 4\n";
  const Document3g doc = parse_3g(text);
  EXPECT_EQ(doc.comments, (std::vector<std::string>{" sts t=7 method=skolem"}));
  EXPECT_EQ(doc.graph.edge_count(), 2U);
  EXPECT_EQ(format_3g(doc.graph, doc.comments), text);
}

TEST(Format3g, RejectsMalformedText) {
  EXPECT_THROW(parse_3g("3 1\n0 2 1\n"), FormatError);           // unsorted triple
  EXPECT_THROW(parse_3g("4 2\n0 1 3\n0 1 2\n"), FormatError);    // unsorted list
  EXPECT_THROW(parse_3g("3 2\n0 1 2\n"), FormatError);           // count mismatch
  EXPECT_THROW(parse_3g("3 1\n0 1 3\n"), FormatError);           // out of range
  EXPECT_THROW(parse_3g("3 1\n0 1 x\n"), FormatError);
  EXPECT_THROW(parse_3g(""), FormatError);
}

TEST(Format3g, PairFileRoundTrip) {
  const auto pair = search_pair(7, 3, 100, 0);
  ASSERT_TRUE(pair);
  const std::string text = format_pair({{" first"}, pair->first.triples}, {{" second"}, pair->second.triples});
  const auto [a, b] = parse_pair(text);
  EXPECT_EQ(a.graph, pair->first.triples);
  EXPECT_EQ(b.graph, pair->second.triples);
  EXPECT_EQ(format_pair(a, b), text);
}

TEST(Format3g, RandomGraphsRoundTrip) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const ThreeGraph g = testing::random_graph(1 + static_cast<int>(rng.below(9)), 0.3, rng);
    const std::string text = format_3g(g);
    EXPECT_EQ(parse_3g(text).graph, g);
    EXPECT_EQ(format_3g(parse_3g(text).graph), text);
  }
}

// ---- subsets -----------------------------------------------------------------------------

TEST(Subsets, ExhaustiveVisitsEachSubsetOnceInOrder) {
  const ResolvedPolicy p = resolve_policy({}, 13, 4);
  EXPECT_TRUE(p.exhaustive);
  EXPECT_EQ(p.count, 715);
  std::vector<std::vector<Vertex>> seen;
  for_each_subset(13, 4, p, [&](long, std::span<const Vertex> u) { seen.emplace_back(u.begin(), u.end()); });
  EXPECT_EQ(seen.size(), 715U);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
}

TEST(Subsets, AutomaticSwitchesToSamplingAboveLimit) {
  SubsetPolicy policy;
  policy.samples = 50;
  policy.seed = 3;
  const ResolvedPolicy p = resolve_policy(policy, 33, 7);  // C(33,7) = 4272048
  EXPECT_FALSE(p.exhaustive);
  EXPECT_EQ(p.count, 50);
  std::vector<std::vector<Vertex>> a, b;
  for_each_subset(33, 7, p, [&](long, std::span<const Vertex> u) { a.emplace_back(u.begin(), u.end()); });
  for_each_subset(33, 7, p, [&](long, std::span<const Vertex> u) { b.emplace_back(u.begin(), u.end()); });
  EXPECT_EQ(a, b);
  for (const auto& u : a) {
    EXPECT_TRUE(std::is_sorted(u.begin(), u.end()));
    EXPECT_EQ(std::adjacent_find(u.begin(), u.end()), u.end());
    EXPECT_LT(u.back(), 33);
  }
}

TEST(Subsets, PolicyNamesRoundTrip) {
  for (PolicyKind k : {PolicyKind::automatic, PolicyKind::exhaustive, PolicyKind::sampled}) {
    EXPECT_EQ(parse_policy_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_policy_kind("all"), FormatError);
  EXPECT_EQ(subset_count(13, 4), 715);
  EXPECT_EQ(subset_count(3, 4), 0);
}

// ---- enumerator self-check ----------------------------------------------------------------

TEST(Enumerator, MatchesKnownClassCounts) {
  EXPECT_EQ(testing::isomorphism_classes(3).size(), 2U);
  EXPECT_EQ(testing::isomorphism_classes(4).size(), 5U);
  EXPECT_EQ(testing::isomorphism_classes(5).size(), 34U);
  EXPECT_EQ(testing::isomorphism_classes(6).size(), 2136U);
}

}  // namespace
}  // namespace hyperjump
