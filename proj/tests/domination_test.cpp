#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "polarnet/domination.hpp"
#include "polarnet/errors.hpp"
#include "polarnet/synth.hpp"

using namespace polarnet;

namespace {

std::vector<VertexId> range(VertexId n) {
  std::vector<VertexId> v(n);
  for (VertexId i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::size_t max_out_degree(const DirectedGraph& g, std::span<const VertexId> cands) {
  std::size_t d = 0;
  for (VertexId v : cands) d = std::max(d, g.out_degree(v));
  return d;
}

// Stars with hubs at the first id of each block.
DirectedGraph disjoint_stars(std::span<const std::size_t> sizes) {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  VertexId base = 0;
  for (std::size_t s : sizes) {
    for (VertexId leaf = 1; leaf < s; ++leaf) arcs.emplace_back(base, base + leaf);
    base += static_cast<VertexId>(s);
  }
  return DirectedGraph::from_arcs(base, arcs);
}

}  // namespace

TEST(CoverageTarget, CeilingWithRoundingTolerance) {
  EXPECT_EQ(coverage_target(0.5, 12), 6u);
  EXPECT_EQ(coverage_target(0.5, 11), 6u);
  EXPECT_EQ(coverage_target(0.7, 10), 7u);
  EXPECT_EQ(coverage_target(0.1 * 3, 10), 3u);
  EXPECT_EQ(coverage_target(1.0, 0), 0u);
  EXPECT_NEAR(harmonic_number(3), 1.0 + 0.5 + 1.0 / 3.0, 1e-15);
}

TEST(Greedy, StarHubCoversEverything) {
  const auto g = synth::star(5);
  const auto r = greedy_pdds(g, 1.0);
  EXPECT_EQ(r.selected, std::vector<VertexId>{0});
  EXPECT_EQ(r.covered(), 6u);
  EXPECT_EQ(r.target, 6u);
  EXPECT_DOUBLE_EQ(r.covered_fraction(), 1.0);
}

TEST(Greedy, LeafOnlyCandidatesAreInfeasible) {
  const auto g = synth::star(5);
  const VertexId leaf[] = {3};
  try {
    greedy_pdds(g, 1.0, std::span<const VertexId>(leaf));
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_EQ(e.max_achievable(), 1u);
    EXPECT_EQ(e.target(), 6u);
    EXPECT_NEAR(e.max_achievable_fraction(), 1.0 / 6.0, 1e-15);
  }
}

TEST(Greedy, RhoOutOfRange) {
  const auto g = synth::star(3);
  EXPECT_THROW(greedy_pdds(g, 0.0), ArgumentError);
  EXPECT_THROW(greedy_pdds(g, 1.5), ArgumentError);
  EXPECT_THROW(greedy_pdds(g, -0.1), ArgumentError);
  const VertexId c[] = {0};
  EXPECT_THROW(brute_force_pdds(g, 0.0, c), ArgumentError);
}

TEST(Greedy, TieGoesToLowestId) {
  const auto g = synth::directed_cycle(6);
  const auto r = greedy_pdds(g, 1.0);
  ASSERT_FALSE(r.selected.empty());
  EXPECT_EQ(r.selected.front(), 0u);
}

TEST(BruteForce, SmallCases) {
  const auto cycle = synth::directed_cycle(3);
  const auto all3 = range(3);
  EXPECT_EQ(brute_force_pdds(cycle, 1.0, all3), 2u);
  const auto s = synth::star(4);
  const auto all5 = range(5);
  EXPECT_EQ(brute_force_pdds(s, 1.0, all5), 1u);
  const auto isolated = DirectedGraph::from_arcs(4, {});
  const auto all4 = range(4);
  EXPECT_EQ(brute_force_pdds(isolated, 0.5, all4), 2u);
  const VertexId none[] = {3};
  EXPECT_EQ(brute_force_pdds(isolated, 0.5, none), std::nullopt);
  const auto big = DirectedGraph::from_arcs(26, {});
  EXPECT_THROW(brute_force_pdds(big, 1.0, range(26)), ArgumentError);
}

TEST(Greedy, WithinHarmonicBoundOfOptimum) {
  std::mt19937_64 gen(11);
  const double rhos[] = {0.5, 0.75, 1.0};
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + gen() % 10;
    const auto g = oracle::random_digraph(n, 0.05 + 0.4 * static_cast<double>(gen() % 100) / 100.0, gen());
    const auto cands = range(static_cast<VertexId>(n));
    const double rho = rhos[trial % 3];
    const auto opt = brute_force_pdds(g, rho, cands);
    ASSERT_TRUE(opt);
    const auto r = greedy_pdds(g, rho, std::span<const VertexId>(cands));
    EXPECT_GE(r.selected.size(), *opt);
    EXPECT_LE(static_cast<double>(r.selected.size()),
              harmonic_number(max_out_degree(g, cands) + 1) * static_cast<double>(*opt) + 1e-9);
  }
}

TEST(Greedy, PicksAreCorrectAndGainsNonIncreasing) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = oracle::random_digraph(80, 0.03, seed);
    const auto r = greedy_pdds(g, 0.9, std::nullopt, std::nullopt, DominationOptions{.verify_spans = true});
    std::set<VertexId> targets;
    for (VertexId v = 0; v < 80; ++v) targets.insert(v);
    const std::set<VertexId> picked(r.selected.begin(), r.selected.end());
    EXPECT_EQ(picked.size(), r.selected.size());
    std::size_t previous_gain = SIZE_MAX;
    for (std::size_t k = 0; k < r.selected.size(); ++k) {
      const auto covered = oracle::covered_by(g, std::span(r.selected.data(), k + 1), targets);
      EXPECT_EQ(covered.size(), r.covered_after_step[k]);
      const std::size_t gain = r.covered_after_step[k] - (k == 0 ? 0 : r.covered_after_step[k - 1]);
      EXPECT_LE(gain, previous_gain);
      EXPECT_GT(gain, 0u);
      previous_gain = gain;
    }
    EXPECT_GE(r.covered(), r.target);
    EXPECT_LT(r.covered_after_step.size() < 2 ? 0 : r.covered_after_step[r.covered_after_step.size() - 2], r.target);
  }
}

TEST(Greedy, FirstPickHasMaximumReach) {
  const auto g = oracle::random_digraph(50, 0.08, 3);
  const auto r = greedy_pdds(g, 1.0);
  std::set<VertexId> all;
  for (VertexId v = 0; v < 50; ++v) all.insert(v);
  std::size_t best = 0;
  for (VertexId v : spreaders(g)) best = std::max(best, oracle::closed_reach(g, v, all));
  EXPECT_EQ(oracle::closed_reach(g, r.selected.front(), all), best);
}

TEST(Greedy, LargerRhoExtendsSmallerRhoPrefix) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = oracle::random_digraph(60, 0.05, 100 + seed);
    const auto a = greedy_pdds(g, 0.5);
    const auto b = greedy_pdds(g, 0.8);
    ASSERT_LE(a.selected.size(), b.selected.size());
    EXPECT_TRUE(std::equal(a.selected.begin(), a.selected.end(), b.selected.begin()));
  }
}

TEST(Curve, StarAndDisjointStars) {
  const auto s = synth::star(5);
  const auto c1 = coverage_curve(s, spreaders(s), range(6), 10);
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1[0].spreaders, 1u);
  EXPECT_DOUBLE_EQ(c1[0].fraction, 1.0);

  const std::size_t sizes[] = {7, 3};
  const auto g = disjoint_stars(sizes);
  const auto c2 = coverage_curve(g, spreaders(g), range(10), 10);
  ASSERT_EQ(c2.size(), 2u);
  EXPECT_NEAR(c2[0].fraction, 0.7, 1e-15);
  EXPECT_NEAR(c2[1].fraction, 1.0, 1e-15);
  EXPECT_THROW(coverage_curve(g, spreaders(g), range(10), 0), ArgumentError);
}

TEST(Curve, MatchesGreedyOrderAndIsMonotone) {
  const auto g = oracle::random_digraph(70, 0.04, 8);
  const auto curve = coverage_curve(g, spreaders(g), range(70), 1000);
  const auto r = greedy_pdds(g, curve.back().fraction);
  ASSERT_EQ(r.selected.size(), curve.size());
  for (std::size_t k = 0; k < curve.size(); ++k) {
    EXPECT_EQ(curve[k].spreaders, k + 1);
    EXPECT_NEAR(curve[k].fraction, static_cast<double>(r.covered_after_step[k]) / 70.0, 1e-15);
    if (k > 0) EXPECT_GT(curve[k].fraction, curve[k - 1].fraction);
  }
  const auto truncated = coverage_curve(g, spreaders(g), range(70), 3);
  ASSERT_EQ(truncated.size(), 3u);
}

TEST(Curve, GroupWithLargerStarsDominates) {
  // Group 0 owns stars of 8 and 6 vertices, group 1 stars of 3 and 3.
  const std::size_t sizes[] = {8, 6, 3, 3};
  const auto g = disjoint_stars(sizes);
  std::vector<GroupId> assignment(20, 1);
  for (VertexId v = 0; v < 14; ++v) assignment[v] = 0;
  const Partition p(assignment);
  const auto a = network_by_group_instance(g, p, 0);
  const auto b = network_by_group_instance(g, p, 1);
  const auto ca = coverage_curve(g, a.candidates, a.targets, 10);
  const auto cb = coverage_curve(g, b.candidates, b.targets, 10);
  for (std::size_t k = 0; k < std::min(ca.size(), cb.size()); ++k) EXPECT_GT(ca[k].fraction, cb[k].fraction);
}

TEST(InGroup, StarInsideGroupMatchesStandaloneStar) {
  // Star on 0..5 in group 0, plus a second group wired to it.
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (VertexId leaf = 1; leaf <= 5; ++leaf) arcs.emplace_back(0, leaf);
  arcs.insert(arcs.end(), {{6, 7}, {7, 8}, {6, 0}, {2, 7}});
  const auto g = DirectedGraph::from_arcs(9, arcs);
  const Partition p(std::vector<GroupId>{0, 0, 0, 0, 0, 0, 1, 1, 1});
  const auto r = in_group_domination(g, p, 0, 1.0);
  const auto standalone = greedy_pdds(synth::star(5), 1.0);
  EXPECT_EQ(r.selected, standalone.selected);
  EXPECT_EQ(r.covered_after_step, standalone.covered_after_step);
  EXPECT_EQ(r.n_target, 6u);
}

TEST(InGroup, NoInternalArcsNeedsEveryMember) {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (VertexId v = 0; v < 4; ++v) arcs.emplace_back(v, 4 + v);
  const auto g = DirectedGraph::from_arcs(8, arcs);
  const Partition p(std::vector<GroupId>{0, 0, 0, 0, 1, 1, 1, 1});
  const auto r = in_group_domination(g, p, 0, 1.0);
  EXPECT_EQ(r.selected.size(), 4u);
  // Group 1 has no spreaders at all.
  EXPECT_THROW(in_group_domination(g, p, 1, 0.5), InfeasibleError);
  EXPECT_THROW(in_group_domination(g, p, 2, 0.5), ArgumentError);
}

TEST(InGroup, AgreesWithManualInducedSubgraph) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto g = oracle::random_digraph(60, 0.06, 300 + seed);
    const Partition p(oracle::random_assignment(60, 3, seed));
    for (GroupId group = 0; group < 3; ++group) {
      const auto members = p.members(group);
      const std::set<VertexId> keep(members.begin(), members.end());
      const auto kept = oracle::filter_arcs(g, keep);
      std::vector<VertexId> cands;
      for (VertexId v : members) {
        if (g.out_degree(v) > 0) cands.push_back(v);
      }
      // Same instance expressed in parent ids with non-members as isolated vertices.
      const auto manual_graph =
          DirectedGraph::from_arcs(60, std::vector<std::pair<VertexId, VertexId>>(kept.begin(), kept.end()));
      try {
        const auto r = in_group_domination(g, p, group, 0.75);
        const auto manual = greedy_pdds(manual_graph, 0.75, std::span<const VertexId>(cands),
                                        std::span<const VertexId>(members));
        EXPECT_EQ(r.selected, manual.selected);
        for (VertexId v : r.selected) EXPECT_EQ(p.group_of(v), group);
      } catch (const InfeasibleError&) {
        EXPECT_THROW(greedy_pdds(manual_graph, 0.75, std::span<const VertexId>(cands),
                                 std::span<const VertexId>(members)),
                     InfeasibleError);
      }
    }
  }
}

TEST(NetworkByGroup, UniversalHubAndLimitedReach) {
  // Vertex 0 reaches everyone; group 1 (vertices 1..9) reaches one vertex each.
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (VertexId v = 1; v < 10; ++v) arcs.emplace_back(0, v);
  arcs.emplace_back(1, 2);
  const auto g = DirectedGraph::from_arcs(10, arcs);
  std::vector<GroupId> assignment(10, 1);
  assignment[0] = 0;
  const Partition p(assignment);
  const auto r = network_domination_by_group(g, p, 0, 1.0);
  EXPECT_EQ(r.selected, std::vector<VertexId>{0});
  EXPECT_EQ(r.n_target, 10u);
  // Group 1's only spreader covers 2 of 10 vertices.
  EXPECT_NO_THROW(network_domination_by_group(g, p, 1, 0.2));
  try {
    network_domination_by_group(g, p, 1, 0.5);
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_NEAR(e.max_achievable_fraction(), 0.2, 1e-15);
  }
}

TEST(NetworkByGroup, ReachAsymmetricFixture) {
  const auto inst = synth::reach_asymmetric_instance({});
  const auto broad = network_domination_by_group(inst.graph, inst.partition, 0, 0.5);
  EXPECT_GE(broad.covered_fraction(), 0.5);
  EXPECT_THROW(network_domination_by_group(inst.graph, inst.partition, 1, 0.5), InfeasibleError);
  const auto closed_in = in_group_domination(inst.graph, inst.partition, 1, 0.7);
  const auto broad_in = in_group_domination(inst.graph, inst.partition, 0, 0.7);
  EXPECT_LT(closed_in.selected.size(), broad_in.selected.size());
}
