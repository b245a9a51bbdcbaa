#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "oracles.hpp"
#include "polarnet/community.hpp"
#include "polarnet/errors.hpp"
#include "polarnet/partition.hpp"
#include "polarnet/polarization.hpp"
#include "polarnet/synth.hpp"

using namespace polarnet;

namespace {

UndirectedView two_triangles() {
  const std::pair<VertexId, VertexId> e[] = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  return UndirectedView::from_edges(6, e);
}

void expect_valid(const Partition& p, std::size_t n) {
  ASSERT_EQ(p.vertex_count(), n);
  std::size_t total = 0;
  for (auto s : p.group_sizes()) {
    EXPECT_GT(s, 0u);
    total += s;
  }
  EXPECT_EQ(total, n);
  for (auto g : p.assignment()) EXPECT_LT(g, p.group_count());
}

}  // namespace

TEST(Detect, TwoTrianglesSplitAtBruteForceOptimum) {
  const auto g = two_triangles();
  EXPECT_NEAR(oracle::max_modularity_brute_force(g), 0.5, 1e-12);
  const auto p = detect_communities(g);
  expect_valid(p, 6);
  EXPECT_EQ(p.group_count(), 2u);
  EXPECT_EQ(p.group_of(0), p.group_of(1));
  EXPECT_EQ(p.group_of(1), p.group_of(2));
  EXPECT_EQ(p.group_of(3), p.group_of(5));
  EXPECT_NE(p.group_of(0), p.group_of(3));
  EXPECT_NEAR(modularity(g, p), 0.5, 1e-12);
}

TEST(Detect, CompleteGraphStaysWhole) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < 5; ++i) {
    for (VertexId j = i + 1; j < 5; ++j) e.emplace_back(i, j);
  }
  const auto g = UndirectedView::from_edges(5, e);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    DetectionOptions o;
    o.seed = seed;
    EXPECT_EQ(detect_communities(g, o).group_count(), 1u);
  }
}

TEST(Detect, PlantedPartitionRecovered) {
  const std::size_t blocks[] = {100, 100, 100};
  const auto planted = synth::planted_partition(blocks, 0.3, 0.01, 42);
  const auto view = underlying_undirected(planted.graph);
  DetectionOptions o;
  o.seed = 42;
  const auto found = detect_communities(view, o);
  expect_valid(found, 300);
  EXPECT_GE(oracle::best_match_agreement(planted.partition.assignment(), found.assignment()), 0.95);
}

TEST(Detect, DeterministicPerSeed) {
  const auto g = oracle::random_graph(120, 0.05, 8);
  DetectionOptions o;
  o.seed = 17;
  const auto a = detect_communities(g, o);
  const auto b = detect_communities(g, o);
  EXPECT_EQ(a, b);
}

TEST(Detect, PassModularityNonDecreasingAndAboveSingletons) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = oracle::random_graph(80, 0.06, seed);
    if (g.edge_count() == 0) continue;
    DetectionOptions o;
    o.seed = seed;
    const auto traced = detect_communities_traced(g, o);
    const auto& q = traced.pass_modularity;
    ASSERT_FALSE(q.empty());
    for (std::size_t i = 1; i < q.size(); ++i) EXPECT_GE(q[i], q[i - 1] - 1e-12);
    std::vector<GroupId> singles(g.vertex_count());
    for (VertexId v = 0; v < singles.size(); ++v) singles[v] = v;
    const double singleton_q = oracle::modularity_double_sum(g, singles);
    EXPECT_LE(singleton_q, 0.0);
    EXPECT_GE(modularity(g, traced.partition), singleton_q);
    EXPECT_NEAR(modularity(g, traced.partition), q.back(), 1e-9);
    expect_valid(traced.partition, g.vertex_count());
  }
}

TEST(Detect, IsolatedVerticesAreTrailingSingletons) {
  const std::pair<VertexId, VertexId> e[] = {{1, 2}, {2, 3}, {1, 3}, {5, 6}, {6, 7}, {5, 7}};
  const auto g = UndirectedView::from_edges(9, e);  // 0, 4, 8 isolated
  const auto p = detect_communities(g);
  expect_valid(p, 9);
  EXPECT_EQ(p.group_count(), 5u);
  const GroupId iso[] = {p.group_of(0), p.group_of(4), p.group_of(8)};
  for (GroupId gi : iso) {
    EXPECT_GE(gi, 2u);
    EXPECT_EQ(p.group_sizes()[gi], 1u);
  }
}

TEST(Detect, RejectsEmptyGraphAndBadResolution) {
  EXPECT_THROW(detect_communities(UndirectedView::from_edges(4, {})), ArgumentError);
  DetectionOptions o;
  o.resolution = 0.0;
  EXPECT_THROW(detect_communities(two_triangles(), o), ArgumentError);
}

TEST(Detect, HigherResolutionSplitsMore) {
  const std::size_t blocks[] = {40, 40};
  const auto planted = synth::planted_partition(blocks, 0.2, 0.02, 3);
  const auto view = underlying_undirected(planted.graph);
  DetectionOptions coarse;
  coarse.resolution = 0.05;
  DetectionOptions fine;
  fine.resolution = 4.0;
  EXPECT_LE(detect_communities(view, coarse).group_count(), detect_communities(view, fine).group_count());
}

TEST(PartitionType, RejectsUnusedGroupIndex) {
  EXPECT_THROW(Partition(std::vector<GroupId>{0, 2}), ArgumentError);
  const Partition p(std::vector<GroupId>{1, 0, 1});
  EXPECT_EQ(p.group_count(), 2u);
  EXPECT_EQ(p.members(1), (std::vector<VertexId>{0, 2}));
}

TEST(Relabel, OrdersBySize) {
  // sizes [2, 5, 3]
  const Partition p(std::vector<GroupId>{0, 0, 1, 1, 1, 1, 1, 2, 2, 2}, {"a", "b", "c"});
  const auto r = relabel_by_size(p);
  const auto sizes = r.partition.group_sizes();
  EXPECT_EQ(std::vector<std::size_t>(sizes.begin(), sizes.end()), (std::vector<std::size_t>{5, 3, 2}));
  EXPECT_EQ(r.new_to_old, (std::vector<GroupId>{1, 2, 0}));
  EXPECT_EQ(r.partition.group_label(0), "b");
  for (VertexId v = 0; v < p.vertex_count(); ++v) EXPECT_EQ(r.new_to_old[r.partition.group_of(v)], p.group_of(v));
}

TEST(Relabel, SortedIsIdentity) {
  const Partition p(std::vector<GroupId>{0, 0, 0, 1, 1, 2});
  const auto r = relabel_by_size(p);
  EXPECT_EQ(r.new_to_old, (std::vector<GroupId>{0, 1, 2}));
  EXPECT_EQ(r.partition, p);
}

TEST(Relabel, RandomPreservesSizeMultiset) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Partition p(oracle::random_assignment(60, 1 + seed % 7, seed));
    const auto r = relabel_by_size(p);
    auto before = std::vector<std::size_t>(p.group_sizes().begin(), p.group_sizes().end());
    auto after = std::vector<std::size_t>(r.partition.group_sizes().begin(), r.partition.group_sizes().end());
    EXPECT_TRUE(std::is_sorted(after.rbegin(), after.rend()));
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    EXPECT_EQ(before, after);
  }
}

TEST(PartitionFile, LoadsThreeVertices) {
  LabelIndex labels;
  for (const char* l : {"a", "b", "c"}) labels.intern(l);
  std::istringstream in("a,0\nb,0\nc,1\n");
  const auto p = load_partition(in, labels);
  EXPECT_EQ(p.group_count(), 2u);
  EXPECT_EQ(p.group_of(2), 1u);
}

TEST(PartitionFile, RoundTripWithMeta) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto labels = synth::numbered_labels(50, "user");
    Partition p(oracle::random_assignment(50, 4, seed));
    p.set_group_label(0, "left-leaning");
    p.set_group_label(2, "media, press");
    std::ostringstream out;
    save_partition(p, labels, out);
    std::istringstream in(out.str());
    EXPECT_EQ(load_partition(in, labels), p);
  }
}

TEST(PartitionFile, MissingVertexNamed) {
  LabelIndex labels;
  for (const char* l : {"a", "b", "c"}) labels.intern(l);
  std::istringstream in("a,0\nc,1\n");
  try {
    load_partition(in, labels);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("'b'"), std::string::npos);
  }
}

TEST(PartitionFile, UnknownDuplicateAndBadIndex) {
  LabelIndex labels;
  for (const char* l : {"a", "b"}) labels.intern(l);
  std::istringstream unknown("a,0\nb,0\nz,1\n");
  EXPECT_THROW(load_partition(unknown, labels), FormatError);
  std::istringstream dup("a,0\na,0\nb,0\n");
  EXPECT_THROW(load_partition(dup, labels), FormatError);
  std::istringstream gap("a,0\nb,2\n");
  EXPECT_THROW(load_partition(gap, labels), FormatError);
  std::istringstream junk("a,x\nb,0\n");
  EXPECT_THROW(load_partition(junk, labels), FormatError);
}
