#include "gdom/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "reference.hpp"

namespace gdom {
namespace {

std::set<std::uint64_t> as_set(const ModInterval& r) {
  auto v = r.enumerate();
  return {v.begin(), v.end()};
}

std::set<std::uint64_t> as_set(const VertexSet& s) {
  auto v = s.members();
  return {v.begin(), v.end()};
}

TEST(GeneralizedDigraph, RejectsDegenerateParameters) {
  EXPECT_THROW(GeneralizedDigraph(Family::DeBruijn, 5, 1), std::invalid_argument);
  EXPECT_THROW(GeneralizedDigraph(Family::Kautz, 2, 3), std::invalid_argument);
  EXPECT_NO_THROW(GeneralizedDigraph(Family::Kautz, 3, 3));
  EXPECT_THROW(parse_family("hypercube"), std::invalid_argument);
  EXPECT_EQ(parse_family("kautz"), Family::Kautz);
}

TEST(OutNeighbors, Examples) {
  EXPECT_EQ(as_set(out_neighbors(GeneralizedDigraph(Family::DeBruijn, 6, 3), 2)), (std::set<std::uint64_t>{0, 1, 2}));
  EXPECT_EQ(as_set(out_neighbors(GeneralizedDigraph(Family::Kautz, 9, 2), 0)), (std::set<std::uint64_t>{7, 8}));
  for (std::uint64_t d = 2; d <= 6; ++d) {
    const auto run = out_neighbors(GeneralizedDigraph(Family::DeBruijn, 20, d), 0);
    EXPECT_EQ(run.start(), 0U);
    EXPECT_EQ(run.length(), d);
  }
  EXPECT_THROW(out_neighbors(GeneralizedDigraph(Family::DeBruijn, 6, 3), 6), std::out_of_range);
  EXPECT_TRUE(out_neighbors(GeneralizedDigraph(Family::Kautz, 4, 4), 1).is_full());
}

TEST(OutNeighbors, MatchCongruenceDefinition) {
  for (int kautz = 0; kautz <= 1; ++kautz)
    for (int d = 2; d <= 5; ++d)
      for (int n = d; n <= 40; ++n) {
        const GeneralizedDigraph g(kautz ? Family::Kautz : Family::DeBruijn, n, d);
        const auto adj = ref::adjacency(kautz, n, d);
        for (int v = 0; v < n; ++v) {
          const auto got = as_set(out_neighbors(g, v));
          ASSERT_EQ(got, std::set<std::uint64_t>(adj[v].begin(), adj[v].end()));
        }
      }
}

TEST(IntervalOutNeighborhood, Examples) {
  EXPECT_EQ(interval_out_neighborhood(GeneralizedDigraph(Family::DeBruijn, 10, 2), mod_interval(3, 4, 10)),
            mod_interval(6, 9, 10));
  // Orientation flips: O(1) = {3,4} sits below O(0) = {5,6}.
  EXPECT_EQ(interval_out_neighborhood(GeneralizedDigraph(Family::Kautz, 7, 2), mod_interval(0, 1, 7)),
            mod_interval(3, 6, 7));
  for (int kautz = 0; kautz <= 1; ++kautz) {
    const GeneralizedDigraph g(kautz ? Family::Kautz : Family::DeBruijn, 11, 3);
    EXPECT_TRUE(interval_out_neighborhood(g, ModInterval::full(11)).is_full());
    EXPECT_THROW(interval_out_neighborhood(g, ModInterval::empty(11)), std::invalid_argument);
  }
}

TEST(IthOutNeighborhood, Examples) {
  const GeneralizedDigraph b40(Family::DeBruijn, 40, 3);
  for (std::uint64_t x = 0; x < 40; ++x) {
    const auto run = ith_out_neighborhood_interval(b40, ModInterval(x, 1, 40), 2);
    EXPECT_EQ(run.length(), 9U);
    EXPECT_EQ(run.start(), (9 * x) % 40);
  }
  const GeneralizedDigraph k7(Family::Kautz, 7, 2);
  EXPECT_TRUE(ith_out_neighborhood_interval(k7, mod_interval(0, 1, 7), 2).is_full());
  EXPECT_EQ(ith_out_neighborhood_interval(k7, mod_interval(2, 4, 7), 0), mod_interval(2, 4, 7));
}

// Folded closed form against the explicit adjacency applied i times, for every
// consecutive D. The acceptance run repeats this up to n = 60.
TEST(IthOutNeighborhood, AgreesWithReferenceExpansion) {
  for (int kautz = 0; kautz <= 1; ++kautz)
    for (int d = 2; d <= 5; ++d)
      for (int n = d; n <= 36; ++n) {
        const GeneralizedDigraph g(kautz ? Family::Kautz : Family::DeBruijn, n, d);
        const auto adj = ref::adjacency(kautz, n, d);
        for (int start = 0; start < n; ++start)
          for (int len = 1; len <= n; ++len) {
            const ModInterval run(start, len, n);
            const auto members = run.enumerate();
            std::set<int> layer(members.begin(), members.end());
            for (int i = 0; i <= 5; ++i) {
              const auto closed = ith_out_neighborhood_interval(g, run, i);
              const auto got = as_set(closed);
              ASSERT_EQ(got, std::set<std::uint64_t>(layer.begin(), layer.end()))
                  << describe(g) << " D=[" << start << ",+" << len << ") i=" << i;
              const unsigned __int128 expected_len = static_cast<unsigned __int128>(len) *
                                                     static_cast<std::uint64_t>(std::pow(d, i));
              ASSERT_EQ(closed.length(), expected_len < static_cast<unsigned>(n) ? static_cast<std::uint64_t>(expected_len)
                                                                                   : static_cast<std::uint64_t>(n));
              layer = ref::layer(adj, layer, 1);
            }
          }
      }
}

TEST(IthOutNeighborhood, KautzParity) {
  for (std::uint64_t d = 2; d <= 4; ++d)
    for (std::uint64_t n = d; n <= 60; ++n) {
      const GeneralizedDigraph g(Family::Kautz, n, d);
      for (std::uint64_t c = 1; c <= n; ++c)
        for (std::uint64_t i = 0; i <= 5; ++i) {
          const auto run = ith_out_neighborhood_interval(g, ModInterval(0, c, n), i);
          if (run.is_full()) continue;
          if (i % 2 == 0)
            ASSERT_EQ(run.start(), 0U);
          else
            ASSERT_EQ(run.last(), n - 1);
        }
    }
}

TEST(SetOutNeighborhood, Examples) {
  const GeneralizedDigraph b6(Family::DeBruijn, 6, 3);
  EXPECT_EQ(as_set(set_out_neighborhood(b6, VertexSet(6, {2}))), (std::set<std::uint64_t>{0, 1, 2}));
  EXPECT_TRUE(set_out_neighborhood(b6, VertexSet(6)).empty());
  const GeneralizedDigraph k9(Family::Kautz, 9, 2);
  EXPECT_EQ(as_set(set_out_neighborhood(k9, VertexSet(9, {0, 1}))), (std::set<std::uint64_t>{5, 6, 7, 8}));
}

TEST(SetOutNeighborhood, DegreeCounts) {
  for (int kautz = 0; kautz <= 1; ++kautz)
    for (std::uint64_t d = 2; d <= 5; ++d)
      for (std::uint64_t n = d; n <= 40; ++n) {
        const GeneralizedDigraph g(kautz ? Family::Kautz : Family::DeBruijn, n, d);
        std::vector<std::uint64_t> indegree(n, 0);
        for (Vertex v = 0; v < n; ++v) {
          const auto out = set_out_neighborhood(g, VertexSet(n, {v}));
          ASSERT_EQ(out.size(), d);
          out.for_each([&](Vertex y) { ++indegree[y]; });
        }
        ASSERT_EQ(std::accumulate(indegree.begin(), indegree.end(), std::uint64_t{0}), n * d);
      }
}

TEST(Ball, Examples) {
  const GeneralizedDigraph k7(Family::Kautz, 7, 2);
  EXPECT_TRUE(ball(k7, VertexSet(7, {0, 1}), 2).covered.is_full());
  EXPECT_TRUE(ball(k7, VertexSet::all(7), 0).covered.is_full());
  const GeneralizedDigraph b40(Family::DeBruijn, 40, 3);
  for (Vertex x = 0; x < 40; ++x) EXPECT_FALSE(ball(b40, VertexSet(40, {x}), 3).covered.is_full()) << x;
}

TEST(Ball, MonotoneInRadius) {
  const GeneralizedDigraph g(Family::DeBruijn, 37, 2);
  for (Vertex x = 0; x < 37; ++x) {
    VertexSet prev = VertexSet(37, {x});
    for (std::uint64_t k = 0; k <= 7; ++k) {
      const auto b = ball(g, VertexSet(37, {x}), k);
      ASSERT_TRUE(prev.is_subset_of(b.covered));
      ASSERT_TRUE(b.center.is_subset_of(b.covered));
      prev = b.covered;
    }
  }
}

TEST(Export, EdgeListMatchesDefinition) {
  const std::string text = export_graph(GeneralizedDigraph(Family::Kautz, 9, 2), ExportFormat::EdgeList);
  std::istringstream in(text);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "# kautz 9 2");
  const auto adj = ref::adjacency(true, 9, 2);
  std::set<std::pair<int, int>> expected;
  for (int x = 0; x < 9; ++x)
    for (int y : adj[x]) expected.emplace(x, y);
  std::set<std::pair<int, int>> got;
  int u = 0;
  int v = 0;
  std::size_t lines = 0;
  while (in >> u >> v) {
    got.emplace(u, v);
    ++lines;
  }
  EXPECT_EQ(lines, 18U);
  EXPECT_EQ(got, expected);
}

TEST(Export, DeBruijnSixThreeHasSelfLoops) {
  const std::string dot = export_graph(GeneralizedDigraph(Family::DeBruijn, 6, 3), ExportFormat::Dot);
  EXPECT_NE(dot.find("digraph debruijn_6_3 {"), std::string::npos);
  // 3*0 + 0 = 0 and 3*5 + 2 = 17 ≡ 5 (mod 6).
  EXPECT_NE(dot.find("  0 -> 0;"), std::string::npos);
  EXPECT_NE(dot.find("  5 -> 5;"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 18);
}

TEST(Export, SquareCaseAndGuard) {
  const std::string text = export_graph(GeneralizedDigraph(Family::DeBruijn, 3, 3), ExportFormat::EdgeList);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 9);
  EXPECT_THROW(export_graph(GeneralizedDigraph(Family::DeBruijn, 5'000'001, 2), ExportFormat::EdgeList), RangeError);
}

}  // namespace
}  // namespace gdom
