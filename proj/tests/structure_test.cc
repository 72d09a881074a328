// Copyright 2026 The Edgedom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edgedom/structure.h"

#include <gtest/gtest.h>

#include <random>

#include "edgedom/canonical.h"
#include "edgedom/error.h"
#include "edgedom/families.h"
#include "support/oracles.h"

namespace edgedom {
namespace {

TEST(GirthTest, Examples) {
  EXPECT_EQ(Girth(Complete(3)), 3);
  EXPECT_EQ(Girth(C7Star()), 4);
  EXPECT_EQ(Girth(Path(4)), std::nullopt);
  EXPECT_EQ(Girth(Cycle(9)), 9);
  EXPECT_EQ(Girth(Graph(0)), std::nullopt);
}

TEST(GirthTest, MatchesDfsOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = testing::RandomGraph(3 + trial % 8, 0.3, rng);
    const int expected = testing::DfsGirth(g);
    const auto got = Girth(g);
    EXPECT_EQ(got.value_or(0), expected);
  }
}

TEST(ContainsInducedTest, Examples) {
  EXPECT_FALSE(ContainsInduced(Complete(4), Named("W1")));
  EXPECT_FALSE(ContainsInduced(Complete(3), Cycle(4)));
  const auto map = ContainsInduced(Diamond(), Kite(1));
  ASSERT_TRUE(map);
  const Graph kite = Kite(1);
  const Graph diamond = Diamond();
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) {
      EXPECT_EQ(diamond.HasEdge(u, v), kite.HasEdge((*map)[u], (*map)[v]));
    }
  }
  // Induced, not just a subgraph: C4 is a subgraph of the diamond.
  EXPECT_FALSE(ContainsInduced(Cycle(4), Diamond()));
}

TEST(TrianglesTest, CountsAndK4) {
  EXPECT_EQ(Triangles(Complete(4)).size(), 4u);
  EXPECT_EQ(Triangles(Propeller(3)).size(), 3u);
  EXPECT_FALSE(FindTriangle(Cycle(5)));
  EXPECT_FALSE(IsK4Free(Complete(4)));
  EXPECT_TRUE(IsK4Free(Named("Crystal")));
}

TEST(TrianglesTest, DiamondAndHouse) {
  EXPECT_TRUE(FindDiamond(Kite(2)));
  EXPECT_FALSE(FindDiamond(Propeller(2)));
  EXPECT_EQ(CountInducedDiamonds(Named("W1")), 1);
  EXPECT_TRUE(FindHouse(Named("DreamHouse")));
  EXPECT_FALSE(FindHouse(Complete(5)));
}

TEST(LeavesTest, Examples) {
  EXPECT_EQ(Leaves(Path(3)), (VertexSet{0, 2}));
  EXPECT_EQ(SupportVertices(Path(3)), (VertexSet{1}));
  EXPECT_TRUE(Leaves(Cycle(5)).empty());
  EXPECT_TRUE(SupportVertices(Cycle(5)).empty());
  EXPECT_EQ(SupportVertices(Kite(3)), (VertexSet{0}));
  EXPECT_EQ(Leaves(Kite(3)).size(), 3);
}

TEST(IdentifyVerticesTest, Examples) {
  bool internal = false;
  const Graph k2 = IdentifyVertices(Complete(3), VertexSet{0, 1}, nullptr,
                                    &internal);
  EXPECT_EQ(k2, Complete(2));
  EXPECT_TRUE(internal);

  const Graph two = DisjointUnion(Complete(3), Complete(3));
  const Graph bowtie = IdentifyVertices(two, VertexSet{0, 3});
  EXPECT_TRUE(IsIsomorphic(bowtie, Propeller(2)));

  EXPECT_TRUE(IsIsomorphic(IdentifyVertices(Cycle(6), VertexSet{2}),
                           Cycle(6)));
  EXPECT_THROW(IdentifyVertices(Cycle(6), VertexSet()), InputError);
}

TEST(ReduceTest, Examples) {
  const Graph p4 = Path(4);
  const Graph r = Reduce(p4, EdgeSet{{1, 2}});
  EXPECT_EQ(r.order(), 4);
  EXPECT_EQ(r.size(), 0);

  const Graph c7 = Reduce(Cycle(7), EdgeSet{{0, 1}});
  EXPECT_EQ(c7.order(), 7);
  EXPECT_EQ(c7.size(), 4);
  // 0 and 1 are left isolated; 2..6 still form a path.
  EXPECT_TRUE(IsIsomorphic(DropIsolates(c7), Path(5)));

  EXPECT_EQ(Reduce(Named("W5"), EdgeSet()), Named("W5"));
  EXPECT_THROW(Reduce(p4, EdgeSet{{0, 1}, {1, 2}}), InputError);
  EXPECT_THROW(Reduce(p4, EdgeSet{{0, 2}}), InputError);
}

TEST(BipartitionTest, Examples) {
  const auto c4 = Bipartition(Cycle(4));
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->a, (VertexSet{0, 2}));
  EXPECT_EQ(c4->b, (VertexSet{1, 3}));
  EXPECT_FALSE(Bipartition(Complete(3)));
  const auto star = Bipartition(Star(6));
  ASSERT_TRUE(star);
  EXPECT_EQ(star->a.size(), 1);
  EXPECT_EQ(star->b.size(), 6);
  EXPECT_TRUE(star->a_smaller());
}

TEST(BipartitionTest, AgreesWithColouringScan) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::RandomGraph(2 + trial % 9, 0.35, rng);
    bool colourable = false;
    for (std::uint64_t side = 0; side < (1u << g.order()) && !colourable;
         ++side) {
      colourable = true;
      for (const Edge& e : g.Edges()) {
        if (((side >> e.u) & 1) == ((side >> e.v) & 1)) colourable = false;
      }
    }
    const auto bip = Bipartition(g);
    ASSERT_EQ(bip.has_value(), colourable);
    if (!bip) continue;
    EXPECT_EQ((bip->a | bip->b), g.Vertices());
    EXPECT_TRUE((bip->a & bip->b).empty());
    for (const Edge& e : g.Edges()) {
      EXPECT_NE(bip->a.Contains(e.u), bip->a.Contains(e.v));
    }
  }
}

}  // namespace
}  // namespace edgedom
