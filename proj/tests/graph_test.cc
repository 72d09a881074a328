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

#include "edgedom/graph.h"

#include <gtest/gtest.h>

#include "edgedom/error.h"
#include "edgedom/families.h"

namespace edgedom {
namespace {

TEST(VertexSetTest, BasicOperations) {
  VertexSet s{1, 4, 63};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.Contains(63));
  EXPECT_FALSE(s.Contains(0));
  EXPECT_EQ(s.First(), 1);
  s.Erase(1);
  EXPECT_EQ(s.ToVector(), (std::vector<int>{4, 63}));
  EXPECT_EQ((VertexSet{1, 2} | VertexSet{2, 3}), (VertexSet{1, 2, 3}));
  EXPECT_EQ((VertexSet{1, 2} & VertexSet{2, 3}), (VertexSet{2}));
  EXPECT_EQ((VertexSet{1, 2} - VertexSet{2, 3}), (VertexSet{1}));
  EXPECT_EQ(VertexSet::Range(64).size(), 64);
  EXPECT_TRUE(VertexSet().empty());
}

TEST(EdgeTest, Normalized) {
  Edge e(5, 2);
  EXPECT_EQ(e.u, 2);
  EXPECT_EQ(e.v, 5);
  EXPECT_EQ(e, Edge(2, 5));
  EXPECT_TRUE(e.SharesEndpoint(Edge(5, 9)));
  EXPECT_FALSE(e.SharesEndpoint(Edge(3, 4)));
}

TEST(GraphTest, AdjacencyIsSymmetric) {
  Graph g(4, {{0, 1}, {1, 2}, {3, 1}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 3);
  EXPECT_TRUE(g.HasEdge(1, 3));
  EXPECT_TRUE(g.HasEdge(3, 1));
  EXPECT_EQ(g.Degree(1), 3);
  g.RemoveEdge(3, 1);
  EXPECT_FALSE(g.HasEdge(1, 3));
  EXPECT_EQ(g.Edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(GraphTest, AddVertexGrows) {
  Graph g;
  EXPECT_EQ(g.AddVertex(), 0);
  EXPECT_EQ(g.AddVertex(), 1);
  g.AddEdge(0, 1);
  EXPECT_EQ(g, Complete(2));
}

TEST(GraphTest, RejectsLoopsAndRange) {
  Graph g(3);
  EXPECT_THROW(g.AddEdge(1, 1), InputError);
  EXPECT_THROW(g.AddEdge(0, 3), InputError);
  EXPECT_THROW(Graph(65), InputError);
}

TEST(GraphTest, InducedSubgraphRenumbers) {
  const Graph c5 = Cycle(5);
  std::vector<int> map;
  const Graph p = InducedSubgraph(c5, VertexSet{0, 1, 2}, &map);
  EXPECT_EQ(p.order(), 3);
  EXPECT_EQ(p.size(), 2);
  EXPECT_EQ(map[2], 2);
  EXPECT_EQ(map[4], -1);
}

TEST(GraphTest, RemoveVertices) {
  EXPECT_EQ(RemoveVertex(Star(3), 0).size(), 0);
  EXPECT_EQ(RemoveVertices(Complete(5), VertexSet{0, 1}), Complete(3));
}

TEST(GraphTest, DisjointUnionAndComplement) {
  const Graph u = DisjointUnion(Complete(3), Complete(2));
  EXPECT_EQ(u.order(), 5);
  EXPECT_EQ(u.size(), 4);
  EXPECT_TRUE(u.HasEdge(3, 4));
  EXPECT_EQ(Complement(Complement(Cycle(6))), Cycle(6));
  EXPECT_EQ(Complement(Complete(4)).size(), 0);
}

TEST(GraphTest, Relabel) {
  const Graph p = Path(3);  // 0-1-2
  const Graph q = Relabel(p, {1, 0, 2});
  EXPECT_TRUE(q.HasEdge(1, 0));
  EXPECT_TRUE(q.HasEdge(0, 2));
  EXPECT_FALSE(q.HasEdge(1, 2));
}

TEST(GraphTest, ComponentsAndConnectivity) {
  const Graph g = DisjointUnion(Path(3), Graph(1));
  EXPECT_EQ(Components(g).size(), 2u);
  EXPECT_FALSE(IsConnected(g));
  EXPECT_TRUE(IsConnected(Cycle(4)));
  EXPECT_TRUE(IsConnected(Graph(1)));
}

TEST(GraphTest, CutVertices) {
  EXPECT_EQ(CutVertices(Path(4)), (VertexSet{1, 2}));
  EXPECT_TRUE(CutVertices(Cycle(5)).empty());
  EXPECT_EQ(CutVertices(Propeller(2)), (VertexSet{0}));
}

}  // namespace
}  // namespace edgedom
