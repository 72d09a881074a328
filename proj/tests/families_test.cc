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

#include "edgedom/families.h"

#include <gtest/gtest.h>

#include "edgedom/canonical.h"
#include "edgedom/error.h"
#include "edgedom/graph6.h"
#include "edgedom/structure.h"
#include "support/oracles.h"

namespace edgedom {
namespace {

TEST(BuildersTest, Shapes) {
  EXPECT_EQ(Complete(5).size(), 10);
  EXPECT_EQ(CompleteBipartite(2, 3).size(), 6);
  EXPECT_EQ(Cycle(7).size(), 7);
  EXPECT_EQ(Path(1).size(), 0);
  EXPECT_EQ(Star(4).Degree(0), 4);
  EXPECT_EQ(Diamond().size(), 5);
  EXPECT_FALSE(Diamond().HasEdge(0, 3));
  EXPECT_EQ(House().size(), 6);
  EXPECT_EQ(Triangles(House()).size(), 1u);
  EXPECT_EQ(C7Star().size(), 8);
  EXPECT_EQ(Fan5().size(), 7);
}

TEST(BuildersTest, InvalidParameters) {
  EXPECT_THROW(Cycle(2), InputError);
  EXPECT_THROW(Propeller(0), InputError);
  EXPECT_THROW(Windmill(-1), InputError);
  EXPECT_THROW(Kite(0), InputError);
  EXPECT_THROW(ClassR({}, 0), InputError);
}

TEST(NamedTest, Examples) {
  const Graph house = Named("House");
  EXPECT_EQ(house.order(), 5);
  EXPECT_EQ(house.size(), 6);
  EXPECT_EQ(Triangles(house).size(), 1u);
  EXPECT_TRUE(ContainsInduced(Cycle(4), house));

  const Graph crystal = Named("Crystal");
  EXPECT_EQ(crystal.order(), 7);
  EXPECT_EQ(crystal.size(), 10);
  EXPECT_EQ(Girth(crystal), 3);

  const Graph w13 = Named("W13");
  EXPECT_EQ(w13.order(), 7);
  EXPECT_TRUE(IsIsomorphic(w13, Propeller(3)));
}

TEST(NamedTest, AliasesAndErrors) {
  EXPECT_EQ(Named("DH"), Named("DreamHouse"));
  EXPECT_EQ(Named("Cr"), Named("Crystal"));
  EXPECT_EQ(Named("F5"), Named("Fan5"));
  EXPECT_EQ(Named("H"), Named("House"));
  EXPECT_EQ(Named("K*"), Named("Kstar"));
  EXPECT_TRUE(IsIsomorphic(Named("W10"), Named("DH")));
  EXPECT_TRUE(IsIsomorphic(Named("W12"), Named("Cr")));
  EXPECT_THROW(Named("W14"), InputError);
}

TEST(CatalogTest, ReferenceEntries) {
  EXPECT_EQ(ReferenceIds(7).size(), 13u);
  EXPECT_EQ(ReferenceIds(8).size(), 12u);
  EXPECT_THROW(ReferenceIds(9), InputError);
  for (int order : {7, 8}) {
    for (const std::string& id : ReferenceIds(order)) {
      const Graph g = Named(id);
      SCOPED_TRACE(id);
      EXPECT_EQ(g.order(), order);
      EXPECT_TRUE(IsConnected(g));
      EXPECT_TRUE(IsK4Free(g));
      EXPECT_TRUE(FindTriangle(g));
      EXPECT_TRUE(IsWellEdgeDominated(g));
    }
  }
}

TEST(CatalogTest, DiamondCaptions) {
  for (const std::string& id : CatalogIds()) {
    const Graph g = Named(id);
    const bool diamond = FindDiamond(g).has_value();
    const bool listed = id == "W1" || id == "W2" || id == "W3" ||
                        id == "W4" || id == "V1" || id == "V2" ||
                        id == "V3" || id == "Kstar";
    if (id[0] == 'W' || id[0] == 'V' || id == "Kstar") {
      EXPECT_EQ(diamond, listed) << id;
    }
  }
}

TEST(CatalogTest, RecordedCountsMatchGraphs) {
  for (const CatalogEntry& e : Catalog()) {
    const Graph g = ParseGraph6(e.graph6);
    EXPECT_EQ(g.order(), e.order) << e.id;
    EXPECT_EQ(g.size(), e.edges) << e.id;
    EXPECT_EQ(Leaves(g).size(), e.leaves) << e.id;
    EXPECT_EQ(CountInducedDiamonds(g), e.induced_diamonds) << e.id;
  }
}

TEST(NoseFamiliesTest, Examples) {
  EXPECT_TRUE(IsIsomorphic(Propeller(1), Complete(3)));
  EXPECT_TRUE(IsIsomorphic(Windmill(0), House()));
  EXPECT_TRUE(IsIsomorphic(Windmill(1), Named("W8")));
  EXPECT_EQ(Kite(1).order(), 5);
  EXPECT_EQ(KStar().order(), 5);
  EXPECT_EQ(KStar().size(), 6);
  const Graph r = ClassR({NoseFamily::Kind::kPropeller, 1}, 1);
  EXPECT_EQ(r.order(), 5);
  EXPECT_TRUE(IsWellEdgeDominated(r));
}

TEST(NoseFamiliesTest, OracleAndGamma) {
  for (int k = 1; k <= 4; ++k) {
    EXPECT_TRUE(IsWellEdgeDominated(Propeller(k))) << k;
    EXPECT_EQ(EdgeDominationNumber(Propeller(k)), k);
    EXPECT_TRUE(IsWellEdgeDominated(Windmill(k))) << k;
    EXPECT_EQ(EdgeDominationNumber(Windmill(k)), k + 2);
  }
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(IsWellEdgeDominated(Kite(n)));
}

TEST(NoseFamiliesTest, ClassRIsWed) {
  for (auto kind : {NoseFamily::Kind::kPropeller, NoseFamily::Kind::kWindmill}) {
    for (int t = kind == NoseFamily::Kind::kPropeller ? 1 : 0; t <= 2; ++t) {
      for (int paths = 1; paths <= 2; ++paths) {
        const Graph g = ClassR({kind, t}, paths);
        EXPECT_TRUE(IsWellEdgeDominated(g)) << WriteGraph6(g);
      }
    }
  }
}

TEST(ClassGTest, StarWithPropeller) {
  GClassRecipe r;
  r.core = Star(3);
  r.detachable = {1};
  r.propeller_triangles = {1};
  GClassLayout layout;
  const Graph g = BuildClassG(r, &layout);
  EXPECT_EQ(g.order(), 6);
  EXPECT_TRUE(IsWellEdgeDominated(g));
  EXPECT_EQ(EdgeDominationNumber(g), ClassGGammaFormula(r));
  ASSERT_EQ(layout.attachments.size(), 1u);
  EXPECT_EQ(layout.attachments[0].nose, 1);
  EXPECT_EQ(layout.attachments[0].vertices, (std::vector<int>{4, 5}));
}

TEST(ClassGTest, DiamondOnPathCenter) {
  GClassRecipe r;
  r.core = Star(2);
  r.diamond_supports = {0};
  const Graph g = BuildClassG(r);
  EXPECT_EQ(g.order(), 6);
  EXPECT_TRUE(IsWellEdgeDominated(g));
  EXPECT_TRUE(IsIsomorphic(g, Kite(2)));
  EXPECT_EQ(EdgeDominationNumber(g), ClassGGammaFormula(r));
}

RecipeError::Kind ErrorKind(const GClassRecipe& r) {
  try {
    ValidateRecipe(r);
  } catch (const RecipeError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "recipe unexpectedly valid";
  return RecipeError::Kind::kMalformed;
}

TEST(ClassGTest, DistinctRecipeErrors) {
  using K = RecipeError::Kind;
  GClassRecipe r;
  r.core = Graph(6, {{0, 5}, {1, 5}, {2, 4}, {3, 4}, {3, 5}});
  r.detachable = {2, 3};
  r.propeller_triangles = {1, 1};
  EXPECT_EQ(ErrorKind(r), K::kTrivialComponent);

  r = {};
  r.core = Path(5);
  r.detachable = {0};
  r.propeller_triangles = {1};
  EXPECT_EQ(ErrorKind(r), K::kReducedNotWed);

  r = {};
  r.core = Path(4);
  EXPECT_EQ(ErrorKind(r), K::kCoreCardinality);

  r = {};
  r.core = Graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  EXPECT_EQ(ErrorKind(r), K::kCoreNotWed);

  r = {};
  r.core = Cycle(5);
  EXPECT_EQ(ErrorKind(r), K::kCoreNotBipartite);

  r = {};
  r.core = DisjointUnion(Star(2), Star(2));
  EXPECT_EQ(ErrorKind(r), K::kCoreNotConnected);

  r = {};
  r.core = Graph(1);
  EXPECT_EQ(ErrorKind(r), K::kCoreTrivial);

  r = {};
  r.core = Star(3);
  r.detachable = {0};
  r.propeller_triangles = {1};
  EXPECT_EQ(ErrorKind(r), K::kDetachedNotInB);

  r = {};
  r.core = Star(3);
  r.diamond_supports = {1};
  EXPECT_EQ(ErrorKind(r), K::kSupportNotInA);

  r = {};
  r.core = Star(3);
  r.propeller_triangles = {1};
  EXPECT_EQ(ErrorKind(r), K::kMalformed);
}

TEST(ClassGTest, CardinalityGate) {
  GClassRecipe r;
  r.core = Star(3);
  r.detachable = {1, 2, 3};
  r.propeller_triangles = {1, 1, 1};
  EXPECT_EQ(ErrorKind(r), RecipeError::Kind::kReducedCardinality);
  EXPECT_THROW(BuildClassG(r), RecipeError);
}

TEST(ClassGTest, SupportAndStrongDetachability) {
  using K = RecipeError::Kind;
  // C4 with a pendant at 0.
  GClassRecipe r;
  r.core = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
  ASSERT_TRUE(IsWellEdgeDominated(r.core));
  const BipartitionInfo bip = *Bipartition(r.core);
  ASSERT_TRUE(bip.a_smaller());
  EXPECT_EQ(bip.a, (VertexSet{0, 2}));
  r.diamond_supports = {2};
  EXPECT_EQ(ErrorKind(r), K::kNotSupport);
  r.diamond_supports = {};
  r.strong = {4};
  r.windmill_triangles = {0};
  EXPECT_EQ(ErrorKind(r), K::kNotStronglyDetachable);
}

TEST(ClassTFTest, Examples) {
  const Graph t = BuildClassT(Star(3), 1);
  EXPECT_EQ(t.order(), 6);
  EXPECT_TRUE(IsWellEdgeDominated(t));
  const Graph f = BuildClassF(Star(3), 1);
  EXPECT_EQ(f.order(), 8);
  EXPECT_TRUE(IsWellEdgeDominated(f));
  EXPECT_TRUE(IsIsomorphic(f, Named("V7")));
  EXPECT_THROW(BuildClassT(Star(3), 0), PreconditionError);
  EXPECT_THROW(BuildClassF(Star(3), 0), PreconditionError);
}

TEST(AttachTest, Ids) {
  std::vector<int> ids;
  const Graph g = Attach(Path(2), 1, Complete(3), 0, &ids);
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(ids, (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(g.HasEdge(1, 2));
  EXPECT_TRUE(g.HasEdge(2, 3));
}

TEST(GlueWedTest, Examples) {
  const Graph bowtie = GlueWed(Complete(3), 0, Complete(3), 0);
  EXPECT_TRUE(IsIsomorphic(bowtie, Propeller(2)));
  EXPECT_EQ(EdgeDominationNumber(bowtie), 2);

  const Graph w8 = GlueWed(Complete(3), 0, House(), 0);
  EXPECT_TRUE(IsIsomorphic(w8, Windmill(1)));
  EXPECT_EQ(EdgeDominationNumber(w8), 3);

  EXPECT_THROW(GlueWed(Path(4), 0, Complete(3), 0), PreconditionError);
  EXPECT_THROW(GlueWed(Graph(1), 0, Complete(3), 0), PreconditionError);
  EXPECT_THROW(GlueWed(Complete(3), 5, Complete(3), 0), InputError);
}

TEST(RandomRecipeTest, GeneratorProducesValidRecipes) {
  const std::vector<Graph> cores = testing::BipartiteWedCores(6);
  ASSERT_FALSE(cores.empty());
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const GClassRecipe r = testing::RandomValidRecipe(cores, 11, rng);
    EXPECT_NO_THROW(ValidateRecipe(r));
    GClassLayout layout;
    const Graph g = BuildClassG(r, &layout);
    EXPECT_EQ(g.order(), testing::BuiltOrder(r));
    EXPECT_LE(g.order(), 11);
    EXPECT_TRUE(IsConnected(g));
    EXPECT_TRUE(IsK4Free(g));
  }
}

}  // namespace
}  // namespace edgedom
