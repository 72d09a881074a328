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

#include "edgedom/census.h"

#include <gtest/gtest.h>

#include <set>

#include "edgedom/canonical.h"
#include "edgedom/error.h"
#include "edgedom/families.h"
#include "edgedom/graph6.h"
#include "edgedom/structure.h"
#include "json.hpp"
#include "support/oracles.h"

namespace edgedom {
namespace {

// Connected graphs on n labeled vertices, deduplicated by the permutation
// oracle.
std::size_t BruteConnectedCount(int n) {
  std::set<std::string> keys;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++bit) {
        if ((mask >> bit) & 1) g.AddEdge(u, v);
      }
    }
    if (IsConnected(g)) keys.insert(testing::BruteCanonicalKey(g));
  }
  return keys.size();
}

TEST(GenerateTest, SmallCountsMatchBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(GenerateConnected(n).size(), BruteConnectedCount(n)) << n;
  }
  EXPECT_EQ(GenerateConnected(4).size(), 6u);
  EXPECT_EQ(GenerateConnected(1).size(), 1u);
}

TEST(GenerateTest, OrderSixAndSevenAreDuplicateFree) {
  const std::vector<Graph> six = GenerateConnected(6);
  EXPECT_EQ(six.size(), 112u);
  const std::vector<Graph> seven = GenerateConnected(7);
  EXPECT_EQ(seven.size(), 853u);
  for (const auto* level : {&six, &seven}) {
    std::set<std::string> keys;
    for (const Graph& g : *level) {
      EXPECT_TRUE(IsConnected(g));
      keys.insert(testing::BruteCanonicalKey(g));
    }
    EXPECT_EQ(keys.size(), level->size());
  }
}

TEST(GenerateTest, OutputIsCanonicalAndSorted) {
  const std::vector<Graph> graphs = GenerateConnected(6);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    EXPECT_EQ(Canonicalize(graphs[i]).ToGraph(), graphs[i]);
    if (i > 0) {
      EXPECT_LT(PackUpperTriangle(graphs[i - 1]), PackUpperTriangle(graphs[i]));
    }
  }
}

TEST(GenerateTest, WorkerCountDoesNotChangeOutput) {
  CensusOptions four;
  four.jobs = 4;
  EXPECT_EQ(GenerateConnected(7, four), GenerateConnected(7));
}

TEST(GenerateTest, OrderRange) {
  EXPECT_THROW(GenerateConnected(0), InputError);
  EXPECT_THROW(GenerateConnected(10), InputError);
  EXPECT_THROW(GenerateConnected(11, CensusOptions{.allow_order_10 = true}),
               InputError);
}

TEST(FilterTest, ParseAndPrint) {
  const CensusFilter reference = CensusFilter::Reference();
  EXPECT_EQ(reference.ToString(),
            "connected=require,k4_free=require,girth_equals_3=require,"
            "wed=require");
  const CensusFilter parsed = CensusFilter::Parse(reference.ToString());
  EXPECT_EQ(parsed.ToString(), reference.ToString());
  EXPECT_EQ(CensusFilter::Parse("").ToString(), "");
  EXPECT_THROW(CensusFilter::Parse("wed"), InputError);
  EXPECT_THROW(CensusFilter::Parse("wed=maybe"), InputError);
  EXPECT_THROW(CensusFilter::Parse("shiny=require"), InputError);
}

TEST(FilterTest, CompositionIsOrderIndependent) {
  const CensusFilter a = CensusFilter::Parse(
      "connected=require,wed=require,diamond_free=forbid");
  const CensusFilter b = CensusFilter::Parse(
      "diamond_free=forbid,wed=require,connected=require");
  for (const Graph& g : GenerateConnected(6)) {
    EXPECT_EQ(a.Accepts(g), b.Accepts(g));
  }
  EXPECT_EQ(RunCensus(6, a).entries.size(), RunCensus(6, b).entries.size());
}

TEST(CensusTest, ReferencePresetOrderSeven) {
  const CensusReport report = RunCensus(7, CensusFilter::Reference(), {}, "paper");
  EXPECT_EQ(report.entries.size(), 13u);
  EXPECT_EQ(report.generated, 853);
  EXPECT_EQ(report.errors, 0);
  EXPECT_TRUE(DiffAgainstCatalog(report, ReferenceIds(7)).empty());
  for (const CensusEntry& e : report.entries) {
    ASSERT_TRUE(e.profile);
    EXPECT_TRUE(e.profile->equimatchable);
    EXPECT_EQ(e.profile->gamma_prime, e.profile->upper_gamma_prime);
  }
}

TEST(CensusTest, DiffDetectsOmission) {
  const CensusReport report = RunCensus(7, CensusFilter::Reference());
  std::vector<std::string> ids = ReferenceIds(7);
  ids.pop_back();
  const CatalogDiff diff = DiffAgainstCatalog(report, ids);
  EXPECT_EQ(diff.missing.size() + diff.unexpected.size(), 1u);
  EXPECT_EQ(diff.unexpected.size(), 1u);
  EXPECT_TRUE(IsIsomorphic(ParseGraph6(diff.unexpected[0]), Named("W13")));
}

TEST(CensusTest, Girth4PresetOrderFive) {
  const CensusReport report = RunCensus(5, CensusFilter::Girth4());
  ASSERT_EQ(report.entries.size(), 1u);
  EXPECT_TRUE(IsIsomorphic(ParseGraph6(report.entries[0].graph6), Cycle(5)));
}

TEST(CensusTest, AllConnectedOrderFour) {
  EXPECT_EQ(RunCensus(4, CensusFilter::AllConnected()).entries.size(), 6u);
}

TEST(CensusTest, ResourceErrorsAreRecorded) {
  CensusOptions options;
  options.oracle.edge_cap = 6;
  const CensusReport report = RunCensus(5, CensusFilter::AllConnected(),
                                        options);
  EXPECT_EQ(report.entries.size(), 21u);
  EXPECT_GT(report.errors, 0);
  int with_error = 0;
  for (const CensusEntry& e : report.entries) {
    if (!e.error.empty()) {
      ++with_error;
      EXPECT_FALSE(e.profile);
    }
  }
  EXPECT_EQ(with_error, report.errors);
}

TEST(ReportTest, Format) {
  const CensusReport report = RunCensus(5, CensusFilter::Girth4(), {},
                                        "girth4");
  const std::string text = FormatReport(report);
  EXPECT_EQ(text.rfind("# edgedom census ", 0), 0u);
  EXPECT_NE(text.find("\n# order: 5\n"), std::string::npos);
  const std::string c5 = WriteGraph6(Canonicalize(Cycle(5)).ToGraph());
  EXPECT_NE(text.find("\n" + c5 + "\n"), std::string::npos);
  const std::size_t summary = text.find("#summary ");
  ASSERT_NE(summary, std::string::npos);
  const auto j = nlohmann::json::parse(
      text.substr(summary + 9, text.size() - summary - 10));
  EXPECT_EQ(j["count"], 1);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["profiles"][0]["gamma_prime"], 2);
}

TEST(ReportTest, ReferenceScopeNote) {
  const CensusReport report = RunCensus(4, CensusFilter::Reference(), {}, "paper");
  EXPECT_NE(FormatReport(report).find("# scope:"), std::string::npos);
}

}  // namespace
}  // namespace edgedom
