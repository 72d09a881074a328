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

#ifndef EDGEDOM_CENSUS_H_
#define EDGEDOM_CENSUS_H_

#include <optional>
#include <string>
#include <vector>

#include "edgedom/domination.h"
#include "edgedom/graph.h"

namespace edgedom {

enum class Tri { kIgnore, kRequire, kForbid };

// Conjunction of per-property constraints. Generated graphs are always
// connected, so `connected` only matters for graphs read from elsewhere.
struct CensusFilter {
  Tri connected = Tri::kRequire;
  Tri k4_free = Tri::kIgnore;
  Tri girth_equals_3 = Tri::kIgnore;  // contains a triangle
  Tri wed = Tri::kIgnore;
  Tri equimatchable = Tri::kIgnore;
  Tri diamond_free = Tri::kIgnore;
  Tri bipartite = Tri::kIgnore;

  // k4_free, triangle, wed required.
  static CensusFilter Reference();
  static CensusFilter AllConnected();
  // triangle forbidden, wed required, bipartite forbidden.
  static CensusFilter Girth4();

  // "k4_free=require,girth_equals_3=require,..." listing non-ignored flags.
  std::string ToString() const;
  // Parses the ToString format; throws InputError.
  static CensusFilter Parse(const std::string& spec);

  // Evaluates cheap structural flags before the oracles.
  bool Accepts(const Graph& g, const OracleOptions& options = {}) const;
};

struct CensusOptions {
  int jobs = 1;
  bool allow_order_10 = false;
  bool compute_profiles = true;
  OracleOptions oracle;
};

struct CensusEntry {
  std::string graph6;  // canonical labeling
  std::optional<DominationProfile> profile;
  std::string error;   // oracle failure, e.g. a resource cap
};

struct CensusReport {
  int order = 0;
  CensusFilter filter;
  std::string preset;     // preset name or "custom"
  long generated = 0;     // connected graphs examined
  std::vector<CensusEntry> entries;  // sorted by canonical form
  int errors = 0;
  double seconds = 0;
};

// Every connected graph of order n exactly once up to isomorphism, in
// canonical labeling, sorted by canonical form. 1 <= n <= 9, or 10 with
// allow_order_10; InputError otherwise.
std::vector<Graph> GenerateConnected(int n, const CensusOptions& options = {});

CensusReport RunCensus(int n, const CensusFilter& filter,
                       const CensusOptions& options = {},
                       const std::string& preset = "custom");

struct CatalogDiff {
  std::vector<std::string> missing;     // catalog ids absent from the report
  std::vector<std::string> unexpected;  // report graph6 strings not listed
  bool empty() const { return missing.empty() && unexpected.empty(); }
};

// Symmetric difference under isomorphism between the report and catalog ids.
CatalogDiff DiffAgainstCatalog(const CensusReport& report,
                               const std::vector<std::string>& ids);

// Header lines starting with '#', one graph6 line per entry, and a final
// "#summary " line carrying a JSON object. Wall time is left out unless
// include_timing is set, so reports are byte-stable.
std::string FormatReport(const CensusReport& report,
                         const std::optional<CatalogDiff>& diff = {},
                         bool include_timing = false);
std::string ReportSummaryJson(const CensusReport& report,
                              const std::optional<CatalogDiff>& diff = {},
                              bool include_timing = false);

}  // namespace edgedom

#endif  // EDGEDOM_CENSUS_H_
