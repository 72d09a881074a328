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

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "edgedom/canonical.h"
#include "edgedom/error.h"
#include "edgedom/families.h"
#include "edgedom/graph6.h"
#include "edgedom/structure.h"
#include "edgedom/version.h"
#include "json.hpp"

namespace edgedom {
namespace {

struct FlagSpec {
  const char* name;
  Tri CensusFilter::*field;
};

constexpr FlagSpec kFlags[] = {
    {"connected", &CensusFilter::connected},
    {"k4_free", &CensusFilter::k4_free},
    {"girth_equals_3", &CensusFilter::girth_equals_3},
    {"wed", &CensusFilter::wed},
    {"equimatchable", &CensusFilter::equimatchable},
    {"diamond_free", &CensusFilter::diamond_free},
    {"bipartite", &CensusFilter::bipartite},
};

bool Passes(Tri t, bool value) {
  return t == Tri::kIgnore || (t == Tri::kRequire) == value;
}

int WorkerCount(int requested, std::size_t items) {
  const int jobs = std::max(1, requested);
  return static_cast<int>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, items)));
}

// Runs body(worker, begin, end) over [0, items) split into contiguous slices.
template <typename Body>
void ParallelSlices(int jobs, std::size_t items, Body body) {
  const int workers = WorkerCount(jobs, items);
  if (workers == 1) {
    body(0, std::size_t{0}, items);
    return;
  }
  std::vector<std::thread> threads;
  const std::size_t chunk = (items + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(items, w * chunk);
    const std::size_t end = std::min(items, begin + chunk);
    threads.emplace_back([=, &body] { body(w, begin, end); });
  }
  for (std::thread& t : threads) t.join();
}

std::vector<std::uint64_t> NextLevel(int k, const std::vector<std::uint64_t>& parents,
                                     int jobs) {
  const int workers = WorkerCount(jobs, parents.size());
  std::vector<std::unordered_set<std::uint64_t>> found(workers);
  ParallelSlices(jobs, parents.size(), [&](int w, std::size_t begin,
                                           std::size_t end) {
    auto& seen = found[w];
    for (std::size_t i = begin; i < end; ++i) {
      const Graph parent = UnpackUpperTriangle(k, parents[i]);
      for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) {
        Graph child = parent;
        const int v = child.AddVertex();
        for (int u : VertexSet(s)) child.AddEdge(u, v);
        seen.insert(Canonicalize(child).PackedKey());
      }
    }
  });
  std::unordered_set<std::uint64_t> merged = std::move(found[0]);
  for (int w = 1; w < workers; ++w) merged.insert(found[w].begin(), found[w].end());
  std::vector<std::uint64_t> out(merged.begin(), merged.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string TriName(Tri t) {
  return t == Tri::kRequire ? "require" : t == Tri::kForbid ? "forbid" : "ignore";
}

}  // namespace

CensusFilter CensusFilter::Reference() {
  CensusFilter f;
  f.k4_free = Tri::kRequire;
  f.girth_equals_3 = Tri::kRequire;
  f.wed = Tri::kRequire;
  return f;
}

CensusFilter CensusFilter::AllConnected() { return CensusFilter(); }

CensusFilter CensusFilter::Girth4() {
  CensusFilter f;
  f.girth_equals_3 = Tri::kForbid;
  f.wed = Tri::kRequire;
  f.bipartite = Tri::kForbid;
  return f;
}

std::string CensusFilter::ToString() const {
  std::string out;
  for (const FlagSpec& flag : kFlags) {
    const Tri t = this->*flag.field;
    if (t == Tri::kIgnore) continue;
    if (!out.empty()) out += ",";
    out += std::string(flag.name) + "=" + TriName(t);
  }
  return out;
}

CensusFilter CensusFilter::Parse(const std::string& spec) {
  CensusFilter f;
  f.connected = Tri::kIgnore;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("filter item needs '=': " + item);
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    Tri t;
    if (value == "require") {
      t = Tri::kRequire;
    } else if (value == "forbid") {
      t = Tri::kForbid;
    } else if (value == "ignore") {
      t = Tri::kIgnore;
    } else {
      throw InputError("filter value must be require, forbid or ignore: " + item);
    }
    bool known = false;
    for (const FlagSpec& flag : kFlags) {
      if (name == flag.name) {
        f.*flag.field = t;
        known = true;
      }
    }
    if (!known) throw InputError("unknown filter flag: " + name);
  }
  return f;
}

bool CensusFilter::Accepts(const Graph& g, const OracleOptions& options) const {
  if (!Passes(connected, IsConnected(g))) return false;
  if (!Passes(k4_free, IsK4Free(g))) return false;
  if (!Passes(girth_equals_3, FindTriangle(g).has_value())) return false;
  if (!Passes(bipartite, Bipartition(g).has_value())) return false;
  if (!Passes(diamond_free, !FindDiamond(g).has_value())) return false;
  if (equimatchable != Tri::kIgnore || wed == Tri::kRequire) {
    const bool em = IsEquimatchable(g, options);
    if (!Passes(equimatchable, em)) return false;
    if (wed == Tri::kRequire && !em) return false;
  }
  if (!Passes(wed, IsWellEdgeDominated(g, options))) return false;
  return true;
}

std::vector<Graph> GenerateConnected(int n, const CensusOptions& options) {
  const int cap = options.allow_order_10 ? 10 : 9;
  if (n < 1 || n > cap) {
    throw InputError("census order must be between 1 and " + std::to_string(cap));
  }
  std::vector<std::uint64_t> level = {0};  // K1
  for (int k = 1; k < n; ++k) level = NextLevel(k, level, options.jobs);
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t key : level) {
    Graph g = UnpackUpperTriangle(n, key);
    if (IsConnected(g)) out.push_back(std::move(g));
  }
  return out;
}

CensusReport RunCensus(int n, const CensusFilter& filter,
                       const CensusOptions& options, const std::string& preset) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Graph> graphs = GenerateConnected(n, options);
  CensusReport report;
  report.order = n;
  report.filter = filter;
  report.preset = preset;
  report.generated = static_cast<long>(graphs.size());

  const int workers = WorkerCount(options.jobs, graphs.size());
  std::vector<std::vector<std::pair<std::size_t, CensusEntry>>> kept(workers);
  ParallelSlices(options.jobs, graphs.size(), [&](int w, std::size_t begin,
                                                  std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Graph& g = graphs[i];
      CensusEntry entry;
      try {
        if (!filter.Accepts(g, options.oracle)) continue;
        if (options.compute_profiles) {
          entry.profile = ComputeProfile(g, options.oracle);
        }
      } catch (const ResourceLimitError& e) {
        entry.error = e.what();
      }
      entry.graph6 = WriteGraph6(g);
      kept[w].emplace_back(i, std::move(entry));
    }
  });
  // Slices are contiguous and in order, so concatenation preserves the
  // canonical sort of `graphs`.
  for (auto& part : kept) {
    for (auto& [index, entry] : part) {
      if (!entry.error.empty()) ++report.errors;
      report.entries.push_back(std::move(entry));
    }
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start).count();
  return report;
}

CatalogDiff DiffAgainstCatalog(const CensusReport& report,
                               const std::vector<std::string>& ids) {
  std::vector<std::pair<std::string, CanonicalForm>> expected;
  for (const std::string& id : ids) expected.emplace_back(id, Canonicalize(Named(id)));
  std::vector<bool> matched(expected.size(), false);
  CatalogDiff diff;
  for (const CensusEntry& e : report.entries) {
    const CanonicalForm form = Canonicalize(ParseGraph6(e.graph6));
    bool hit = false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (expected[i].second == form) {
        matched[i] = true;
        hit = true;
      }
    }
    if (!hit) diff.unexpected.push_back(e.graph6);
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!matched[i]) diff.missing.push_back(expected[i].first);
  }
  return diff;
}

std::string ReportSummaryJson(const CensusReport& report,
                              const std::optional<CatalogDiff>& diff,
                              bool include_timing) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["order"] = report.order;
  j["preset"] = report.preset;
  j["filter"] = report.filter.ToString();
  j["generated"] = report.generated;
  j["count"] = report.entries.size();
  j["errors"] = report.errors;
  if (include_timing) j["seconds"] = report.seconds;
  auto profiles = nlohmann::ordered_json::array();
  for (const CensusEntry& e : report.entries) {
    nlohmann::ordered_json p;
    p["graph6"] = e.graph6;
    if (e.profile) {
      p["gamma_prime"] = e.profile->gamma_prime;
      p["alpha_prime"] = e.profile->alpha_prime;
      p["upper_gamma_prime"] = e.profile->upper_gamma_prime;
      p["equimatchable"] = e.profile->equimatchable;
      p["well_edge_dominated"] = e.profile->well_edge_dominated;
    }
    if (!e.error.empty()) p["error"] = e.error;
    profiles.push_back(std::move(p));
  }
  j["profiles"] = std::move(profiles);
  if (diff) {
    j["catalog_diff"] = {{"missing", diff->missing},
                         {"unexpected", diff->unexpected}};
  }
  return j.dump();
}

std::string FormatReport(const CensusReport& report,
                         const std::optional<CatalogDiff>& diff,
                         bool include_timing) {
  std::ostringstream out;
  out << "# edgedom census " << kVersion << "\n";
  out << "# order: " << report.order << "\n";
  out << "# preset: " << report.preset << "\n";
  out << "# filter: " << report.filter.ToString() << "\n";
  if (report.preset == "paper") {
    out << "# scope: K4-free graphs containing a triangle; bipartite "
           "well-edge-dominated graphs are left out\n";
  }
  for (const CensusEntry& e : report.entries) out << e.graph6 << "\n";
  out << "#summary " << ReportSummaryJson(report, diff, include_timing)
      << "\n";
  return out.str();
}

}  // namespace edgedom
