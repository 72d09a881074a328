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

// Command-line front end: check, census, generate, recognize, reduce, info.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "edgedom/canonical.h"
#include "edgedom/census.h"
#include "edgedom/domination.h"
#include "edgedom/error.h"
#include "edgedom/families.h"
#include "edgedom/graph.h"
#include "edgedom/graph6.h"
#include "edgedom/recognize.h"
#include "edgedom/structure.h"
#include "edgedom/version.h"
#include "json.hpp"

namespace edgedom {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitDiff = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitPrecondition = 4;

struct InputSpec {
  std::string named;
  std::string g6;
  std::string file;
};

struct NamedGraph {
  std::string label;
  Graph graph;
};

void AddInputOptions(CLI::App* cmd, InputSpec* in) {
  cmd->add_option("--named", in->named, "Catalog id or alias (W4, DH, ...)");
  cmd->add_option("--g6", in->g6, "Graph in graph6 format");
  cmd->add_option("--file", in->file,
                  "File with one graph6 string per line; '#' lines skipped");
}

bool HasInput(const InputSpec& in) {
  return !in.named.empty() || !in.g6.empty() || !in.file.empty();
}

std::vector<NamedGraph> LoadInputs(const InputSpec& in) {
  const int sources = !in.named.empty() + !in.g6.empty() + !in.file.empty();
  if (sources != 1) {
    throw InputError("give exactly one of --named, --g6, --file");
  }
  if (!in.named.empty()) return {{in.named, Named(in.named)}};
  if (!in.g6.empty()) return {{in.g6, ParseGraph6(in.g6)}};
  std::ifstream file(in.file);
  if (!file) throw InputError("cannot read " + in.file);
  std::vector<NamedGraph> out;
  std::string line;
  int number = 0;
  while (std::getline(file, line)) {
    ++number;
    if (line.empty() || line[0] == '#' || line == "\r") continue;
    try {
      Graph g = ParseGraph6(line);
      out.push_back({WriteGraph6(g), std::move(g)});
    } catch (const InputError& e) {
      throw InputError(in.file + ":" + std::to_string(number) + ": " +
                       e.what());
    }
  }
  if (out.empty()) throw InputError(in.file + " holds no graphs");
  return out;
}

void RequireFormat(const std::string& format,
                   std::initializer_list<const char*> allowed,
                   const std::string& command) {
  for (const char* f : allowed) {
    if (format == f) return;
  }
  throw InputError("--format " + format + " is not available for " + command);
}

Json EdgesJson(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.Edges()) edges.push_back({e.u, e.v});
  return edges;
}

void PrintTable(std::ostream& out,
                const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  for (const auto& [key, value] : rows) {
    out << key << std::string(width - key.size() + 2, ' ') << value << "\n";
  }
}

std::string Bool(bool b) { return b ? "true" : "false"; }

// ----- check -----------------------------------------------------------------

Json CheckJson(const Graph& g, const OracleOptions& oracle) {
  const DominationProfile p = ComputeProfile(g, oracle);
  const auto girth = Girth(g);
  Json j;
  j["schema_version"] = kJsonSchemaVersion;
  j["graph6"] = WriteGraph6(g);
  j["order"] = g.order();
  j["size"] = g.size();
  j["connected"] = IsConnected(g);
  j["gamma_prime"] = p.gamma_prime;
  j["alpha_prime"] = p.alpha_prime;
  j["upper_gamma_prime"] = p.upper_gamma_prime;
  j["equimatchable"] = p.equimatchable;
  j["well_edge_dominated"] = p.well_edge_dominated;
  j["girth"] = girth ? Json(*girth) : Json(nullptr);
  j["k4_free"] = IsK4Free(g);
  j["diamond"] = FindDiamond(g).has_value();
  return j;
}

int RunCheck(const InputSpec& in, const std::string& format,
             const OracleOptions& oracle) {
  RequireFormat(format, {"json", "table"}, "check");
  for (const NamedGraph& item : LoadInputs(in)) {
    const Json j = CheckJson(item.graph, oracle);
    if (format == "json") {
      std::cout << j.dump() << "\n";
      continue;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("input", item.label);
    for (const auto& [key, value] : j.items()) {
      if (key == "schema_version") continue;
      rows.emplace_back(key, value.is_string() ? value.get<std::string>()
                                               : value.dump());
    }
    PrintTable(std::cout, rows);
  }
  return 0;
}

// ----- census ------------------------------------------------------------------

struct CensusArgs {
  int order = 0;
  std::string preset = "paper";
  std::string filter;
  bool verify = false;
  bool allow_order_10 = false;
  bool timing = false;
  bool no_profiles = false;
  std::string output;
};

CensusFilter ResolveFilter(const CensusArgs& a) {
  if (!a.filter.empty() && a.preset != "custom") {
    throw InputError("--filter needs --preset custom");
  }
  if (a.preset == "paper") return CensusFilter::Reference();
  if (a.preset == "all-connected") return CensusFilter::AllConnected();
  if (a.preset == "girth4") return CensusFilter::Girth4();
  if (a.preset == "custom") return CensusFilter::Parse(a.filter);
  throw InputError("unknown preset " + a.preset);
}

int RunCensusCommand(const CensusArgs& a, const std::string& format, int jobs,
                     const OracleOptions& oracle) {
  RequireFormat(format, {"graph6", "json", "table"}, "census");
  const CensusFilter filter = ResolveFilter(a);
  CensusOptions options;
  options.jobs = jobs;
  options.allow_order_10 = a.allow_order_10;
  options.compute_profiles = !a.no_profiles;
  options.oracle = oracle;
  const CensusReport report = RunCensus(a.order, filter, options, a.preset);

  std::optional<CatalogDiff> diff;
  if (a.verify) diff = DiffAgainstCatalog(report, ReferenceIds(a.order));

  std::ostringstream text;
  if (format == "graph6") {
    text << FormatReport(report, diff, a.timing);
  } else if (format == "json") {
    text << ReportSummaryJson(report, diff, a.timing) << "\n";
  } else {
    std::vector<std::pair<std::string, std::string>> rows = {
        {"order", std::to_string(report.order)},
        {"preset", report.preset},
        {"filter", report.filter.ToString()},
        {"generated", std::to_string(report.generated)},
        {"count", std::to_string(report.entries.size())},
        {"errors", std::to_string(report.errors)},
    };
    if (diff) rows.emplace_back("catalog_diff", diff->empty() ? "empty" : "nonempty");
    if (a.timing) rows.emplace_back("seconds", std::to_string(report.seconds));
    PrintTable(text, rows);
  }
  if (a.output.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream file(a.output);
    if (!file) throw InputError("cannot write " + a.output);
    file << text.str();
  }

  if (diff && !diff->empty()) {
    for (const std::string& id : diff->missing) {
      std::cerr << "edgedom: catalog graph missing from census: " << id << "\n";
    }
    for (const std::string& g6 : diff->unexpected) {
      std::cerr << "edgedom: census graph not in catalog: " << g6 << "\n";
    }
    return kExitDiff;
  }
  return 0;
}

// ----- generate ----------------------------------------------------------------

int IntArg(const std::vector<std::string>& args, std::size_t i,
           const std::string& family) {
  if (i >= args.size()) {
    throw InputError(family + " needs " + std::to_string(i) + " parameter(s)");
  }
  try {
    std::size_t used = 0;
    const int value = std::stoi(args[i], &used);
    if (used != args[i].size()) throw std::invalid_argument(args[i]);
    return value;
  } catch (const std::exception&) {
    throw InputError("not an integer: " + args[i]);
  }
}

Graph Generate(const std::vector<std::string>& spec) {
  if (spec.empty()) throw InputError("generate needs a family name");
  const std::string& family = spec[0];
  const std::size_t params = spec.size() - 1;
  auto expect = [&](std::size_t count) {
    if (params != count) {
      throw InputError(family + " takes " + std::to_string(count) +
                       " parameter(s)");
    }
  };
  auto at = [&](std::size_t i) { return IntArg(spec, i, family); };
  if (family == "named") {
    expect(1);
    return Named(spec[1]);
  }
  if (family == "propeller") { expect(1); return Propeller(at(1)); }
  if (family == "windmill") { expect(1); return Windmill(at(1)); }
  if (family == "kite") { expect(1); return Kite(at(1)); }
  if (family == "kstar") { expect(0); return KStar(); }
  if (family == "class-r") {
    expect(3);
    NoseFamily base;
    if (spec[1] == "propeller") {
      base.kind = NoseFamily::Kind::kPropeller;
    } else if (spec[1] == "windmill") {
      base.kind = NoseFamily::Kind::kWindmill;
    } else {
      throw InputError("class-r base must be propeller or windmill");
    }
    base.triangles = at(2);
    return ClassR(base, at(3));
  }
  if (family == "complete") { expect(1); return Complete(at(1)); }
  if (family == "complete-bipartite") {
    expect(2);
    return CompleteBipartite(at(1), at(2));
  }
  if (family == "cycle") { expect(1); return Cycle(at(1)); }
  if (family == "path") { expect(1); return Path(at(1)); }
  if (family == "star") { expect(1); return Star(at(1)); }
  if (family == "diamond") { expect(0); return Diamond(); }
  if (family == "house") { expect(0); return House(); }
  if (family == "c7star") { expect(0); return C7Star(); }
  if (family == "fan5") { expect(0); return Fan5(); }
  throw InputError("unknown family " + family);
}

void EmitGraph(const Graph& g, const std::string& format,
               const std::string& name) {
  if (format == "graph6") {
    std::cout << WriteGraph6(g) << "\n";
  } else if (format == "dot") {
    std::cout << ToDot(g, name);
  } else if (format == "json") {
    Json j;
    j["schema_version"] = kJsonSchemaVersion;
    j["graph6"] = WriteGraph6(g);
    j["order"] = g.order();
    j["size"] = g.size();
    j["edges"] = EdgesJson(g);
    std::cout << j.dump() << "\n";
  } else {
    std::ostringstream edges;
    for (const Edge& e : g.Edges()) edges << e.u << "-" << e.v << " ";
    std::string list = edges.str();
    if (!list.empty()) list.pop_back();
    PrintTable(std::cout, {{"graph6", WriteGraph6(g)},
                           {"order", std::to_string(g.order())},
                           {"size", std::to_string(g.size())},
                           {"edges", list}});
  }
}

// ----- recognize ---------------------------------------------------------------

int RunRecognize(const InputSpec& in, const std::string& format,
                 const OracleOptions& oracle) {
  RequireFormat(format, {"json", "table"}, "recognize");
  for (const NamedGraph& item : LoadInputs(in)) {
    const RecognitionVerdict v = Recognize(item.graph, oracle);
    if (format == "json") {
      std::cout << VerdictToJson(v, -1) << "\n";
      continue;
    }
    std::vector<std::pair<std::string, std::string>> rows = {
        {"input", item.label},
        {"outcome", OutcomeName(v.outcome)},
        {"wed", Bool(v.wed())},
    };
    if (!v.name.empty()) rows.emplace_back("name", v.name);
    if (v.certificate) {
      rows.emplace_back("certificate",
                        CertificateKindName(v.certificate->kind));
    }
    if (!v.reason.empty()) rows.emplace_back("reason", v.reason);
    PrintTable(std::cout, rows);
  }
  return 0;
}

// ----- reduce ------------------------------------------------------------------

EdgeSet ParseMatching(const std::string& text) {
  std::vector<Edge> edges;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      throw InputError("matching edge must look like u-v: " + item);
    }
    try {
      std::size_t a = 0;
      std::size_t b = 0;
      const std::string left = item.substr(0, dash);
      const std::string right = item.substr(dash + 1);
      const int u = std::stoi(left, &a);
      const int v = std::stoi(right, &b);
      if (a != left.size() || b != right.size()) {
        throw std::invalid_argument(item);
      }
      edges.emplace_back(u, v);
    } catch (const std::logic_error&) {
      throw InputError("matching edge must look like u-v: " + item);
    }
  }
  return EdgeSet(std::move(edges));
}

int RunReduce(const InputSpec& in, const std::string& matching,
              bool drop_isolates, const std::string& format) {
  RequireFormat(format, {"graph6", "json", "dot", "table"}, "reduce");
  const EdgeSet m = ParseMatching(matching);
  for (const NamedGraph& item : LoadInputs(in)) {
    for (const Edge& e : m) {
      if (e.u < 0 || e.v >= item.graph.order()) {
        throw InputError("matching vertex out of range: " +
                         std::to_string(e.v));
      }
    }
    Graph g = Reduce(item.graph, m);
    if (drop_isolates) g = DropIsolates(g);
    EmitGraph(g, format, "reduced");
  }
  return 0;
}

// ----- info --------------------------------------------------------------------

int RunInfo(const InputSpec& in, const std::string& format) {
  RequireFormat(format, {"json", "table"}, "info");
  if (HasInput(in)) {
    for (const NamedGraph& item : LoadInputs(in)) {
      const Graph& g = item.graph;
      std::vector<int> degrees;
      for (int v = 0; v < g.order(); ++v) degrees.push_back(g.Degree(v));
      std::sort(degrees.rbegin(), degrees.rend());
      const auto girth = Girth(g);
      Json j;
      j["schema_version"] = kJsonSchemaVersion;
      j["graph6"] = WriteGraph6(g);
      j["canonical_graph6"] = WriteGraph6(Canonicalize(g).ToGraph());
      j["order"] = g.order();
      j["size"] = g.size();
      j["connected"] = IsConnected(g);
      j["bipartite"] = Bipartition(g).has_value();
      j["girth"] = girth ? Json(*girth) : Json(nullptr);
      j["triangles"] = Triangles(g).size();
      j["k4_free"] = IsK4Free(g);
      j["induced_diamonds"] = CountInducedDiamonds(g);
      j["leaves"] = Leaves(g).size();
      j["degrees"] = degrees;
      if (format == "json") {
        std::cout << j.dump() << "\n";
      } else {
        std::vector<std::pair<std::string, std::string>> rows;
        for (const auto& [key, value] : j.items()) {
          if (key == "schema_version") continue;
          rows.emplace_back(key, value.is_string()
                                     ? value.get<std::string>()
                                     : value.dump());
        }
        PrintTable(std::cout, rows);
      }
    }
    return 0;
  }
  Json j;
  j["schema_version"] = kJsonSchemaVersion;
  j["version"] = kVersion;
  j["presets"] = {{"paper", CensusFilter::Reference().ToString()},
                  {"all-connected", CensusFilter::AllConnected().ToString()},
                  {"girth4", CensusFilter::Girth4().ToString()}};
  Json catalog = Json::array();
  for (const CatalogEntry& e : Catalog()) {
    catalog.push_back({{"id", e.id}, {"order", e.order}, {"graph6", e.graph6}});
  }
  j["catalog"] = std::move(catalog);
  if (format == "json") {
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "edgedom " << kVersion << "\n\npresets\n";
  std::vector<std::pair<std::string, std::string>> presets;
  for (const auto& [name, filter] : j["presets"].items()) {
    presets.emplace_back("  " + name, filter.get<std::string>());
  }
  PrintTable(std::cout, presets);
  std::cout << "\ncatalog\n";
  std::vector<std::pair<std::string, std::string>> rows;
  for (const CatalogEntry& e : Catalog()) {
    rows.emplace_back("  " + e.id, std::to_string(e.order) + "  " + e.graph6);
  }
  PrintTable(std::cout, rows);
  return 0;
}

int DefaultJobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int Main(int argc, char** argv) {
  CLI::App app{"Edge domination toolkit: well-edge-dominated graphs, "
               "class recognition and census."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string format;
  int edge_cap = OracleOptions().edge_cap;
  int jobs = DefaultJobs();
  app.add_option("--edge-cap", edge_cap,
                 "Refuse oracle calls on graphs with more edges")
      ->check(CLI::Range(1, 64));
  app.add_option("--jobs", jobs, "Census worker threads")
      ->envname("EDGEDOM_JOBS")
      ->check(CLI::Range(1, 256));
  const auto format_check =
      CLI::IsMember({"json", "table", "dot", "graph6"});
  std::vector<std::pair<CLI::App*, std::string>> default_formats;
  auto add_format = [&](CLI::App* cmd, const std::string& fallback) {
    cmd->add_option("--format", format,
                    "json | table | dot | graph6 (default " + fallback + ")")
        ->check(format_check);
    default_formats.emplace_back(cmd, fallback);
    // Also accepted before the subcommand.
    cmd->add_option("--edge-cap", edge_cap, "Oracle edge cap")
        ->check(CLI::Range(1, 64));
    cmd->add_option("--jobs", jobs, "Census worker threads")
        ->envname("EDGEDOM_JOBS")
        ->check(CLI::Range(1, 256));
  };

  InputSpec input;

  CLI::App* check = app.add_subcommand("check", "Domination profile of a graph");
  AddInputOptions(check, &input);
  add_format(check, "json");

  CensusArgs census_args;
  CLI::App* census = app.add_subcommand("census",
                                        "Enumerate connected graphs of order n");
  census->add_option("n", census_args.order, "Order")->required();
  census->add_option("--preset", census_args.preset,
                     "paper | all-connected | girth4 | custom")
      ->check(CLI::IsMember({"paper", "all-connected", "girth4", "custom"}));
  census->add_option("--filter", census_args.filter,
                     "With --preset custom: flag=require|forbid|ignore,...");
  census->add_flag("--verify-catalog", census_args.verify,
                   "Compare with the order-7/8 catalog; exit 1 on a diff");
  census->add_flag("--allow-order-10", census_args.allow_order_10,
                   "Permit n = 10");
  census->add_flag("--timing", census_args.timing,
                   "Include wall time in the report");
  census->add_flag("--no-profiles", census_args.no_profiles,
                   "Skip per-graph domination profiles");
  census->add_option("--output", census_args.output, "Write report to a file");
  add_format(census, "graph6");

  std::vector<std::string> family;
  CLI::App* generate = app.add_subcommand("generate", "Build a named family");
  generate->add_option("family", family,
                       "propeller k | windmill k | kite n | kstar | "
                       "class-r propeller|windmill t paths | named ID | "
                       "complete n | complete-bipartite a b | cycle n | "
                       "path n | star k | diamond | house | c7star | fan5")
      ->required();
  add_format(generate, "graph6");

  CLI::App* recognize = app.add_subcommand(
      "recognize", "Classify a connected graph with a certificate");
  AddInputOptions(recognize, &input);
  add_format(recognize, "json");

  std::string matching;
  bool drop_isolates = false;
  CLI::App* reduce = app.add_subcommand(
      "reduce", "Delete every edge touching a matching");
  AddInputOptions(reduce, &input);
  reduce->add_option("--matching", matching, "Edges u-v, comma separated; empty by default");
  reduce->add_flag("--drop-isolates", drop_isolates,
                   "Remove isolated vertices afterwards");
  add_format(reduce, "graph6");

  CLI::App* info = app.add_subcommand(
      "info", "Tool version and catalog, or invariants of one graph");
  AddInputOptions(info, &input);
  add_format(info, "table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (format.empty()) {
    for (const auto& [cmd, fallback] : default_formats) {
      if (cmd->parsed()) format = fallback;
    }
  }

  const OracleOptions oracle{.edge_cap = edge_cap};
  try {
    if (check->parsed()) return RunCheck(input, format, oracle);
    if (census->parsed()) {
      return RunCensusCommand(census_args, format, jobs, oracle);
    }
    if (generate->parsed()) {
      RequireFormat(format, {"graph6", "json", "dot", "table"}, "generate");
      EmitGraph(Generate(family), format, family[0]);
      return 0;
    }
    if (recognize->parsed()) return RunRecognize(input, format, oracle);
    if (reduce->parsed()) return RunReduce(input, matching, drop_isolates, format);
    if (info->parsed()) return RunInfo(input, format);
  } catch (const InputError& e) {
    std::cerr << "edgedom: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceLimitError& e) {
    std::cerr << "edgedom: resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const PreconditionError& e) {
    std::cerr << "edgedom: precondition: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitInput;
}

}  // namespace
}  // namespace edgedom

int main(int argc, char** argv) { return edgedom::Main(argc, argv); }
