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

#ifndef EDGEDOM_RECOGNIZE_H_
#define EDGEDOM_RECOGNIZE_H_

#include <optional>
#include <string>
#include <vector>

#include "edgedom/domination.h"
#include "edgedom/families.h"
#include "edgedom/graph.h"
#include "edgedom/structure.h"

namespace edgedom {

// ----- Girth at least four -------------------------------------------------

enum class Girth4Class { kBipartite, kC5, kC7, kC7Star };
std::string Girth4ClassName(Girth4Class c);

// Requires g connected, well-edge-dominated (checked by oracle) and without
// triangles. Throws std::logic_error if g fits none of the four outcomes.
Girth4Class ClassifyGirth4(const Graph& g, const OracleOptions& options = {});

// ----- Exactly one triangle -----------------------------------------------

struct OneTriangleResult {
  enum class Kind { kT, kF, kK3, kCrystal, kHouse, kDreamHouse };
  Kind kind = Kind::kK3;
  // For kT and kF: the bipartite core, the glue vertex in core ids, and
  // core_vertices[i] = input vertex of core vertex i.
  Graph core;
  int w = -1;
  std::vector<int> core_vertices;
};
std::string OneTriangleKindName(OneTriangleResult::Kind k);

// Requires g connected, well-edge-dominated and with exactly one triangle.
// Throws std::logic_error if no decomposition is found.
OneTriangleResult ClassifyOneTriangle(const Graph& g,
                                      const OracleOptions& options = {});

// ----- Class G --------------------------------------------------------------

struct GCertificate {
  enum class Kind { kKStar, kPropeller, kWindmill, kGlued };
  Kind kind = Kind::kGlued;
  int triangles = 0;  // for kPropeller / kWindmill
  int nose = -1;      // input vertex, for kPropeller / kWindmill
  // kGlued: the recipe in core ids, and core_vertices[i] = input vertex of
  // core vertex i.
  GClassRecipe recipe;
  std::vector<int> core_vertices;
  struct Attachment {
    GClassLayout::Attachment::Kind kind;
    int nose = 0;  // input vertex
    int triangles = 0;
    std::vector<int> vertices;  // input vertices, nose excluded
  };
  std::vector<Attachment> attachments;
};
std::string CertificateKindName(GCertificate::Kind k);

// Rebuilds the graph the certificate describes (isomorphic to the input).
Graph Rebuild(const GCertificate& cert, const OracleOptions& options = {});

// Peels windmills, propellers and diamonds off their noses by degree
// signature, then checks every hypothesis of the construction on what is
// left. Requires g connected.
std::optional<GCertificate> RecognizeG(const Graph& g,
                                       const OracleOptions& options = {});

// ----- Main classification ------------------------------------------------

struct RecognitionVerdict {
  enum class Outcome { kNamedException, kMemberOfG, kMemberOfClass, kNotWed };
  Outcome outcome = Outcome::kNotWed;
  // Exception id (DH, F5, Cr, W1, W2, W3) or class tag.
  std::string name;
  std::optional<GCertificate> certificate;
  std::optional<OneTriangleResult> one_triangle;
  std::string reason;

  bool wed() const { return outcome != Outcome::kNotWed; }
};
std::string OutcomeName(RecognitionVerdict::Outcome o);

// Ids of the six graphs outside class G.
const std::vector<std::string>& ExceptionIds();

// Decides well-edge-domination of a connected K4-free graph of girth 3
// without running the exhaustive oracle. Throws PreconditionError outside
// that domain.
RecognitionVerdict ClassifyK4FreeGirth3(const Graph& g,
                                        const OracleOptions& options = {});

// Routes by structure: no triangle -> ClassifyGirth4, one triangle ->
// ClassifyOneTriangle (both after an oracle check), otherwise
// ClassifyK4FreeGirth3.
RecognitionVerdict Recognize(const Graph& g, const OracleOptions& options = {});

// ----- Layered small structure --------------------------------------------

struct SmallStructure {
  Triangle triangle{};
  VertexSet s;  // vertices with a neighbor on the triangle
  VertexSet i;  // the rest; independent
  // One of Cr, H, K, P, R, W; empty when the graph is in none of them.
  std::optional<std::string> tag;
};

// Searches every triangle for the layering T, S = N(T) - T, I = V - T - S
// with I independent. Requires g connected, K4-free and well-edge-dominated.
// nullopt when no triangle admits the layering.
std::optional<SmallStructure> CheckSmallStructure(
    const Graph& g, const OracleOptions& options = {});

// ----- Serialization --------------------------------------------------------

inline constexpr int kJsonSchemaVersion = 1;

std::string CertificateToJson(const GCertificate& cert, int indent = 2);
std::string VerdictToJson(const RecognitionVerdict& v, int indent = 2);

}  // namespace edgedom

#endif  // EDGEDOM_RECOGNIZE_H_
