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

#ifndef EDGEDOM_FAMILIES_H_
#define EDGEDOM_FAMILIES_H_

#include <string>
#include <string_view>
#include <vector>

#include "edgedom/domination.h"
#include "edgedom/error.h"
#include "edgedom/graph.h"

namespace edgedom {

// Elementary graphs.
Graph Complete(int n);
Graph CompleteBipartite(int a, int b);  // part sizes a then b
Graph Cycle(int n);                      // n >= 3
Graph Path(int n);                       // n vertices
Graph Star(int leaves);                  // K_{1,leaves}, center 0

// Diamond on 0..3: exterior 0 and 3, interior 1 and 2.
Graph Diamond();
// House: 0 is the degree-two vertex of the triangle {0, 1, 2}; the square is
// 1-2-4-3 with 3 adjacent to 1 and 4 adjacent to 2.
Graph House();
// C7 on the cycle 0..6 plus the chord 0-3.
Graph C7Star();
// Vertex 0 joined to the path 1-2-3-4.
Graph Fan5();

// k >= 1 triangles {0, 2i+1, 2i+2} sharing the nose 0. Propeller(1) is K3.
Graph Propeller(int k);
// House() plus k >= 0 triangles {0, 2i+5, 2i+6} at its nose 0.
Graph Windmill(int k);
// Diamond() with n >= 1 leaves 4.. at exterior vertex 0.
Graph Kite(int n);
// Kite(1).
Graph KStar();

struct NoseFamily {
  enum class Kind { kPropeller, kWindmill };
  Kind kind = Kind::kPropeller;
  int triangles = 1;  // >= 1 for propellers, >= 0 for windmills
};
Graph Build(const NoseFamily& f);
// The propeller or windmill with `paths` >= 1 copies of P3 hung from its
// nose 0 by an end vertex; path i adds the vertices c_i, l_i in that order.
Graph ClassR(const NoseFamily& base, int paths);

// ----- Catalog of named graphs -------------------------------------------

struct CatalogEntry {
  std::string id;
  int order = 0;
  std::string graph6;
  int induced_diamonds = 0;
  int leaves = 0;
  int edges = 0;
};

// All entries in file order. The catalog is parsed and checked against the
// recorded counts and the oracles on first use; a failure is a logic_error.
const std::vector<CatalogEntry>& Catalog();
// Accepts catalog ids plus the aliases DH, Cr, F5, H, Kstar/K*. Throws
// InputError for unknown ids.
Graph Named(std::string_view id);
std::vector<std::string> CatalogIds();
// Ids W1..W13 or V1..V12; InputError for any other order.
std::vector<std::string> ReferenceIds(int order);

// ----- Class G ------------------------------------------------------------

// Data of one construction: a bipartite core G' = (A u B, E') with a windmill
// glued at each strongly detachable s_i, a propeller at each detachable x_i
// and a diamond nose at each support vertex y_i of A.
struct GClassRecipe {
  Graph core;
  std::vector<int> strong;                 // s_1..s_k
  std::vector<int> windmill_triangles;     // n_i >= 0 for W_i
  std::vector<int> detachable;             // x_1..x_r
  std::vector<int> propeller_triangles;    // n_i >= 1 for P_i
  std::vector<int> diamond_supports;       // y_1..y_l
};

class RecipeError : public PreconditionError {
 public:
  enum class Kind {
    kMalformed,              // sizes, ranges or repeated vertices
    kCoreNotConnected,
    kCoreTrivial,
    kCoreNotBipartite,
    kCoreNotWed,
    kCoreCardinality,        // needs |A| < |B|
    kDetachedNotInB,
    kReducedNotWed,          // G' - B'
    kGammaChanged,           // gamma'(G' - B') != gamma'(G')
    kTrivialComponent,       // G' - B' has an isolated vertex
    kReducedCardinality,     // needs |A| <= |B - B'|
    kNotStronglyDetachable,
    kSupportNotInA,
    kNotSupport,
  };
  RecipeError(Kind kind, const std::string& what)
      : PreconditionError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string RecipeErrorName(RecipeError::Kind kind);

// Checks every hypothesis of the construction with the oracles; throws
// RecipeError naming the first one that fails.
void ValidateRecipe(const GClassRecipe& recipe,
                    const OracleOptions& options = {});

// Where each attachment landed in the built graph.
struct GClassLayout {
  BipartitionInfo core_bipartition;  // in core (= built) vertex ids
  struct Attachment {
    enum class Kind { kWindmill, kPropeller, kDiamond };
    Kind kind;
    int nose = 0;  // core vertex
    int triangles = 0;
    std::vector<int> vertices;  // non-nose vertices in builder order
  };
  std::vector<Attachment> attachments;
};

// Validates, then glues. Core vertices keep their ids; attachment vertices
// follow in the order windmills, propellers, diamonds.
Graph BuildClassG(const GClassRecipe& recipe, GClassLayout* layout = nullptr,
                  const OracleOptions& options = {});
// |A| + l + sum over windmills (n_i + 2) + sum over propellers n_i.
int ClassGGammaFormula(const GClassRecipe& recipe);

// K3 glued at a detachable w, and the house's nose glued at a strongly
// detachable w. Core must be bipartite, connected, WED with |A| < |B|.
Graph BuildClassT(const Graph& core, int w,
                  const OracleOptions& options = {});
Graph BuildClassF(const Graph& core, int w,
                  const OracleOptions& options = {});

// Appends `piece` to `host`, identifying piece vertex `at` with host vertex
// `onto`. Host vertices keep their ids; the remaining piece vertices follow in
// increasing order. `new_ids`, if given, receives piece vertex -> result id.
Graph Attach(const Graph& host, int onto, const Graph& piece, int at,
             std::vector<int>* new_ids = nullptr);

// Identifies x in g1 with y in g2 after checking that both graphs are
// nontrivial, well-edge-dominated, and keep their edge domination number when
// the vertex is deleted (while staying well-edge-dominated).
Graph GlueWed(const Graph& g1, int x, const Graph& g2, int y,
              const OracleOptions& options = {});

}  // namespace edgedom

#endif  // EDGEDOM_FAMILIES_H_
