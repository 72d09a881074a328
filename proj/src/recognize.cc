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

#include "edgedom/recognize.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "edgedom/canonical.h"
#include "edgedom/error.h"
#include "edgedom/graph6.h"
#include "json.hpp"

namespace edgedom {
namespace {

using AttachmentKind = GClassLayout::Attachment::Kind;

void RequireConnected(const Graph& g) {
  if (g.order() == 0 || !IsConnected(g)) {
    throw PreconditionError("graph must be connected and non-empty");
  }
}

bool IsoTo(const CanonicalForm& form, const Graph& h) {
  return form.order == h.order() && form == Canonicalize(h);
}

struct Peeled {
  struct Blade {
    int nose;
    int a;
    int b;
  };
  struct HouseAt {
    int nose;
    int p, q, c, d;
  };
  struct DiamondAt {
    int nose;
    int i1, i2, far;
  };
  std::vector<Blade> blades;
  std::vector<HouseAt> houses;
  std::vector<DiamondAt> diamonds;
  VertexSet claimed;
};

// Finds every attachment by its degree signature. nullopt when two
// attachments overlap or some triangle belongs to none of them.
std::optional<Peeled> Peel(const Graph& g) {
  Peeled out;
  const std::vector<Triangle> triangles = Triangles(g);
  std::vector<bool> covered(triangles.size(), false);
  auto claim = [&](std::initializer_list<int> vs) {
    for (int v : vs) {
      if (out.claimed.Contains(v)) return false;
      out.claimed.Insert(v);
    }
    return true;
  };
  auto cover = [&](int a, int b, int c) {
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    auto it = std::find(triangles.begin(), triangles.end(), t);
    if (it != triangles.end()) covered[it - triangles.begin()] = true;
  };

  for (const Triangle& t : triangles) {
    int low = 0;
    for (int v : t) low += g.Degree(v) == 2;
    if (low != 2) continue;
    int nose = t[0];
    for (int v : t) {
      if (g.Degree(v) != 2) nose = v;
    }
    int a = -1;
    int b = -1;
    for (int v : t) {
      if (v == nose) continue;
      (a < 0 ? a : b) = v;
    }
    if (!claim({a, b})) return std::nullopt;
    out.blades.push_back({nose, a, b});
    cover(nose, a, b);
  }

  for (int s = 0; s < g.order(); ++s) {
    for (int p : g.Neighbors(s)) {
      if (g.Degree(p) != 3) continue;
      for (int q : g.Neighbors(s) & g.Neighbors(p)) {
        if (q <= p || g.Degree(q) != 3) continue;
        const VertexSet cs = g.Neighbors(p) - VertexSet{s, q};
        const VertexSet ds = g.Neighbors(q) - VertexSet{s, p};
        const int c = cs.First();
        const int d = ds.First();
        if (c == d || g.Degree(c) != 2 || g.Degree(d) != 2 ||
            !g.HasEdge(c, d)) {
          continue;
        }
        if (!claim({p, q, c, d})) return std::nullopt;
        out.houses.push_back({s, p, q, c, d});
        cover(s, p, q);
      }
    }
  }

  for (const Edge& e : g.Edges()) {
    if (g.Degree(e.u) != 3 || g.Degree(e.v) != 3) continue;
    const VertexSet common = g.Neighbors(e.u) & g.Neighbors(e.v);
    if (common.size() != 2) continue;
    const int x = common.First();
    const int y = (common - VertexSet::Single(x)).First();
    if (g.HasEdge(x, y)) continue;
    const bool x_far = g.Degree(x) == 2;
    const bool y_far = g.Degree(y) == 2;
    if (x_far == y_far) continue;
    const int far = x_far ? x : y;
    const int nose = x_far ? y : x;
    if (!claim({e.u, e.v, far})) return std::nullopt;
    out.diamonds.push_back({nose, e.u, e.v, far});
    cover(nose, e.u, e.v);
    cover(far, e.u, e.v);
  }

  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    return std::nullopt;
  }
  return out;
}

std::string AttachmentKindName(AttachmentKind k) {
  switch (k) {
    case AttachmentKind::kWindmill: return "windmill";
    case AttachmentKind::kPropeller: return "propeller";
    case AttachmentKind::kDiamond: return "diamond";
  }
  return "unknown";
}

nlohmann::ordered_json ToJson(const std::vector<int>& v) {
  return nlohmann::ordered_json(v);
}

nlohmann::ordered_json CertificateJson(const GCertificate& cert) {
  nlohmann::ordered_json j;
  j["kind"] = CertificateKindName(cert.kind);
  if (cert.kind == GCertificate::Kind::kPropeller ||
      cert.kind == GCertificate::Kind::kWindmill) {
    j["nose"] = cert.nose;
    j["triangles"] = cert.triangles;
  }
  if (cert.kind == GCertificate::Kind::kGlued) {
    const GClassRecipe& r = cert.recipe;
    j["core_graph6"] = WriteGraph6(r.core);
    j["core_vertices"] = ToJson(cert.core_vertices);
    if (auto bip = Bipartition(r.core)) {
      j["core_a"] = ToJson(bip->a.ToVector());
      j["core_b"] = ToJson(bip->b.ToVector());
    }
    j["strongly_detachable"] = ToJson(r.strong);
    j["windmill_triangles"] = ToJson(r.windmill_triangles);
    j["detachable"] = ToJson(r.detachable);
    j["propeller_triangles"] = ToJson(r.propeller_triangles);
    j["diamond_supports"] = ToJson(r.diamond_supports);
    auto list = nlohmann::ordered_json::array();
    for (const GCertificate::Attachment& a : cert.attachments) {
      nlohmann::ordered_json aj;
      aj["kind"] = AttachmentKindName(a.kind);
      aj["nose"] = a.nose;
      aj["triangles"] = a.triangles;
      aj["vertices"] = ToJson(a.vertices);
      list.push_back(std::move(aj));
    }
    j["attachments"] = std::move(list);
  }
  return j;
}

std::optional<std::string> SmallClassTag(const Graph& g) {
  const CanonicalForm form = Canonicalize(g);
  const int n = g.order();
  if (IsoTo(form, Named("Crystal"))) return "Cr";
  if (IsoTo(form, House())) return "H";
  if (n >= 5 && IsoTo(form, Kite(n - 4))) return "K";
  if (n % 2 == 0) return std::nullopt;
  if (n >= 3 && IsoTo(form, Propeller((n - 1) / 2))) return "P";
  if (n >= 5 && IsoTo(form, Windmill((n - 5) / 2))) return "W";
  for (int k = 1; n - 2 * k >= 3; ++k) {
    const int base = n - 2 * k;
    if (IsoTo(form, ClassR({NoseFamily::Kind::kPropeller, (base - 1) / 2}, k))) {
      return "R";
    }
    if (base >= 5 &&
        IsoTo(form, ClassR({NoseFamily::Kind::kWindmill, (base - 5) / 2}, k))) {
      return "R";
    }
  }
  return std::nullopt;
}

}  // namespace

std::string Girth4ClassName(Girth4Class c) {
  switch (c) {
    case Girth4Class::kBipartite: return "bipartite";
    case Girth4Class::kC5: return "C5";
    case Girth4Class::kC7: return "C7";
    case Girth4Class::kC7Star: return "C7star";
  }
  return "unknown";
}

Girth4Class ClassifyGirth4(const Graph& g, const OracleOptions& options) {
  RequireConnected(g);
  if (FindTriangle(g)) throw PreconditionError("graph contains a triangle");
  if (!IsWellEdgeDominated(g, options)) {
    throw PreconditionError("graph is not well-edge-dominated");
  }
  if (Bipartition(g)) return Girth4Class::kBipartite;
  if (IsIsomorphic(g, Cycle(5))) return Girth4Class::kC5;
  if (IsIsomorphic(g, Cycle(7))) return Girth4Class::kC7;
  if (IsIsomorphic(g, C7Star())) return Girth4Class::kC7Star;
  throw std::logic_error(
      "triangle-free well-edge-dominated graph " + WriteGraph6(g) +
      " is neither bipartite nor C5, C7, C7*");
}

std::string OneTriangleKindName(OneTriangleResult::Kind k) {
  switch (k) {
    case OneTriangleResult::Kind::kT: return "T";
    case OneTriangleResult::Kind::kF: return "F";
    case OneTriangleResult::Kind::kK3: return "K3";
    case OneTriangleResult::Kind::kCrystal: return "Cr";
    case OneTriangleResult::Kind::kHouse: return "H";
    case OneTriangleResult::Kind::kDreamHouse: return "DH";
  }
  return "unknown";
}

OneTriangleResult ClassifyOneTriangle(const Graph& g,
                                      const OracleOptions& options) {
  RequireConnected(g);
  const std::vector<Triangle> triangles = Triangles(g);
  if (triangles.size() != 1) {
    throw PreconditionError("graph must contain exactly one triangle");
  }
  if (!IsWellEdgeDominated(g, options)) {
    throw PreconditionError("graph is not well-edge-dominated");
  }
  using Kind = OneTriangleResult::Kind;
  OneTriangleResult out;
  const CanonicalForm form = Canonicalize(g);
  const std::pair<Kind, Graph> named[] = {
      {Kind::kK3, Complete(3)},
      {Kind::kCrystal, Named("Crystal")},
      {Kind::kHouse, House()},
      {Kind::kDreamHouse, Named("DreamHouse")},
  };
  for (const auto& [kind, h] : named) {
    if (IsoTo(form, h)) {
      out.kind = kind;
      return out;
    }
  }

  auto try_core = [&](Kind kind, int w, VertexSet drop) -> bool {
    std::vector<int> map;
    Graph core = InducedSubgraph(g, g.Vertices() - drop, &map);
    const int cw = map[w];
    auto bip = Bipartition(core);
    if (!bip || !bip->a_smaller() || !bip->b.Contains(cw)) return false;
    if (!IsConnected(core) || !IsWellEdgeDominated(core, options)) {
      return false;
    }
    const DetachabilityReport rep =
        AnalyzeDetachability(core, *bip, cw, options);
    if (kind == Kind::kT ? !rep.detachable : !rep.strongly_detachable) {
      return false;
    }
    out.kind = kind;
    out.core = std::move(core);
    out.w = cw;
    out.core_vertices.assign(out.core.order(), -1);
    for (int v = 0; v < g.order(); ++v) {
      if (map[v] >= 0) out.core_vertices[map[v]] = v;
    }
    return true;
  };

  const Triangle& t = triangles[0];
  for (int x : t) {
    VertexSet others;
    for (int v : t) {
      if (v != x) others.Insert(v);
    }
    const int p = others.First();
    const int q = (others - VertexSet::Single(p)).First();
    // House with nose x: p and q each continue into the square.
    if (g.Degree(p) == 3 && g.Degree(q) == 3) {
      const int c = (g.Neighbors(p) - VertexSet{x, q}).First();
      const int d = (g.Neighbors(q) - VertexSet{x, p}).First();
      if (c != d && g.Degree(c) == 2 && g.Degree(d) == 2 && g.HasEdge(c, d) &&
          try_core(Kind::kF, x, VertexSet{p, q, c, d})) {
        return out;
      }
    }
    if (g.Degree(p) == 2 && g.Degree(q) == 2 &&
        try_core(Kind::kT, x, VertexSet{p, q})) {
      return out;
    }
  }
  throw std::logic_error("one-triangle well-edge-dominated graph " +
                         WriteGraph6(g) + " has no decomposition");
}

std::string CertificateKindName(GCertificate::Kind k) {
  switch (k) {
    case GCertificate::Kind::kKStar: return "kstar";
    case GCertificate::Kind::kPropeller: return "propeller";
    case GCertificate::Kind::kWindmill: return "windmill";
    case GCertificate::Kind::kGlued: return "glued";
  }
  return "unknown";
}

Graph Rebuild(const GCertificate& cert, const OracleOptions& options) {
  switch (cert.kind) {
    case GCertificate::Kind::kKStar: return KStar();
    case GCertificate::Kind::kPropeller: return Propeller(cert.triangles);
    case GCertificate::Kind::kWindmill: return Windmill(cert.triangles);
    case GCertificate::Kind::kGlued:
      return BuildClassG(cert.recipe, nullptr, options);
  }
  throw std::logic_error("unknown certificate kind");
}

std::optional<GCertificate> RecognizeG(const Graph& g,
                                       const OracleOptions& options) {
  RequireConnected(g);
  const int n = g.order();
  const CanonicalForm form = Canonicalize(g);
  GCertificate cert;
  if (n == 5 && IsoTo(form, KStar())) {
    cert.kind = GCertificate::Kind::kKStar;
    return cert;
  }
  if (n % 2 == 1) {
    auto nose_of = [&] {
      int best = 0;
      for (int v = 0; v < n; ++v) {
        if (g.Degree(v) > g.Degree(best)) best = v;
      }
      return best;
    };
    if (n >= 3 && IsoTo(form, Propeller((n - 1) / 2))) {
      cert.kind = GCertificate::Kind::kPropeller;
      cert.triangles = (n - 1) / 2;
      cert.nose = nose_of();
      return cert;
    }
    if (n >= 5 && IsoTo(form, Windmill((n - 5) / 2))) {
      cert.kind = GCertificate::Kind::kWindmill;
      cert.triangles = (n - 5) / 2;
      cert.nose = nose_of();
      if (cert.triangles == 0) {
        // The house's nose is its degree-two vertex on the triangle.
        for (int v = 0; v < n; ++v) {
          const VertexSet nb = g.Neighbors(v);
          if (nb.size() == 2 &&
              g.HasEdge(nb.First(), (nb - VertexSet::Single(nb.First())).First())) {
            cert.nose = v;
          }
        }
      }
      return cert;
    }
  }

  const std::optional<Peeled> peeled = Peel(g);
  if (!peeled) return std::nullopt;

  std::vector<int> map;
  const Graph core = InducedSubgraph(g, g.Vertices() - peeled->claimed, &map);
  if (core.order() < 2 || !IsConnected(core)) return std::nullopt;

  std::map<int, int> house_at;
  std::map<int, std::vector<const Peeled::Blade*>> blades_at;
  for (const auto& h : peeled->houses) {
    if (house_at.count(h.nose)) return std::nullopt;
    house_at[h.nose] = static_cast<int>(&h - peeled->houses.data());
  }
  for (const auto& b : peeled->blades) blades_at[b.nose].push_back(&b);
  VertexSet diamond_noses;
  for (const auto& d : peeled->diamonds) {
    if (diamond_noses.Contains(d.nose)) return std::nullopt;
    diamond_noses.Insert(d.nose);
  }

  cert.kind = GCertificate::Kind::kGlued;
  cert.recipe.core = core;
  cert.core_vertices.assign(core.order(), -1);
  for (int v = 0; v < n; ++v) {
    if (map[v] >= 0) cert.core_vertices[map[v]] = v;
  }

  VertexSet noses;
  for (const auto& [nose, _] : house_at) noses.Insert(nose);
  for (const auto& [nose, _] : blades_at) noses.Insert(nose);
  // Windmills first, then propellers, then diamonds, each by nose: the same
  // order BuildClassG appends them in.
  for (int nose : noses) {
    auto h = house_at.find(nose);
    if (h == house_at.end()) continue;
    const Peeled::HouseAt& house = peeled->houses[h->second];
    GCertificate::Attachment a{AttachmentKind::kWindmill, nose, 0,
                               {house.p, house.q, house.c, house.d}};
    for (const Peeled::Blade* b : blades_at[nose]) {
      a.vertices.push_back(b->a);
      a.vertices.push_back(b->b);
      ++a.triangles;
    }
    cert.recipe.strong.push_back(map[nose]);
    cert.recipe.windmill_triangles.push_back(a.triangles);
    cert.attachments.push_back(std::move(a));
  }
  for (int nose : noses) {
    if (house_at.count(nose)) continue;
    GCertificate::Attachment a{AttachmentKind::kPropeller, nose, 0, {}};
    for (const Peeled::Blade* b : blades_at[nose]) {
      a.vertices.push_back(b->a);
      a.vertices.push_back(b->b);
      ++a.triangles;
    }
    cert.recipe.detachable.push_back(map[nose]);
    cert.recipe.propeller_triangles.push_back(a.triangles);
    cert.attachments.push_back(std::move(a));
  }
  for (int nose : diamond_noses) {
    if (noses.Contains(nose)) return std::nullopt;
    for (const auto& d : peeled->diamonds) {
      if (d.nose != nose) continue;
      cert.attachments.push_back(
          {AttachmentKind::kDiamond, nose, 0, {d.i1, d.i2, d.far}});
    }
    cert.recipe.diamond_supports.push_back(map[nose]);
  }

  try {
    ValidateRecipe(cert.recipe, options);
  } catch (const RecipeError&) {
    return std::nullopt;
  }
  return cert;
}

std::string OutcomeName(RecognitionVerdict::Outcome o) {
  switch (o) {
    case RecognitionVerdict::Outcome::kNamedException: return "named-exception";
    case RecognitionVerdict::Outcome::kMemberOfG: return "member-of-G";
    case RecognitionVerdict::Outcome::kMemberOfClass: return "member-of-class";
    case RecognitionVerdict::Outcome::kNotWed: return "not-wed";
  }
  return "unknown";
}

const std::vector<std::string>& ExceptionIds() {
  static const auto* ids =
      new std::vector<std::string>{"DH", "F5", "Cr", "W1", "W2", "W3"};
  return *ids;
}

RecognitionVerdict ClassifyK4FreeGirth3(const Graph& g,
                                        const OracleOptions& options) {
  RequireConnected(g);
  if (!IsK4Free(g)) throw PreconditionError("graph contains K4");
  if (!FindTriangle(g)) throw PreconditionError("graph has girth other than 3");

  static const auto* exception_forms = [] {
    auto* forms = new std::vector<CanonicalForm>;
    for (const std::string& id : ExceptionIds()) {
      forms->push_back(Canonicalize(Named(id)));
    }
    return forms;
  }();
  RecognitionVerdict v;
  const CanonicalForm form = Canonicalize(g);
  for (std::size_t i = 0; i < ExceptionIds().size(); ++i) {
    const std::string& id = ExceptionIds()[i];
    if (form == (*exception_forms)[i]) {
      v.outcome = RecognitionVerdict::Outcome::kNamedException;
      v.name = id;
      return v;
    }
  }
  if (auto cert = RecognizeG(g, options)) {
    v.outcome = RecognitionVerdict::Outcome::kMemberOfG;
    v.name = "G";
    v.certificate = std::move(cert);
    return v;
  }
  v.outcome = RecognitionVerdict::Outcome::kNotWed;
  v.reason = "not an exceptional graph and no class-G decomposition";
  return v;
}

RecognitionVerdict Recognize(const Graph& g, const OracleOptions& options) {
  RequireConnected(g);
  const std::size_t triangles = Triangles(g).size();
  if (triangles >= 2) return ClassifyK4FreeGirth3(g, options);

  RecognitionVerdict v;
  if (!IsWellEdgeDominated(g, options)) {
    v.outcome = RecognitionVerdict::Outcome::kNotWed;
    v.reason = "exhaustive oracle: minimal edge dominating sets differ in size";
    return v;
  }
  if (triangles == 0) {
    v.outcome = RecognitionVerdict::Outcome::kMemberOfClass;
    v.name = Girth4ClassName(ClassifyGirth4(g, options));
    return v;
  }
  OneTriangleResult r = ClassifyOneTriangle(g, options);
  using Kind = OneTriangleResult::Kind;
  if (r.kind == Kind::kCrystal || r.kind == Kind::kDreamHouse) {
    v.outcome = RecognitionVerdict::Outcome::kNamedException;
  } else {
    v.outcome = RecognitionVerdict::Outcome::kMemberOfClass;
    v.certificate = RecognizeG(g, options);
  }
  v.name = OneTriangleKindName(r.kind);
  v.one_triangle = std::move(r);
  return v;
}

std::optional<SmallStructure> CheckSmallStructure(
    const Graph& g, const OracleOptions& options) {
  RequireConnected(g);
  if (!IsK4Free(g)) throw PreconditionError("graph contains K4");
  if (!IsWellEdgeDominated(g, options)) {
    throw PreconditionError("graph is not well-edge-dominated");
  }
  for (const Triangle& t : Triangles(g)) {
    const VertexSet tri{t[0], t[1], t[2]};
    const VertexSet s = g.NeighborsOf(tri);
    const VertexSet i = g.Vertices() - tri - s;
    bool independent = true;
    for (int v : i) independent = independent && (g.Neighbors(v) & i).empty();
    if (!independent) continue;
    return SmallStructure{t, s, i, SmallClassTag(g)};
  }
  return std::nullopt;
}

std::string CertificateToJson(const GCertificate& cert, int indent) {
  nlohmann::ordered_json j;
  j["schema_version"] = kJsonSchemaVersion;
  j.update(CertificateJson(cert));
  return j.dump(indent);
}

std::string VerdictToJson(const RecognitionVerdict& v, int indent) {
  nlohmann::ordered_json j;
  j["schema_version"] = kJsonSchemaVersion;
  j["outcome"] = OutcomeName(v.outcome);
  j["wed"] = v.wed();
  if (!v.name.empty()) j["name"] = v.name;
  if (v.one_triangle && (v.one_triangle->kind == OneTriangleResult::Kind::kT ||
                         v.one_triangle->kind == OneTriangleResult::Kind::kF)) {
    nlohmann::ordered_json o;
    o["core_graph6"] = WriteGraph6(v.one_triangle->core);
    o["core_vertices"] = ToJson(v.one_triangle->core_vertices);
    o["w"] = v.one_triangle->w;
    j["one_triangle"] = std::move(o);
  }
  if (v.certificate) j["certificate"] = CertificateJson(*v.certificate);
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j.dump(indent);
}

}  // namespace edgedom
