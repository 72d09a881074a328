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

#include "edgedom/canonical.h"

#include <array>
#include <bit>
#include <numeric>

#include "edgedom/error.h"

namespace edgedom {
namespace {

struct Partition {
  int count = 0;
  std::array<std::uint64_t, kMaxVertices> cells{};
};

// Splits cells by neighbor counts into other cells until the partition is
// equitable. Every decision depends only on cell structure, never on vertex
// names, so isomorphic inputs refine identically.
void Refine(const Graph& g, Partition& p) {
  const int n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.count && !changed; ++s) {
      const std::uint64_t splitter = p.cells[s];
      for (int c = 0; c < p.count; ++c) {
        const std::uint64_t cell = p.cells[c];
        if (std::has_single_bit(cell)) continue;
        std::array<std::uint64_t, kMaxVertices + 1> bucket{};
        int lo = n + 1;
        int hi = -1;
        for (int v : VertexSet(cell)) {
          const int k = std::popcount(g.row(v) & splitter);
          bucket[k] |= std::uint64_t{1} << v;
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) continue;
        int pieces = 0;
        std::array<std::uint64_t, kMaxVertices + 1> parts{};
        for (int k = lo; k <= hi; ++k) {
          if (bucket[k] != 0) parts[pieces++] = bucket[k];
        }
        for (int i = p.count - 1; i > c; --i) p.cells[i + pieces - 1] = p.cells[i];
        for (int i = 0; i < pieces; ++i) p.cells[c + i] = parts[i];
        p.count += pieces - 1;
        changed = true;
        break;
      }
    }
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm Run() {
    Partition root;
    if (n_ > 0) {
      root.count = 1;
      root.cells[0] = VertexSet::Range(n_).bits();
    }
    std::array<int, kMaxVertices> prefix{};
    Search(root, prefix, 0);

    CanonicalForm form;
    form.order = n_;
    form.rows.assign(best_rows_.begin(), best_rows_.begin() + n_);
    form.position.resize(n_);
    for (int i = 0; i < n_; ++i) form.position[best_perm_[i]] = i;
    return form;
  }

 private:
  using Perm = std::array<int, kMaxVertices>;

  void Search(Partition p, Perm& prefix, int depth) {
    Refine(g_, p);
    if (p.count == n_) {
      Leaf(p);
      return;
    }
    int target = -1;
    int best_size = n_ + 1;
    for (int c = 0; c < p.count; ++c) {
      const int sz = std::popcount(p.cells[c]);
      if (sz > 1 && sz < best_size) {
        best_size = sz;
        target = c;
      }
    }
    const std::uint64_t cell = p.cells[target];
    std::uint64_t tried = 0;
    for (int v : VertexSet(cell)) {
      if (tried != 0 && EquivalentToTried(prefix, depth, v, tried)) continue;
      tried |= std::uint64_t{1} << v;
      Partition child;
      child.count = p.count + 1;
      for (int c = 0; c < target; ++c) child.cells[c] = p.cells[c];
      child.cells[target] = std::uint64_t{1} << v;
      child.cells[target + 1] = cell & ~(std::uint64_t{1} << v);
      for (int c = target + 1; c < p.count; ++c) child.cells[c + 1] = p.cells[c];
      prefix[depth] = v;
      Search(child, prefix, depth + 1);
    }
  }

  // True when some automorphism fixing the prefix pointwise maps v onto an
  // already explored sibling.
  bool EquivalentToTried(const Perm& prefix, int depth, int v,
                         std::uint64_t tried) {
    if (automorphisms_.empty()) return false;
    std::array<int, kMaxVertices> parent;
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm& a : automorphisms_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) fixes = a[prefix[d]] == prefix[d];
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) {
        const int rx = find(x);
        const int ry = find(a[x]);
        if (rx != ry) parent[rx] = ry;
      }
    }
    const int root = find(v);
    for (int u : VertexSet(tried)) {
      if (find(u) == root) return true;
    }
    return false;
  }

  void Leaf(const Partition& p) {
    Perm perm{};
    Perm pos{};
    for (int i = 0; i < n_; ++i) {
      perm[i] = std::countr_zero(p.cells[i]);
      pos[perm[i]] = i;
    }
    std::array<std::uint64_t, kMaxVertices> rows{};
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (int w : g_.Neighbors(perm[i])) r |= std::uint64_t{1} << pos[w];
      rows[i] = r;
    }
    if (!have_best_) {
      have_best_ = true;
      best_rows_ = rows;
      best_perm_ = perm;
      return;
    }
    int cmp = 0;
    for (int i = 0; i < n_ && cmp == 0; ++i) {
      if (rows[i] != best_rows_[i]) cmp = rows[i] < best_rows_[i] ? -1 : 1;
    }
    if (cmp < 0) {
      best_rows_ = rows;
      best_perm_ = perm;
    } else if (cmp == 0) {
      Perm a{};
      for (int i = 0; i < n_; ++i) a[perm[i]] = best_perm_[i];
      automorphisms_.push_back(a);
    }
  }

  const Graph& g_;
  const int n_;
  bool have_best_ = false;
  std::array<std::uint64_t, kMaxVertices> best_rows_{};
  Perm best_perm_{};
  std::vector<Perm> automorphisms_;
};

inline int PairBit(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j

}  // namespace

Graph CanonicalForm::ToGraph() const {
  Graph g(order);
  for (int i = 0; i < order; ++i) {
    for (int j : VertexSet(rows[i])) {
      if (i < j) g.AddEdge(i, j);
    }
  }
  return g;
}

std::string CanonicalForm::Key() const {
  std::string key(1, static_cast<char>(order));
  for (std::uint64_t r : rows) {
    for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>(r >> (8 * b)));
  }
  return key;
}

std::uint64_t CanonicalForm::PackedKey() const {
  if (order > 11) throw PreconditionError("PackedKey requires order <= 11");
  std::uint64_t key = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((rows[i] >> j) & 1) key |= std::uint64_t{1} << PairBit(i, j);
    }
  }
  return key;
}

CanonicalForm Canonicalize(const Graph& g) { return Canonizer(g).Run(); }

bool IsIsomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return Canonicalize(a) == Canonicalize(b);
}

std::uint64_t PackUpperTriangle(const Graph& g) {
  if (g.order() > 11) throw PreconditionError("packing requires order <= 11");
  std::uint64_t key = 0;
  for (const Edge& e : g.Edges()) key |= std::uint64_t{1} << PairBit(e.u, e.v);
  return key;
}

Graph UnpackUpperTriangle(int order, std::uint64_t key) {
  Graph g(order);
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((key >> PairBit(i, j)) & 1) g.AddEdge(i, j);
    }
  }
  return g;
}

}  // namespace edgedom
